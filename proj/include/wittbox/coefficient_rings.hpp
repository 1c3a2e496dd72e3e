#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "wittbox/fq_field.hpp"
#include "wittbox/galois_ring.hpp"

namespace wittbox {

enum class Domain { integer, finite_field, galois_ring };

// Coefficient rings usable by MultiPoly. `render_signed` returns a sign flag and
// a magnitude string; only the integer ring ever reports a negative value.
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, std::int64_t k) {
    { R::kDomain } -> std::convertible_to<Domain>;
    { r.zero() } -> std::same_as<typename R::value_type>;
    { r.one() } -> std::same_as<typename R::value_type>;
    { r.from_int(k) } -> std::same_as<typename R::value_type>;
    { r.add(a, a) } -> std::same_as<typename R::value_type>;
    { r.sub(a, a) } -> std::same_as<typename R::value_type>;
    { r.neg(a) } -> std::same_as<typename R::value_type>;
    { r.mul(a, a) } -> std::same_as<typename R::value_type>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.equal(a, a) } -> std::convertible_to<bool>;
    { r.render_signed(a) } -> std::same_as<std::pair<bool, std::string>>;
};

struct IntegerRing {
    using value_type = mpz_class;
    static constexpr Domain kDomain = Domain::integer;

    mpz_class zero() const { return 0; }
    mpz_class one() const { return 1; }
    mpz_class from_int(std::int64_t k) const { return mpz_class(static_cast<long>(k)); }
    mpz_class add(const mpz_class& a, const mpz_class& b) const { return a + b; }
    mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
    mpz_class neg(const mpz_class& a) const { return -a; }
    mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
    bool is_zero(const mpz_class& a) const { return a == 0; }
    bool equal(const mpz_class& a, const mpz_class& b) const { return a == b; }
    std::pair<bool, std::string> render_signed(const mpz_class& a) const {
        if (a < 0) return {true, mpz_class(-a).get_str()};
        return {false, a.get_str()};
    }
    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

class FqRing {
public:
    using value_type = FqElem;
    static constexpr Domain kDomain = Domain::finite_field;

    explicit FqRing(std::shared_ptr<const Field> field) : field_(std::move(field)) {}

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }

    FqElem zero() const { return field_->zero(); }
    FqElem one() const { return field_->one(); }
    FqElem from_int(std::int64_t k) const { return field_->from_int(k); }
    FqElem add(FqElem a, FqElem b) const { return field_->add(a, b); }
    FqElem sub(FqElem a, FqElem b) const { return field_->sub(a, b); }
    FqElem neg(FqElem a) const { return field_->neg(a); }
    FqElem mul(FqElem a, FqElem b) const { return field_->mul(a, b); }
    bool is_zero(FqElem a) const { return a.is_zero(); }
    bool equal(FqElem a, FqElem b) const { return a == b; }
    std::pair<bool, std::string> render_signed(FqElem a) const { return {false, field_->render(a)}; }

    friend bool operator==(const FqRing& a, const FqRing& b) {
        return a.field_ == b.field_ || a.field_->params() == b.field_->params();
    }

private:
    std::shared_ptr<const Field> field_;
};

class GRRing {
public:
    using value_type = GRElem;
    static constexpr Domain kDomain = Domain::galois_ring;

    explicit GRRing(std::shared_ptr<const GaloisRing> ring) : ring_(std::move(ring)) {}

    const GaloisRing& ring() const noexcept { return *ring_; }
    const std::shared_ptr<const GaloisRing>& ring_ptr() const noexcept { return ring_; }

    GRElem zero() const { return ring_->zero(); }
    GRElem one() const { return ring_->one(); }
    GRElem from_int(std::int64_t k) const { return ring_->from_int(k); }
    GRElem add(const GRElem& a, const GRElem& b) const { return ring_->add(a, b); }
    GRElem sub(const GRElem& a, const GRElem& b) const { return ring_->sub(a, b); }
    GRElem neg(const GRElem& a) const { return ring_->neg(a); }
    GRElem mul(const GRElem& a, const GRElem& b) const { return ring_->mul(a, b); }
    bool is_zero(const GRElem& a) const { return a.is_zero(); }
    bool equal(const GRElem& a, const GRElem& b) const { return a == b; }
    std::pair<bool, std::string> render_signed(const GRElem& a) const { return {false, ring_->render(a)}; }

    friend bool operator==(const GRRing& a, const GRRing& b) {
        return a.ring_ == b.ring_ || (a.ring_->precision() == b.ring_->precision() &&
                                      a.ring_->field().params() == b.ring_->field().params());
    }

private:
    std::shared_ptr<const GaloisRing> ring_;
};

}  // namespace wittbox
