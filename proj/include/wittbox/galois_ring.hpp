#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittbox/fq_field.hpp"
#include "wittbox/valuation.hpp"

namespace wittbox {

// Element of GR(p^M, h) = (Z/p^M)[t]/(phi): h residues in [0, p^M - 1].
// Coordinates at index >= h are always zero.
class GRElem {
public:
    using Storage = std::array<std::uint64_t, Field::kMaxDegree>;

    GRElem() = default;
    explicit GRElem(const Storage& c) : c_(c) {}

    std::uint64_t operator[](std::size_t i) const { return c_[i]; }
    std::uint64_t& operator[](std::size_t i) { return c_[i]; }
    const Storage& storage() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (auto x : c_) {
            if (x != 0) return false;
        }
        return true;
    }

    friend auto operator<=>(const GRElem&, const GRElem&) = default;

private:
    Storage c_{};
};

// Teichmueller digit vector (a_0, ..., a_{M-1}) denoting sum tau(a_i) p^i.
struct DigitVec {
    std::vector<FqElem> digits;

    std::size_t size() const noexcept { return digits.size(); }
    FqElem operator[](std::size_t i) const { return digits[i]; }

    friend bool operator==(const DigitVec&, const DigitVec&) = default;
};

// The Galois ring GR(p^M, h), isomorphic to Z_q / p^M Z_q. The lifted modulus
// reuses the coefficients of the residue field's modulus, read in [0, p-1].
class GaloisRing {
public:
    // Requires precision >= 1 and p^precision < 2^31.
    GaloisRing(std::shared_ptr<const Field> field, unsigned precision);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_->p(); }
    unsigned h() const noexcept { return field_->h(); }
    unsigned precision() const noexcept { return precision_; }
    // p^precision.
    std::uint64_t characteristic() const noexcept { return modulus_; }
    // q^precision.
    std::uint64_t size() const noexcept;

    GRElem zero() const { return GRElem{}; }
    GRElem one() const;
    GRElem from_int(std::int64_t c) const;
    GRElem from_int(const mpz_class& c) const;
    // Ascending coordinates, reduced mod p^M; at most h entries.
    GRElem make(std::span<const std::int64_t> coeffs) const;
    GRElem make(std::initializer_list<std::int64_t> coeffs) const;

    GRElem add(const GRElem& a, const GRElem& b) const;
    GRElem sub(const GRElem& a, const GRElem& b) const;
    GRElem neg(const GRElem& a) const;
    GRElem mul(const GRElem& a, const GRElem& b) const;
    GRElem pow(const GRElem& a, std::uint64_t e) const;
    // Multiplication by an integer scalar.
    GRElem scale(const GRElem& a, std::uint64_t k) const;

    // Residue class mod p, an element of the residue field.
    FqElem residue(const GRElem& a) const;
    // Coordinates of a read in [0, p-1].
    GRElem naive_lift(FqElem a) const;
    // Unique z with z == a mod p and z^q == z.
    GRElem teichmuller(FqElem a) const;

    DigitVec to_digits(const GRElem& y) const;
    // Throws ValidationError when the digit count differs from the precision.
    GRElem from_digits(const DigitVec& d) const;

    // Largest e < M with p^e dividing every coordinate; infinity for zero.
    Valuation ord_p(const GRElem& y) const;

    // Image under GR(p^M, h) -> GR(p^k, h) for k <= M (coordinates mod p^k).
    GRElem truncate(const GRElem& y, unsigned k) const;

    // Enumeration by the base-p^M encoding of the coordinates.
    GRElem element(std::uint64_t index) const;
    std::vector<GRElem> enumerate() const;

    // Ascending coordinate list, e.g. `[3, 1]`.
    std::string render_list(const GRElem& a) const;
    // Expression form for polynomial coefficients: `3` or `3+t`.
    std::string render(const GRElem& a) const;

private:
    GRElem teichmuller_uncached(FqElem a) const;

    std::shared_ptr<const Field> field_;
    unsigned precision_;
    std::uint64_t modulus_;
    std::vector<GRElem> teichmuller_table_;
};

// Embeds an integer into the prime subring (c mod p^M).
inline GRElem int_to_gr(std::int64_t c, const GaloisRing& ring) { return ring.from_int(c); }

}  // namespace wittbox
