#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wittbox {

// Parameters of F_q = F_p[t]/(modulus), q = p^h.
//
// `modulus` holds the ascending coefficients of a monic polynomial of degree h
// over F_p (so it has h+1 entries and modulus[h] == 1). For h == 1 the modulus
// is t, which makes the field the prime field with t == 0.
struct FieldParams {
    std::uint32_t p = 2;
    unsigned h = 1;
    std::vector<std::uint32_t> modulus{0, 1};

    static FieldParams prime(std::uint32_t p);

    // Built-in irreducible moduli for (2,2), (2,3), (3,2), (5,2), and t for h = 1.
    // Throws ValidationError for other pairs.
    static FieldParams with_default_modulus(std::uint32_t p, unsigned h);

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

bool is_prime(std::uint64_t n);

// Element of F_q, stored as the base-p integer encoding of its coefficient
// tuple: code = c_0 + c_1 p + ... + c_{h-1} p^{h-1}. The encoding doubles as the
// canonical enumeration order.
class FqElem {
public:
    constexpr FqElem() = default;
    constexpr explicit FqElem(std::uint32_t code) : code_(code) {}

    constexpr std::uint32_t code() const noexcept { return code_; }
    constexpr bool is_zero() const noexcept { return code_ == 0; }

    friend constexpr auto operator<=>(FqElem, FqElem) = default;

private:
    std::uint32_t code_ = 0;
};

class Field {
public:
    static constexpr unsigned kMaxDegree = 8;

    // Validates p prime, 1 <= h <= kMaxDegree, monic modulus of degree h,
    // irreducible over F_p, and q < 2^31.
    explicit Field(FieldParams params);

    const FieldParams& params() const noexcept { return params_; }
    std::uint32_t p() const noexcept { return params_.p; }
    unsigned h() const noexcept { return params_.h; }
    std::uint32_t q() const noexcept { return q_; }

    // Reduces entries mod p and pads to length h; at most h entries.
    FqElem make(std::span<const std::int64_t> coeffs) const;
    FqElem make(std::initializer_list<std::int64_t> coeffs) const;
    FqElem from_int(std::int64_t c) const;
    // Ascending coefficient list of length h.
    std::vector<std::uint32_t> coeffs(FqElem a) const;

    FqElem zero() const noexcept { return FqElem{0}; }
    FqElem one() const noexcept { return FqElem{1}; }
    // The class of t; equals zero when h == 1.
    FqElem generator() const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    // Throws DomainError for a == 0.
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, std::uint64_t e) const;

    // a^(p^e).
    FqElem frobenius(FqElem a, std::uint64_t e) const;
    // The unique b with b^(p^e) == a.
    FqElem frobenius_inverse(FqElem a, std::uint64_t e) const;

    // All q elements in ascending code order.
    std::vector<FqElem> enumerate() const;

    // Literal syntax shared with the instance file format: `0`, `2`, `t`,
    // `1+2*t`, `t^2+1`; ascending powers of t.
    std::string render(FqElem a) const;

    bool contains(FqElem a) const noexcept { return a.code() < q_; }

private:
    using Coeffs = std::vector<std::uint32_t>;

    Coeffs decode(std::uint32_t code) const;
    std::uint32_t encode(const Coeffs& c) const;
    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    FieldParams params_;
    std::uint32_t q_ = 2;
    // Operation tables indexed by a*q + b; filled only for small q.
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
};

}  // namespace wittbox
