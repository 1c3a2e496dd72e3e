#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wittbox/galois_ring.hpp"
#include "wittbox/int_poly.hpp"
#include "wittbox/witt_symbolic.hpp"

namespace wittbox {

// Arithmetic on Teichmueller digit vectors through Witt coordinates.
//
// A digit vector (a_0, ..., a_{M-1}) corresponds to the Witt vector
// (a_0, a_1^p, ..., a_{M-1}^{p^{M-1}}). Operations twist into Witt coordinates,
// apply the universal polynomials over F_q, and untwist with the inverse
// Frobenius, so that from_digits(add(a, b)) == from_digits(a) + from_digits(b).
class WittDigitArithmetic {
public:
    explicit WittDigitArithmetic(std::shared_ptr<const GaloisRing> ring);

    const GaloisRing& ring() const noexcept { return *ring_; }

    // Throws ValidationError on length mismatch.
    DigitVec apply(WittOp kind, const DigitVec& a, const DigitVec& b) const;
    DigitVec add(const DigitVec& a, const DigitVec& b) const { return apply(WittOp::sum, a, b); }
    DigitVec mul(const DigitVec& a, const DigitVec& b) const { return apply(WittOp::product, a, b); }

    // r-fold operation using the r-fold polynomials directly (r = operands.size() >= 2).
    DigitVec fold(WittOp kind, std::span<const DigitVec> operands) const;

    // Witt coordinates of a digit vector: digit_i^{p^i}.
    std::vector<FqElem> twist(const DigitVec& d) const;
    DigitVec untwist(std::span<const FqElem> coords) const;

private:
    std::vector<FqPoly> reduced_polys(WittOp kind, unsigned r) const;

    std::shared_ptr<const GaloisRing> ring_;
    std::shared_ptr<const Field> field_;
    // Binary sum and product polynomials over F_q, built once.
    std::vector<FqPoly> sum_;
    std::vector<FqPoly> product_;
};

// Reduces an integer polynomial coefficientwise into F_q (through F_p).
FqPoly reduce_mod_p(const IntPoly& f, std::shared_ptr<const Field> field);

// One-shot form of WittDigitArithmetic::apply.
DigitVec witt_digit_op(std::shared_ptr<const GaloisRing> ring, const DigitVec& a, const DigitVec& b,
                       WittOp kind);

}  // namespace wittbox
