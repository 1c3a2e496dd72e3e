#include "wittbox/witt_digits.hpp"

namespace wittbox {

FqPoly reduce_mod_p(const IntPoly& f, std::shared_ptr<const Field> field) {
    const unsigned long p = field->p();
    FqRing ring(field);
    return map_coefficients(f, ring, [&](const mpz_class& c) {
        return field->from_int(static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), p)));
    });
}

WittDigitArithmetic::WittDigitArithmetic(std::shared_ptr<const GaloisRing> ring)
    : ring_(std::move(ring)),
      field_(ring_->field_ptr()),
      sum_(reduced_polys(WittOp::sum, 2)),
      product_(reduced_polys(WittOp::product, 2)) {}

std::vector<FqPoly> WittDigitArithmetic::reduced_polys(WittOp kind, unsigned r) const {
    const WittGenRequest req{ring_->p(), ring_->precision() - 1, r, kind};
    std::vector<FqPoly> reduced;
    for (const auto& f : *witt_op_polys(req)) reduced.push_back(reduce_mod_p(f, field_));
    return reduced;
}

std::vector<FqElem> WittDigitArithmetic::twist(const DigitVec& d) const {
    std::vector<FqElem> out;
    out.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(field_->frobenius(d[i], i));
    return out;
}

DigitVec WittDigitArithmetic::untwist(std::span<const FqElem> coords) const {
    DigitVec out;
    out.digits.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.digits.push_back(field_->frobenius_inverse(coords[i], i));
    }
    return out;
}

DigitVec WittDigitArithmetic::apply(WittOp kind, const DigitVec& a, const DigitVec& b) const {
    const DigitVec operands[] = {a, b};
    return fold(kind, operands);
}

DigitVec WittDigitArithmetic::fold(WittOp kind, std::span<const DigitVec> operands) const {
    const unsigned r = static_cast<unsigned>(operands.size());
    if (r < 2) throw ValidationError("Witt fold needs at least two operands");
    const unsigned M = ring_->precision();
    for (const auto& d : operands) {
        if (d.size() != M) throw ValidationError("digit vector length differs from ring precision");
    }
    // Variable order is (i, j): coordinate i of operand j at index i*r + j-1.
    std::vector<FqElem> values(std::size_t{M} * r);
    for (unsigned j = 0; j < r; ++j) {
        const auto coords = twist(operands[j]);
        for (unsigned i = 0; i < M; ++i) values[std::size_t{i} * r + j] = coords[i];
    }
    std::vector<FqPoly> folded;
    if (r != 2) folded = reduced_polys(kind, r);
    const auto& polys = r == 2 ? (kind == WittOp::sum ? sum_ : product_) : folded;
    std::vector<FqElem> result;
    result.reserve(M);
    for (const auto& f : polys) result.push_back(f.evaluate(values));
    return untwist(result);
}

DigitVec witt_digit_op(std::shared_ptr<const GaloisRing> ring, const DigitVec& a, const DigitVec& b,
                       WittOp kind) {
    return WittDigitArithmetic(std::move(ring)).apply(kind, a, b);
}

}  // namespace wittbox
