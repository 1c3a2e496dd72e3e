#include "wittbox/int_poly.hpp"

namespace wittbox {

IntPoly int_divide_exact(const IntPoly& f, const mpz_class& c) {
    if (c == 0) throw ArithmeticError("division of a polynomial by zero");
    IntPoly out(f.ring(), f.variables());
    for (const auto& [e, coeff] : f.terms()) {
        if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t())) {
            throw ArithmeticError("inexact division: coefficient " + coeff.get_str() +
                                  " is not divisible by " + c.get_str());
        }
        mpz_class quotient;
        mpz_divexact(quotient.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
        out.add_term(e, quotient);
    }
    return out;
}

FqPoly reduce_exponents(const FqPoly& f) {
    const std::uint32_t q = f.ring().field().q();
    FqPoly out(f.ring(), f.variables());
    Monomial e2(f.arity());
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            e2[i] = e[i] == 0 ? 0 : ((e[i] - 1) % (q - 1)) + 1;
        }
        out.add_term(e2, c);
    }
    return out;
}

bool is_reduced(const FqPoly& f) {
    const std::uint32_t q = f.ring().field().q();
    for (const auto& [e, c] : f.terms()) {
        for (auto x : e) {
            if (x > q - 1) return false;
        }
    }
    return true;
}

}  // namespace wittbox
