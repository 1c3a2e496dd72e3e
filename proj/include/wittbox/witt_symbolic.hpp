#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wittbox/int_poly.hpp"

namespace wittbox {

enum class WittOp { sum, product };

const char* to_string(WittOp op);

// Selects the r-fold Witt sum or product polynomials P_0, ..., P_n.
struct WittGenRequest {
    std::uint32_t p = 2;
    unsigned n = 0;
    unsigned r = 2;
    WittOp kind = WittOp::sum;

    friend auto operator<=>(const WittGenRequest&, const WittGenRequest&) = default;
};

// w_k = sum_{i<=k} p^i X_i^{p^{k-i}} in variables X0..Xk.
IntPoly witt_poly(unsigned k, std::uint32_t p);

// Variables x_{ij}, i in [0,n], j in [1,r], ordered by (i, j). For r == 2 they
// are named X<i> (j = 1) and Y<i> (j = 2); otherwise x[<i>][<j>].
Variables witt_variables(unsigned n, unsigned r);

inline std::size_t witt_variable_index(unsigned i, unsigned j, unsigned r) {
    return std::size_t{i} * r + (j - 1);
}

// The r-fold sum/product polynomials, computed by the ghost recursion
//   P_n = (Phi_n - sum_{i<n} p^i P_i^{p^{n-i}}) / p^n
// where Phi_n is sum_j w_n(X_j) or prod_j w_n(X_j). The division is exact;
// an inexact one throws ArithmeticError. Results are memoized per request.
std::shared_ptr<const std::vector<IntPoly>> witt_op_polys(const WittGenRequest& req);

// s_n / m_n: the output of witt_op_polys with x_{ij} replaced by x_{ij}^{p^i}.
std::vector<IntPoly> twisted_digit_polys(const WittGenRequest& req);

// Checks w_k(P_0, ..., P_k) == Phi(w_k(X_1), ..., w_k(X_r)) for every k below
// polys.size(). The polynomials must live in witt_variables(polys.size()-1, r).
bool ghost_identity_holds(std::uint32_t p, unsigned r, WittOp kind, std::span<const IntPoly> polys);

// ghost_identity_holds applied to witt_op_polys(req).
bool ghost_check(const WittGenRequest& req);

// wt(x_{ij}) = d_j * p^i for the variables of witt_variables(n, d.size()).
std::vector<std::uint64_t> witt_weights(unsigned n, std::uint32_t p, std::span<const std::uint64_t> d);

}  // namespace wittbox
