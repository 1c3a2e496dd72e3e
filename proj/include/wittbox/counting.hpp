#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittbox/box.hpp"
#include "wittbox/galois_ring.hpp"
#include "wittbox/int_poly.hpp"
#include "wittbox/valuation.hpp"

namespace wittbox {

// Variables x1..xn of the congruence system.
Variables system_variables(unsigned n);

// f(x1..xn) == 0 mod p^{modulus_exponent}.
struct Congruence {
    GRPoly poly;
    unsigned modulus_exponent;
};

// A congruence system over a box. Coefficients live in GR(p^P, h) with
// P = max(m, max_k m_k), enough to address every digit that influences a
// residue and every free digit of the box.
class ProblemInstance {
public:
    // Validates: nonempty system, m_k >= 1, polynomials over the box field in
    // x1..xn, each nonconstant modulo p^{m_k}. Polynomials whose ring has a
    // different precision are re-embedded. The system is stably sorted by m_k.
    ProblemInstance(BoxSpec box, std::vector<Congruence> system);

    // Integer coefficients embedded into the prime subring.
    static ProblemInstance from_integers(BoxSpec box, const std::vector<std::pair<IntPoly, unsigned>>& system);

    const BoxSpec& box() const noexcept { return box_; }
    const Field& field() const noexcept { return box_.field(); }
    std::shared_ptr<const Field> field_ptr() const { return box_.field_ptr(); }
    unsigned n() const noexcept { return box_.n(); }
    unsigned m() const noexcept { return box_.m(); }
    const std::vector<Congruence>& system() const noexcept { return system_; }
    std::size_t s() const noexcept { return system_.size(); }

    // M' = max_k m_k.
    unsigned max_modulus() const noexcept { return system_.back().modulus_exponent; }
    // max(m, M'): precision of box points and of the evaluation ring.
    unsigned evaluation_precision() const noexcept { return std::max(m(), max_modulus()); }
    const std::shared_ptr<const GaloisRing>& ring() const noexcept { return ring_; }

    // Total degree of f_k counting only terms that are nonzero mod p^{m_k}.
    std::uint64_t degree(std::size_t k) const;
    std::vector<std::uint64_t> degrees() const;
    std::vector<unsigned> moduli() const;

private:
    BoxSpec box_;
    std::shared_ptr<const GaloisRing> ring_;
    std::vector<Congruence> system_;
};

// Residues f_k(Y) at a box point of precision evaluation_precision(), each
// truncated to GR(p^{m_k}, h) (coordinates reduced mod p^{m_k}).
std::vector<GRElem> evaluate_point(const ProblemInstance& inst, const BoxPoint& pt);

struct CountOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;
    // 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    // Number of contiguous index ranges; 0 picks 4 per thread.
    unsigned partitions = 0;
};

struct CountReport {
    std::uint64_t cardinality = 0;
    Valuation ord_p = Valuation::infinity();
    unsigned h = 1;

    // ord_p / h as an exact rational; empty for infinity.
    std::optional<mpq_class> ord_q() const;
    // `<ord_p>/<h>` (not reduced) or `inf`.
    std::string ord_q_string() const;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

// Exhaustive count of the box points where every f_k vanishes mod p^{m_k}.
// Throws BudgetExceeded when q^{nm} exceeds the budget. The result does not
// depend on the thread or partition count.
CountReport count_zeros(const ProblemInstance& inst, const CountOptions& options = {});

// Counts points with index in [begin, end) only.
std::uint64_t count_zeros_in_range(const ProblemInstance& inst, std::uint64_t begin, std::uint64_t end);

}  // namespace wittbox
