#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittbox/counting.hpp"

namespace wittbox {

// Least nonnegative integer >= t.
std::uint64_t ceil_star(const mpq_class& t);
mpz_class floor_of(const mpq_class& t);

// How "any deg f_k > 1" selects the first case of the Katz-Marshall-Ramage
// style bounds: `all` needs every degree above 1, `any` needs one.
enum class DegreeReading { all, any };

const char* to_string(DegreeReading reading);

// ceil*((n - sum deg) / max deg).
std::uint64_t ax_katz_bound(std::uint64_t n, std::span<const std::uint64_t> degs);

// floor(((n-s+1)m - 1)/2) when n > s and the degree condition holds,
// ceil*((n-s)m) otherwise. Requires m >= 2.
std::uint64_t kmr_bound(std::uint64_t n, std::uint64_t s, std::uint64_t m, std::span<const std::uint64_t> degs,
                        DegreeReading reading = DegreeReading::any);

// ceil*((nm - sum ((p^{m_k}-1)/(p-1)) d_k) / max p^{m_k-1} d_k). With d_k =
// deg f_k this is the general bound; with m = 1 the Cao-Wan-Grynkiewicz bound;
// with smaller admissible d_k the improved bound.
std::uint64_t general_bound(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::span<const unsigned> moduli,
                            std::span<const std::uint64_t> degs);

inline std::uint64_t cwg_bound(std::uint64_t n, std::uint64_t p, std::span<const unsigned> moduli,
                               std::span<const std::uint64_t> degs) {
    return general_bound(n, 1, p, moduli, degs);
}

inline std::uint64_t improved_bound(std::uint64_t n, std::uint64_t m, std::uint64_t p,
                                    std::span<const unsigned> moduli, std::span<const std::uint64_t> d) {
    return general_bound(n, m, p, moduli, d);
}

// System form with all moduli equal to m1 <= m:
//   m1 == 1:                       ax_katz + n(m - m1)
//   m1 > 1, n > s, degree reading: floor(((n-s+1)m1 - 1)/2) + n(m - m1)
//   otherwise:                     ceil*((n-s)m1) + n(m - m1)
// Throws ValidationError unless m >= m1 >= 1.
std::uint64_t stacked_bound(std::uint64_t n, std::uint64_t s, std::uint64_t m, std::uint64_t m1,
                            std::span<const std::uint64_t> degs, DegreeReading reading = DegreeReading::any);

// Single-polynomial form with modulus exponent m' <= m:
//   m' == 1: ceil*(n/deg - 1) + n(m - m')
//   m' > 1 and deg > 1 (and n > 1 when require_n_gt_1): floor((nm' - 1)/2) + n(m - m')
//   otherwise: nm - m'
// require_n_gt_1 = false is the literal single-polynomial statement; true is
// the form its derivation supports.
std::uint64_t stacked_single_bound(std::uint64_t n, std::uint64_t m, std::uint64_t m_prime, std::uint64_t deg,
                                   bool require_n_gt_1);

struct MinimalDOptions {
    // Maximum number of (i, term, beta) combinations inspected per polynomial.
    std::uint64_t budget = 10'000'000;
};

// Least d >= 1 such that deg(a_{ij} prod_t g_{beta_t, l_t}) <= d p^{h floor((i+|beta|)/h)}
// for every Teichmueller digit a_{ij} != 0 of a coefficient of f_k, every
// beta in N_0^{|u_j|} and i + |beta| <= m_k - 1. The product degree is the sum
// of the factor degrees, or 0 when some factor is the zero generator.
// Throws BudgetExceeded when the enumeration is too large.
std::uint64_t minimal_d(const ProblemInstance& inst, std::size_t k, const MinimalDOptions& options = {});

struct BoundEntry {
    std::string name;
    bool applicable = false;
    std::optional<std::uint64_t> value;
    std::string note;
    // Set when a count was supplied and the bound is applicable.
    std::optional<bool> divides;
};

enum class VerifyStatus { pass, fail, vacuous };

const char* to_string(VerifyStatus status);

struct BoundReport {
    std::vector<BoundEntry> bounds;
    bool closeness = false;
    std::vector<std::uint64_t> degrees;
    std::vector<std::uint64_t> d_values;
    std::optional<CountReport> count;

    const BoundEntry* find(const std::string& name) const;
    // Defined only when a count is present.
    std::optional<VerifyStatus> status() const;
};

struct BoundOptions {
    DegreeReading reading = DegreeReading::any;
    MinimalDOptions minimal_d;
};

// Evaluates every bound, records hypothesis checks, and with a count checks
// p^{h * value} | cardinality for each applicable bound.
BoundReport bound_report(const ProblemInstance& inst, const std::optional<CountReport>& count,
                         const BoundOptions& options = {});

}  // namespace wittbox
