#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wittbox/bounds.hpp"
#include "wittbox/counting.hpp"

namespace wittbox {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string detail;
};

// Ghost identities of the r-fold sum/product polynomials for every prime,
// r and n <= max_n, plus a negative control: a perturbed S_1 must fail.
SuiteResult ghost_suite(std::vector<std::uint32_t> primes, std::vector<unsigned> rs, unsigned max_n);

// S_n, M_n weighted homogeneous under wt(x_ij) = p^i of degrees p^n, r p^n;
// s_n, m_n homogeneous of the same degrees.
SuiteResult homogeneity_suite(std::vector<std::uint32_t> primes, unsigned max_r, unsigned max_n);

struct RingShape {
    std::uint32_t p;
    unsigned h;
    unsigned precision;
};

// Digit-level Witt arithmetic agrees with Galois-ring arithmetic on all pairs.
SuiteResult cross_check_suite(std::vector<RingShape> rings);

// Over F_2, for every digit tuple: the r-fold sum vanishes mod 2^m iff its
// digits vanish iff the twisted polynomials s_0..s_{m-1} vanish.
SuiteResult vanishing_suite(unsigned max_m, unsigned max_r);

// |V(B_m)| = q^{n(m - m_s)} |V(T_{m_s})| whenever m_s < m, over random F_2
// instances with n <= 3, m <= 3.
SuiteResult stacking_suite(unsigned cases, std::uint64_t seed);

// box_from_table(box_enumerate(B)) == B over F_2 with nm <= 8, for random
// boxes and the four-variable example box.
SuiteResult round_trip_suite(unsigned cases, std::uint64_t seed);

struct SoundnessResult {
    SuiteResult suite;
    std::uint64_t instances = 0;
    std::uint64_t violations_any = 0;
    std::uint64_t violations_all = 0;
    // Instances where the two degree readings give different values.
    std::uint64_t discrepancies = 0;
    std::vector<std::string> violation_log;
};

// Random instances (p in {2,3}, h <= 2, q^{nm} <= 6561, s <= 2) built so the
// closeness hypothesis holds at m_s; every applicable bound must divide the
// count. Both degree readings are checked. Instances are counted concurrently.
SoundnessResult soundness_suite(unsigned instances, std::uint64_t seed);

// Random reduced polynomial over F_q in `vars` with total degree <= max_degree
// (exponents <= q-1) and at most max_terms terms.
FqPoly random_reduced_poly(std::shared_ptr<const Field> field, const Variables& vars, unsigned max_degree,
                           unsigned max_terms, std::mt19937_64& rng);

// Random box whose generators g_ij, m <= i < precision, satisfy
// deg g_ij <= p^{h floor(i/h)} for i < close_until and are otherwise free.
BoxSpec random_box(std::shared_ptr<const Field> field, unsigned n, unsigned m, unsigned precision,
                   unsigned close_until, std::mt19937_64& rng);

// The default selftest: every suite above at its acceptance size.
std::vector<SuiteResult> run_selftest();

}  // namespace wittbox
