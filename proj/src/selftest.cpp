#include "wittbox/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "wittbox/box.hpp"
#include "wittbox/parser.hpp"
#include "wittbox/witt_digits.hpp"
#include "wittbox/witt_symbolic.hpp"

namespace wittbox {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t out = 1;
    while (e-- > 0) out *= b;
    return out;
}

unsigned uniform(std::mt19937_64& rng, unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

void fail(SuiteResult& r, const std::string& what) {
    if (r.passed) r.detail = what;
    r.passed = false;
}

std::shared_ptr<const Field> f2() { return std::make_shared<const Field>(FieldParams::prime(2)); }

IntPoly random_int_poly(unsigned n, unsigned max_degree, unsigned max_terms, std::uint64_t coeff_bound,
                        std::mt19937_64& rng) {
    const auto vars = system_variables(n);
    IntPoly f(IntegerRing{}, vars);
    const unsigned terms = uniform(rng, 1, max_terms);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial e(n, 0);
        const unsigned deg = uniform(rng, 1, max_degree);
        for (unsigned d = 0; d < deg; ++d) ++e[uniform(rng, 0, n - 1)];
        const auto c = std::uniform_int_distribution<std::uint64_t>(1, coeff_bound - 1)(rng);
        f.add_term(e, mpz_class(static_cast<unsigned long>(c)));
    }
    return f;
}

GRPoly random_gr_poly(const std::shared_ptr<const GaloisRing>& ring, unsigned n, unsigned max_degree,
                      unsigned max_terms, std::mt19937_64& rng) {
    const GRRing coeffs(ring);
    GRPoly f(coeffs, system_variables(n));
    const unsigned terms = uniform(rng, 1, max_terms);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial e(n, 0);
        const unsigned deg = uniform(rng, 0, max_degree);
        for (unsigned d = 0; d < deg; ++d) ++e[uniform(rng, 0, n - 1)];
        GRElem c;
        switch (uniform(rng, 0, 2)) {
            case 0: c = ring->from_int(static_cast<std::int64_t>(uniform(rng, 1, 8))); break;
            case 1: c = ring->teichmuller(ring->field().enumerate().at(uniform(rng, 1, ring->field().q() - 1))); break;
            default: c = ring->element(std::uniform_int_distribution<std::uint64_t>(1, ring->size() - 1)(rng));
        }
        f.add_term(e, c);
    }
    return f;
}

}  // namespace

FqPoly random_reduced_poly(std::shared_ptr<const Field> field, const Variables& vars, unsigned max_degree,
                           unsigned max_terms, std::mt19937_64& rng) {
    const FqRing ring(field);
    FqPoly f(ring, vars);
    const unsigned q = static_cast<unsigned>(field->q());
    const unsigned terms = uniform(rng, 1, max_terms);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial e(vars->size(), 0);
        const unsigned deg = uniform(rng, 0, max_degree);
        for (unsigned d = 0; d < deg; ++d) {
            const unsigned v = uniform(rng, 0, static_cast<unsigned>(vars->size()) - 1);
            if (e[v] < q - 1) ++e[v];
        }
        f.add_term(e, field->enumerate().at(uniform(rng, 1, q - 1)));
    }
    return f;
}

BoxSpec random_box(std::shared_ptr<const Field> field, unsigned n, unsigned m, unsigned precision,
                   unsigned close_until, std::mt19937_64& rng) {
    const auto vars = box_variables(n, m);
    const std::uint64_t p = field->p();
    const unsigned h = field->h();
    std::map<GeneratorIndex, FqPoly> gens;
    for (unsigned i = m; i < precision; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            if (uniform(rng, 0, 2) == 0) continue;
            unsigned limit = 4;
            if (i < close_until) limit = static_cast<unsigned>(std::min<std::uint64_t>(limit, ipow(p, h * (i / h))));
            gens.emplace(GeneratorIndex{i, j}, random_reduced_poly(field, vars, limit, 3, rng));
        }
    }
    return BoxSpec(field, n, m, std::move(gens));
}

SuiteResult ghost_suite(std::vector<std::uint32_t> primes, std::vector<unsigned> rs, unsigned max_n) {
    SuiteResult r{"ghost", true, 0, {}};
    for (auto p : primes) {
        for (auto arity : rs) {
            for (auto kind : {WittOp::sum, WittOp::product}) {
                ++r.checks;
                if (!ghost_check({p, max_n, arity, kind})) {
                    fail(r, "ghost identity fails for p=" + std::to_string(p) + " r=" + std::to_string(arity) +
                                " kind=" + to_string(kind));
                }
            }
        }
        // Negative control: S_1 + X0*Y0 must break the identity.
        auto polys = *witt_op_polys({p, 1, 2, WittOp::sum});
        const auto vars = polys[1].variables();
        polys[1] += IntPoly::variable(IntegerRing{}, vars, 0) * IntPoly::variable(IntegerRing{}, vars, 1);
        ++r.checks;
        if (ghost_identity_holds(p, 2, WittOp::sum, polys)) {
            fail(r, "perturbed S_1 passes the ghost check for p=" + std::to_string(p));
        }
    }
    if (r.passed) r.detail = "ghost identities hold; perturbed S_1 rejected";
    return r;
}

SuiteResult homogeneity_suite(std::vector<std::uint32_t> primes, unsigned max_r, unsigned max_n) {
    SuiteResult r{"homogeneity", true, 0, {}};
    for (auto p : primes) {
        for (unsigned arity = 2; arity <= max_r; ++arity) {
            for (auto kind : {WittOp::sum, WittOp::product}) {
                const WittGenRequest req{p, max_n, arity, kind};
                const auto& polys = *witt_op_polys(req);
                const auto twisted = twisted_digit_polys(req);
                const std::vector<std::uint64_t> ones(arity, 1);
                const auto weights = witt_weights(max_n, p, ones);
                const std::vector<std::uint64_t> flat(weights.size(), 1);
                for (unsigned k = 0; k <= max_n; ++k) {
                    const std::uint64_t degree = ipow(p, k) * (kind == WittOp::product ? arity : 1);
                    r.checks += 2;
                    const std::string tag = std::string(kind == WittOp::sum ? "S" : "M") + "_" + std::to_string(k) +
                                            " p=" + std::to_string(p) + " r=" + std::to_string(arity);
                    if (!polys[k].weighted_homogeneous(weights, degree)) fail(r, tag + " not weighted homogeneous");
                    if (!twisted[k].weighted_homogeneous(flat, degree)) fail(r, tag + " twist not homogeneous");
                }
            }
        }
    }
    if (r.passed) r.detail = "all weighted and total degrees match";
    return r;
}

SuiteResult cross_check_suite(std::vector<RingShape> rings) {
    SuiteResult r{"cross-check", true, 0, {}};
    for (const auto& shape : rings) {
        auto field = std::make_shared<const Field>(FieldParams::with_default_modulus(shape.p, shape.h));
        auto ring = std::make_shared<const GaloisRing>(field, shape.precision);
        const WittDigitArithmetic witt(ring);
        const auto elems = ring->enumerate();
        std::vector<DigitVec> digits;
        for (const auto& a : elems) digits.push_back(ring->to_digits(a));
        for (std::size_t a = 0; a < elems.size(); ++a) {
            for (std::size_t b = 0; b < elems.size(); ++b) {
                r.checks += 2;
                if (ring->from_digits(witt.add(digits[a], digits[b])) != ring->add(elems[a], elems[b]) ||
                    ring->from_digits(witt.mul(digits[a], digits[b])) != ring->mul(elems[a], elems[b])) {
                    fail(r, "mismatch in GR(" + std::to_string(ring->characteristic()) + "," +
                                std::to_string(shape.h) + ") at " + ring->render(elems[a]) + ", " +
                                ring->render(elems[b]));
                }
            }
        }
    }
    if (r.passed) r.detail = "digit arithmetic matches ring arithmetic on all pairs";
    return r;
}

SuiteResult vanishing_suite(unsigned max_m, unsigned max_r) {
    SuiteResult r{"vanishing-equivalence", true, 0, {}};
    const auto field = f2();
    const FqElem zero = field->zero();
    for (unsigned m = 1; m <= max_m; ++m) {
        auto ring = std::make_shared<const GaloisRing>(field, m);
        const WittDigitArithmetic witt(ring);
        for (unsigned arity = 1; arity <= max_r; ++arity) {
            // s_n as functions on F_2^{m r}; for r = 1 the sum is the operand itself.
            std::vector<FqPoly> twisted;
            if (arity == 1) {
                const auto vars = witt_variables(m - 1, 1);
                for (unsigned k = 0; k < m; ++k) {
                    twisted.push_back(FqPoly::variable(FqRing(field), vars, k).pow(ipow(2, k)));
                }
            } else {
                for (const auto& s : twisted_digit_polys({2, m - 1, arity, WittOp::sum})) {
                    twisted.push_back(reduce_mod_p(s, field));
                }
            }
            const unsigned vars = m * arity;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars); ++bits) {
                std::vector<FqElem> x(vars);
                std::vector<DigitVec> operands(arity, DigitVec{std::vector<FqElem>(m)});
                GRElem total = ring->zero();
                for (unsigned i = 0; i < m; ++i) {
                    for (unsigned j = 1; j <= arity; ++j) {
                        const std::size_t idx = witt_variable_index(i, j, arity);
                        x[idx] = field->from_int(static_cast<std::int64_t>((bits >> idx) & 1));
                        operands[j - 1].digits[i] = x[idx];
                    }
                }
                for (const auto& d : operands) total = ring->add(total, ring->from_digits(d));
                const DigitVec digits = arity == 1 ? operands[0] : witt.fold(WittOp::sum, operands);
                const bool first = total.is_zero();
                const bool second =
                    std::all_of(digits.digits.begin(), digits.digits.end(), [&](FqElem d) { return d == zero; });
                bool third = true;
                for (unsigned k = 0; k < m; ++k) {
                    const FqElem s = twisted[k].evaluate(x);
                    // s_k is the p^k-th power of the k-th digit.
                    if (s != field->pow(digits.digits[k], ipow(2, k))) fail(r, "s_n differs from the twisted digit");
                    third = third && s == zero;
                }
                ++r.checks;
                if (first != second || second != third) {
                    fail(r, "equivalence fails for m=" + std::to_string(m) + " r=" + std::to_string(arity));
                }
            }
        }
    }
    if (r.passed) r.detail = "(i) <=> (ii) <=> (iii) on every digit tuple";
    return r;
}

SuiteResult stacking_suite(unsigned cases, std::uint64_t seed) {
    SuiteResult r{"stacking", true, 0, {}};
    std::mt19937_64 rng(seed);
    const auto field = f2();
    while (r.checks < cases) {
        const unsigned n = uniform(rng, 1, 3);
        const unsigned m = uniform(rng, 2, 3);
        const unsigned ms = uniform(rng, 1, m - 1);
        const unsigned s = uniform(rng, 1, 2);
        std::vector<std::pair<IntPoly, unsigned>> system;
        for (unsigned k = 0; k < s; ++k) {
            const unsigned mk = k + 1 == s ? ms : uniform(rng, 1, ms);
            system.emplace_back(random_int_poly(n, 3, 3, ipow(2, mk) + 1, rng), mk);
        }
        const BoxSpec box = random_box(field, n, m, m + 2, 0, rng);
        std::optional<ProblemInstance> full, teich;
        try {
            full.emplace(ProblemInstance::from_integers(box, system));
            teich.emplace(ProblemInstance::from_integers(BoxSpec::teichmuller(field, n, ms), system));
        } catch (const ValidationError&) {
            continue;  // some f_k constant modulo its modulus
        }
        const auto big = count_zeros(*full).cardinality;
        const auto small = count_zeros(*teich).cardinality;
        ++r.checks;
        if (big != ipow(2, n * (m - ms)) * small) {
            fail(r, "stacking fails: " + std::to_string(big) + " vs 2^" + std::to_string(n * (m - ms)) + " * " +
                        std::to_string(small) + "\n" + format_instance(*full));
        }
    }
    if (r.passed) r.detail = std::to_string(r.checks) + " random cases, zero violations";
    return r;
}

SuiteResult round_trip_suite(unsigned cases, std::uint64_t seed) {
    SuiteResult r{"round-trip", true, 0, {}};
    std::mt19937_64 rng(seed);
    const auto field = f2();
    auto check = [&](const BoxSpec& spec, unsigned precision) {
        const auto table = box_enumerate(spec, precision);
        const BoxSpec back = box_from_table(field, spec.n(), spec.m(), precision, table);
        ++r.checks;
        if (!(back == spec)) fail(r, "round trip changed a box with n=" + std::to_string(spec.n()));
    };
    {
        const auto vars = box_variables(4, 2);
        const FqRing ring(field);
        auto x = [&](unsigned i, unsigned j) { return FqPoly::variable(ring, vars, box_variable_index(i, j, 4)); };
        std::map<GeneratorIndex, FqPoly> g;
        g.emplace(GeneratorIndex{2, 1}, x(0, 1) * x(1, 1) * x(0, 2) * x(1, 4));
        check(BoxSpec(field, 4, 2, g), 3);
    }
    while (r.checks < cases + 1) {
        const unsigned m = uniform(rng, 1, 3);
        const unsigned n = uniform(rng, 1, 8 / m);
        const unsigned precision = m + uniform(rng, 1, 2);
        check(random_box(field, n, m, precision, 0, rng), precision);
    }
    if (r.passed) r.detail = std::to_string(r.checks) + " boxes reproduced exactly";
    return r;
}

SoundnessResult soundness_suite(unsigned instances, std::uint64_t seed) {
    SoundnessResult out;
    out.suite.name = "soundness";
    std::mt19937_64 rng(seed);
    const std::vector<std::pair<std::uint32_t, unsigned>> fields{{2, 1}, {2, 2}, {3, 1}, {3, 2}};
    while (out.instances < instances) {
        const auto [p, h] = fields[uniform(rng, 0, 3)];
        auto field = std::make_shared<const Field>(FieldParams::with_default_modulus(p, h));
        const std::uint64_t q = field->q();
        unsigned max_nm = 0;
        while (ipow(q, max_nm + 1) <= 6561) ++max_nm;
        // Shapes: 0 = m and all m_k equal 1, 1 = all m_k equal m >= 2, 2 = free.
        const unsigned shape = uniform(rng, 0, 2);
        const unsigned m = shape == 0 ? 1 : uniform(rng, shape == 1 ? 2 : 1, std::min(3u, max_nm));
        if (m > max_nm) continue;
        const unsigned n = uniform(rng, 1, std::min(6u, max_nm / m));
        const unsigned s = uniform(rng, 1, 2);
        std::vector<unsigned> moduli(s);
        for (auto& mk : moduli) mk = shape == 0 ? 1 : shape == 1 ? m : uniform(rng, 1, 3);
        const unsigned ms = *std::max_element(moduli.begin(), moduli.end());
        const unsigned precision = std::max(m, ms);
        auto ring = std::make_shared<const GaloisRing>(field, precision);
        std::vector<Congruence> system;
        for (unsigned k = 0; k < s; ++k) system.push_back({random_gr_poly(ring, n, 3, 3, rng), moduli[k]});
        std::optional<ProblemInstance> inst;
        try {
            inst.emplace(random_box(field, n, m, precision, ms, rng), std::move(system));
        } catch (const ValidationError&) {
            continue;
        }
        const CountReport count = count_zeros(*inst);
        BoundOptions any_opts, all_opts;
        any_opts.reading = DegreeReading::any;
        all_opts.reading = DegreeReading::all;
        const BoundReport any = bound_report(*inst, count, any_opts);
        const BoundReport all = bound_report(*inst, count, all_opts);
        ++out.instances;
        auto tally = [&](const BoundReport& rep, const char* reading, std::uint64_t& violations) {
            for (const auto& b : rep.bounds) {
                ++out.suite.checks;
                if (b.divides && !*b.divides) {
                    ++violations;
                    std::ostringstream log;
                    log << "reading=" << reading << " bound." << b.name << "=" << *b.value << " but ord_p="
                        << count.ord_p.to_string() << " (cardinality " << count.cardinality << ")\n"
                        << format_instance(*inst);
                    out.violation_log.push_back(log.str());
                }
            }
        };
        tally(any, "any", out.violations_any);
        tally(all, "all", out.violations_all);
        for (std::size_t i = 0; i < any.bounds.size(); ++i) {
            if (any.bounds[i].value != all.bounds[i].value) {
                ++out.discrepancies;
                break;
            }
        }
    }
    out.suite.passed = out.violations_any == 0 && out.violations_all == 0;
    out.suite.detail = std::to_string(out.instances) + " instances; violations any=" +
                       std::to_string(out.violations_any) + " all=" + std::to_string(out.violations_all) +
                       "; reading discrepancies=" + std::to_string(out.discrepancies);
    return out;
}

std::vector<SuiteResult> run_selftest() {
    std::vector<SuiteResult> out;
    out.push_back(ghost_suite({2, 3}, {2, 3}, 3));
    out.push_back(homogeneity_suite({2, 3}, 3, 2));
    out.push_back(cross_check_suite({{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}}));
    out.push_back(vanishing_suite(3, 3));
    out.push_back(stacking_suite(50, 20241));
    out.push_back(round_trip_suite(30, 20242));
    return out;
}

}  // namespace wittbox
