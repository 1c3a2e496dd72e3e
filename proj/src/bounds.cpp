#include "wittbox/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "wittbox/errors.hpp"

namespace wittbox {

namespace {

mpz_class zpow(std::uint64_t base, std::uint64_t e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

mpz_class z(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

std::uint64_t to_u64(const mpz_class& v) { return v.get_ui(); }

bool degree_condition(std::span<const std::uint64_t> degs, DegreeReading reading) {
    auto above_one = [](std::uint64_t d) { return d > 1; };
    return reading == DegreeReading::all ? std::all_of(degs.begin(), degs.end(), above_one)
                                         : std::any_of(degs.begin(), degs.end(), above_one);
}

}  // namespace

std::uint64_t ceil_star(const mpq_class& t) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return c <= 0 ? 0 : to_u64(c);
}

mpz_class floor_of(const mpq_class& t) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return f;
}

const char* to_string(DegreeReading reading) { return reading == DegreeReading::all ? "all" : "any"; }

const char* to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::pass: return "PASS";
        case VerifyStatus::fail: return "FAIL";
        case VerifyStatus::vacuous: return "VACUOUS";
    }
    return "?";
}

std::uint64_t ax_katz_bound(std::uint64_t n, std::span<const std::uint64_t> degs) {
    if (degs.empty()) throw ValidationError("Ax-Katz bound needs at least one polynomial");
    mpz_class sum = 0;
    std::uint64_t max_deg = 0;
    for (auto d : degs) {
        if (d < 1) throw ValidationError("polynomial degrees must be >= 1");
        sum += z(d);
        max_deg = std::max(max_deg, d);
    }
    return ceil_star(mpq_class(z(n) - sum, z(max_deg)));
}

std::uint64_t kmr_bound(std::uint64_t n, std::uint64_t s, std::uint64_t m, std::span<const std::uint64_t> degs,
                        DegreeReading reading) {
    if (m < 2) throw ValidationError("the Katz-Marshall-Ramage bound needs m >= 2");
    if (n > s && degree_condition(degs, reading)) {
        return to_u64(floor_of(mpq_class((z(n) - z(s) + 1) * z(m) - 1, 2)));
    }
    return ceil_star(mpq_class((mpz_class(z(n)) - z(s)) * z(m)));
}

std::uint64_t general_bound(std::uint64_t n, std::uint64_t m, std::uint64_t p, std::span<const unsigned> moduli,
                            std::span<const std::uint64_t> degs) {
    if (moduli.size() != degs.size() || moduli.empty()) {
        throw ValidationError("moduli and degrees must be nonempty lists of equal length");
    }
    if (m < 1) throw ValidationError("box level m must be >= 1");
    mpz_class numerator = z(n) * z(m);
    mpz_class denominator = 0;
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        if (moduli[k] < 1 || degs[k] < 1) throw ValidationError("moduli and degrees must be >= 1");
        numerator -= (zpow(p, moduli[k]) - 1) / z(p - 1) * z(degs[k]);
        denominator = std::max(denominator, mpz_class(zpow(p, moduli[k] - 1) * z(degs[k])));
    }
    return ceil_star(mpq_class(numerator, denominator));
}

std::uint64_t stacked_bound(std::uint64_t n, std::uint64_t s, std::uint64_t m, std::uint64_t m1,
                            std::span<const std::uint64_t> degs, DegreeReading reading) {
    if (m1 < 1 || m < m1) throw ValidationError("stacked bound needs m >= m1 >= 1");
    const std::uint64_t extra = n * (m - m1);
    if (m1 == 1) return ax_katz_bound(n, degs) + extra;
    return kmr_bound(n, s, m1, degs, reading) + extra;
}

std::uint64_t stacked_single_bound(std::uint64_t n, std::uint64_t m, std::uint64_t m_prime, std::uint64_t deg,
                                   bool require_n_gt_1) {
    if (m_prime < 1 || m < m_prime) throw ValidationError("stacked bound needs m >= m' >= 1");
    if (deg < 1) throw ValidationError("polynomial degree must be >= 1");
    const std::uint64_t extra = n * (m - m_prime);
    if (m_prime == 1) return ceil_star(mpq_class(z(n), z(deg)) - 1) + extra;
    if (deg > 1 && (!require_n_gt_1 || n > 1)) {
        return to_u64(floor_of(mpq_class(z(n) * z(m_prime) - 1, 2))) + extra;
    }
    return n * m - m_prime;
}

std::uint64_t minimal_d(const ProblemInstance& inst, std::size_t k, const MinimalDOptions& options) {
    const auto& cong = inst.system().at(k);
    const auto& ring = *inst.ring();
    const auto& box = inst.box();
    const std::uint64_t p = ring.p();
    const unsigned h = ring.h();
    const unsigned mk = cong.modulus_exponent;

    // p^{h floor(level/h)} for every level below m_k.
    std::vector<mpz_class> scale(mk);
    for (unsigned level = 0; level < mk; ++level) scale[level] = zpow(p, std::uint64_t{h} * (level / h));

    std::uint64_t inspected = 0;
    std::uint64_t best = 1;
    std::vector<unsigned> slots;
    for (const auto& [u, coeff] : cong.poly.terms()) {
        slots.clear();
        for (unsigned l = 0; l < u.size(); ++l) {
            for (std::uint32_t t = 0; t < u[l]; ++t) slots.push_back(l + 1);
        }
        const DigitVec digits = ring.to_digits(coeff);
        for (unsigned i = 0; i < mk; ++i) {
            if (digits[i].is_zero()) continue;
            const unsigned remaining = mk - 1 - i;
            // Depth-first over beta with |beta| <= remaining.
            auto visit = [&](auto&& self, std::size_t slot, unsigned used, std::uint64_t degree, bool zero) -> void {
                if (slot == slots.size()) {
                    if (++inspected > options.budget) {
                        throw BudgetExceeded("minimal_d enumeration exceeds its budget of " +
                                             std::to_string(options.budget));
                    }
                    const std::uint64_t deg = zero ? 0 : degree;
                    mpz_class ratio;
                    mpz_cdiv_q(ratio.get_mpz_t(), z(deg).get_mpz_t(), scale[i + used].get_mpz_t());
                    best = std::max(best, to_u64(ratio));
                    return;
                }
                for (unsigned beta = 0; used + beta <= remaining; ++beta) {
                    const std::uint64_t gdeg = box.generator_degree(beta, slots[slot]);
                    const bool factor_zero = beta >= box.m() && gdeg == 0 &&
                                             !box.generators().contains({beta, slots[slot]});
                    self(self, slot + 1, used + beta, degree + gdeg, zero || factor_zero);
                }
            };
            visit(visit, 0, 0, 0, false);
        }
    }
    return best;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& b : bounds) {
        if (b.name == name) return &b;
    }
    return nullptr;
}

std::optional<VerifyStatus> BoundReport::status() const {
    if (!count) return std::nullopt;
    if (count->cardinality == 0) return VerifyStatus::vacuous;
    for (const auto& b : bounds) {
        if (b.divides && !*b.divides) return VerifyStatus::fail;
    }
    return VerifyStatus::pass;
}

BoundReport bound_report(const ProblemInstance& inst, const std::optional<CountReport>& count,
                         const BoundOptions& options) {
    BoundReport report;
    const std::uint64_t n = inst.n();
    const std::uint64_t m = inst.m();
    const std::uint64_t s = inst.s();
    const std::uint64_t p = inst.field().p();
    const auto moduli = inst.moduli();
    report.degrees = inst.degrees();
    const auto& degs = report.degrees;
    const unsigned ms = inst.max_modulus();
    const unsigned m1 = moduli.front();
    const bool equal_moduli = m1 == ms;
    report.closeness = closeness_check(inst.box(), ms).holds;
    const std::string closeness_note =
        std::string("closeness at m_s=") + std::to_string(ms) + (report.closeness ? " holds" : " fails");

    auto add = [&](std::string name, bool applicable, std::optional<std::uint64_t> value, std::string note) {
        report.bounds.push_back({std::move(name), applicable, applicable ? value : std::nullopt, std::move(note), {}});
    };

    add("ax_katz", m == 1 && ms == 1, m == 1 && ms == 1 ? std::optional(ax_katz_bound(n, degs)) : std::nullopt,
        "needs m = 1 and every m_k = 1");

    const bool kmr_ok = m >= 2 && equal_moduli && m1 == m;
    add("kmr", kmr_ok, kmr_ok ? std::optional(kmr_bound(n, s, m, degs, options.reading)) : std::nullopt,
        std::string("needs m >= 2 and every m_k = m; degree reading ") + to_string(options.reading));

    add("cwg", m == 1 && report.closeness,
        m == 1 && report.closeness ? std::optional(cwg_bound(n, p, moduli, degs)) : std::nullopt,
        "needs m = 1; " + closeness_note);

    add("general", report.closeness,
        report.closeness ? std::optional(general_bound(n, m, p, moduli, degs)) : std::nullopt, closeness_note);

    const bool stacked_ok = report.closeness && equal_moduli && m >= m1;
    std::optional<std::uint64_t> stacked;
    if (stacked_ok) {
        stacked = stacked_bound(n, s, m, m1, degs, options.reading);
        if (s == 1 && *stacked != stacked_single_bound(n, m, m1, degs[0], true)) {
            throw std::logic_error("single-polynomial and system stacked bounds disagree");
        }
    }
    add("stacked", stacked_ok, stacked,
        "needs equal moduli m_1 = m_s <= m; " + closeness_note + "; degree reading " + to_string(options.reading));

    if (s == 1 && n == 1 && m >= m1) {
        // Literal single-polynomial reading without n > 1; recorded, never claimed.
        BoundEntry literal{"stacked_single_literal", false, stacked_single_bound(n, m, m1, degs[0], false),
                           "single-polynomial statement read without n > 1; not claimed for n = 1", {}};
        report.bounds.push_back(std::move(literal));
    }

    try {
        for (std::size_t k = 0; k < s; ++k) report.d_values.push_back(minimal_d(inst, k, options.minimal_d));
        add("improved", true, improved_bound(n, m, p, moduli, report.d_values), "d_k from minimal_d");
    } catch (const BudgetExceeded& e) {
        report.d_values.clear();
        add("improved", false, std::nullopt, e.what());
    }

    if (count) {
        report.count = count;
        const std::uint64_t h = inst.field().h();
        for (auto& b : report.bounds) {
            if (!b.applicable || !b.value) continue;
            b.divides = count->ord_p.at_least(static_cast<std::int64_t>(h * *b.value));
        }
    }
    return report;
}

}  // namespace wittbox
