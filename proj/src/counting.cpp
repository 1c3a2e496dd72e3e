#include "wittbox/counting.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wittbox/errors.hpp"

namespace wittbox {

namespace {

// Flattened form of the system for the per-point hot loop.
class SystemEvaluator {
public:
    explicit SystemEvaluator(const ProblemInstance& inst)
        : ring_(inst.ring()), n_(inst.n()), precision_(inst.evaluation_precision()), max_power_(n_, 0) {
        for (const auto& cong : inst.system()) {
            std::vector<Term> terms;
            for (const auto& [e, c] : cong.poly.terms()) {
                Term t{c, {}};
                for (unsigned v = 0; v < n_; ++v) {
                    if (e[v] == 0) continue;
                    t.powers.emplace_back(v, e[v]);
                    max_power_[v] = std::max(max_power_[v], e[v]);
                }
                terms.push_back(std::move(t));
            }
            polys_.push_back(std::move(terms));
            std::uint64_t pm = 1;
            for (unsigned i = 0; i < cong.modulus_exponent; ++i) pm *= ring_->p();
            moduli_.push_back(pm);
            exponents_.push_back(cong.modulus_exponent);
        }
        powers_.resize(n_);
        for (unsigned v = 0; v < n_; ++v) powers_[v].resize(max_power_[v] + 1);
    }

    void load(const BoxPoint& pt) {
        for (unsigned v = 0; v < n_; ++v) {
            const auto& digits = pt.expansion[v];
            GRElem y;
            std::uint64_t weight = 1;
            for (unsigned i = 0; i < precision_; ++i) {
                if (!digits[i].is_zero()) y = ring_->add(y, ring_->scale(ring_->teichmuller(digits[i]), weight));
                weight *= ring_->p();
            }
            auto& pw = powers_[v];
            pw[0] = ring_->one();
            for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = ring_->mul(pw[e - 1], y);
        }
    }

    GRElem value(std::size_t k) const {
        GRElem acc;
        for (const auto& t : polys_[k]) {
            GRElem term = t.coeff;
            for (const auto& [v, e] : t.powers) term = ring_->mul(term, powers_[v][e]);
            acc = ring_->add(acc, term);
        }
        return acc;
    }

    bool vanishes(std::size_t k) const {
        const GRElem v = value(k);
        for (unsigned i = 0; i < ring_->h(); ++i) {
            if (v[i] % moduli_[k] != 0) return false;
        }
        return true;
    }

    bool all_vanish(const BoxPoint& pt) {
        load(pt);
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if (!vanishes(k)) return false;
        }
        return true;
    }

    std::vector<GRElem> residues(const BoxPoint& pt) {
        load(pt);
        std::vector<GRElem> out;
        for (std::size_t k = 0; k < polys_.size(); ++k) out.push_back(ring_->truncate(value(k), exponents_[k]));
        return out;
    }

private:
    struct Term {
        GRElem coeff;
        std::vector<std::pair<unsigned, std::uint32_t>> powers;
    };

    std::shared_ptr<const GaloisRing> ring_;
    unsigned n_;
    unsigned precision_;
    std::vector<std::uint32_t> max_power_;
    std::vector<std::vector<Term>> polys_;
    std::vector<std::uint64_t> moduli_;
    std::vector<unsigned> exponents_;
    std::vector<std::vector<GRElem>> powers_;
};

}  // namespace

Variables system_variables(unsigned n) {
    std::vector<std::string> names;
    for (unsigned j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
    return make_variables(std::move(names));
}

ProblemInstance::ProblemInstance(BoxSpec box, std::vector<Congruence> system) : box_(std::move(box)) {
    if (system.empty()) throw ValidationError("congruence system is empty");
    unsigned max_mod = 0;
    for (const auto& c : system) {
        if (c.modulus_exponent < 1) throw ValidationError("modulus exponents must be >= 1");
        max_mod = std::max(max_mod, c.modulus_exponent);
    }
    ring_ = std::make_shared<const GaloisRing>(box_.field_ptr(), std::max(box_.m(), max_mod));
    const auto vars = system_variables(box_.n());
    const GRRing coeff_ring(ring_);
    for (auto& c : system) {
        if (!same_variables(c.poly.variables(), vars)) {
            throw ValidationError("system polynomials must use exactly the variables x1..x" +
                                  std::to_string(box_.n()));
        }
        const auto& src = c.poly.ring().ring();
        if (!(src.field().params() == box_.field().params())) {
            throw ValidationError("system polynomial is defined over a different residue field");
        }
        if (src.precision() < c.modulus_exponent) {
            throw ValidationError("system polynomial precision is below its modulus exponent");
        }
        // Coordinates mod p^{min(P, P_src)} are meaningful; lifting them
        // verbatim is exact for every digit below the modulus.
        GRPoly moved = map_coefficients(c.poly, coeff_ring, [&](const GRElem& a) {
            GRElem b;
            for (unsigned i = 0; i < ring_->h(); ++i) b[i] = a[i] % ring_->characteristic();
            return b;
        });
        system_.push_back({std::move(moved), c.modulus_exponent});
    }
    std::stable_sort(system_.begin(), system_.end(), [](const Congruence& a, const Congruence& b) {
        return a.modulus_exponent < b.modulus_exponent;
    });
    for (std::size_t k = 0; k < system_.size(); ++k) {
        if (degree(k) == 0) {
            throw ValidationError("f" + std::to_string(k + 1) + " is constant modulo p^" +
                                  std::to_string(system_[k].modulus_exponent));
        }
    }
}

ProblemInstance ProblemInstance::from_integers(BoxSpec box,
                                               const std::vector<std::pair<IntPoly, unsigned>>& system) {
    unsigned max_mod = 1;
    for (const auto& [f, mk] : system) max_mod = std::max(max_mod, mk);
    auto ring = std::make_shared<const GaloisRing>(box.field_ptr(), std::max(box.m(), max_mod));
    const GRRing coeff_ring(ring);
    std::vector<Congruence> congruences;
    for (const auto& [f, mk] : system) {
        congruences.push_back(
            {map_coefficients(f, coeff_ring, [&](const mpz_class& c) { return ring->from_int(c); }), mk});
    }
    return ProblemInstance(std::move(box), std::move(congruences));
}

std::uint64_t ProblemInstance::degree(std::size_t k) const {
    const auto& cong = system_[k];
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < cong.modulus_exponent; ++i) pm *= ring_->p();
    std::uint64_t deg = 0;
    for (const auto& [e, c] : cong.poly.terms()) {
        bool nonzero = false;
        for (unsigned i = 0; i < ring_->h(); ++i) nonzero = nonzero || c[i] % pm != 0;
        if (!nonzero) continue;
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        deg = std::max(deg, d);
    }
    return deg;
}

std::vector<std::uint64_t> ProblemInstance::degrees() const {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < system_.size(); ++k) out.push_back(degree(k));
    return out;
}

std::vector<unsigned> ProblemInstance::moduli() const {
    std::vector<unsigned> out;
    for (const auto& c : system_) out.push_back(c.modulus_exponent);
    return out;
}

std::vector<GRElem> evaluate_point(const ProblemInstance& inst, const BoxPoint& pt) {
    if (pt.expansion.size() != inst.n()) throw ValidationError("box point has the wrong number of coordinates");
    for (const auto& d : pt.expansion) {
        if (d.size() != inst.evaluation_precision()) {
            throw ValidationError("box point precision differs from the evaluation precision");
        }
    }
    SystemEvaluator eval(inst);
    return eval.residues(pt);
}

std::optional<mpq_class> CountReport::ord_q() const {
    if (ord_p.is_infinite()) return std::nullopt;
    mpq_class r(static_cast<long>(ord_p.value()), static_cast<unsigned long>(h));
    r.canonicalize();
    return r;
}

std::string CountReport::ord_q_string() const {
    if (ord_p.is_infinite()) return "inf";
    return std::to_string(ord_p.value()) + "/" + std::to_string(h);
}

std::uint64_t count_zeros_in_range(const ProblemInstance& inst, std::uint64_t begin, std::uint64_t end) {
    const BoxEnumerator en(inst.box(), inst.evaluation_precision());
    end = std::min(end, en.size());
    SystemEvaluator eval(inst);
    std::uint64_t count = 0;
    en.for_each(begin, end, [&](std::uint64_t, const BoxPoint& pt) {
        if (eval.all_vanish(pt)) ++count;
    });
    return count;
}

CountReport count_zeros(const ProblemInstance& inst, const CountOptions& options) {
    const std::uint64_t total = inst.box().base_size();
    if (total > options.budget) {
        throw BudgetExceeded("enumeration of " + std::to_string(total) + " box points exceeds the budget of " +
                             std::to_string(options.budget));
    }
    unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t parts = options.partitions != 0 ? options.partitions : std::uint64_t{threads} * 4;
    parts = std::max<std::uint64_t>(1, std::min(parts, total));
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, parts));

    std::vector<std::uint64_t> partial(parts, 0);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < parts; k = next++) {
            const auto begin = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * k / parts);
            const auto end = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (k + 1) / parts);
            partial[k] = count_zeros_in_range(inst, begin, end);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    CountReport report;
    for (auto c : partial) report.cardinality += c;
    report.ord_p = ord_p_of_count(report.cardinality, inst.field().p());
    report.h = inst.field().h();
    return report;
}

}  // namespace wittbox
