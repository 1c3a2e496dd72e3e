#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "wittbox/coefficient_rings.hpp"
#include "wittbox/errors.hpp"

namespace wittbox {

using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order, largest first: higher total degree wins, ties
// are broken by the first differing exponent in declared variable order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (da != db) return da > db;
        return a > b;
    }
};

using Variables = std::shared_ptr<const std::vector<std::string>>;

inline Variables make_variables(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_variables(const Variables& a, const Variables& b) {
    return a == b || *a == *b;
}

template <CoefficientRing R>
typename R::value_type ring_pow(const R& ring, typename R::value_type base, std::uint64_t e) {
    auto result = ring.one();
    while (e > 0) {
        if (e & 1) result = ring.mul(result, base);
        e >>= 1;
        if (e > 0) base = ring.mul(base, base);
    }
    return result;
}

// Sparse multivariate polynomial over a coefficient ring. Terms are kept in
// canonical grlex order with no stored zero coefficients.
template <CoefficientRing R>
class MultiPoly {
public:
    using Ring = R;
    using Coeff = typename R::value_type;
    using Terms = std::map<Monomial, Coeff, GrlexGreater>;

    MultiPoly(R ring, Variables vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

    static MultiPoly constant(R ring, Variables vars, const Coeff& c) {
        MultiPoly f(std::move(ring), std::move(vars));
        f.add_term(Monomial(f.arity(), 0), c);
        return f;
    }

    static MultiPoly variable(R ring, Variables vars, std::size_t index) {
        MultiPoly f(std::move(ring), std::move(vars));
        if (index >= f.arity()) throw ConfigError("variable index out of range");
        Monomial e(f.arity(), 0);
        e[index] = 1;
        f.add_term(e, f.ring_.one());
        return f;
    }

    const R& ring() const noexcept { return ring_; }
    const Variables& variables() const noexcept { return vars_; }
    std::size_t arity() const noexcept { return vars_->size(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Adds c * X^e to the polynomial, dropping the term if it cancels.
    void add_term(const Monomial& e, const Coeff& c) {
        if (e.size() != arity()) throw ConfigError("exponent vector arity mismatch");
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coefficient(const Monomial& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& g) {
        check_compatible(g);
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& g) {
        check_compatible(g);
        for (const auto& [e, c] : g.terms_) add_term(e, ring_.neg(c));
        return *this;
    }

    friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
    friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }

    MultiPoly operator-() const {
        MultiPoly out(ring_, vars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, ring_.neg(c));
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
        f.check_compatible(g);
        MultiPoly out(f.ring_, f.vars_);
        Monomial e(f.arity());
        for (const auto& [ef, cf] : f.terms_) {
            for (const auto& [eg, cg] : g.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
                out.add_term(e, f.ring_.mul(cf, cg));
            }
        }
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& g) { return *this = *this * g; }

    MultiPoly scaled(const Coeff& k) const {
        MultiPoly out(ring_, vars_);
        for (const auto& [e, c] : terms_) out.add_term(e, ring_.mul(c, k));
        return out;
    }

    MultiPoly pow(std::uint64_t e) const {
        MultiPoly result = constant(ring_, vars_, ring_.one());
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    // Total degree; the zero polynomial has degree 0.
    std::uint64_t total_degree() const {
        if (terms_.empty()) return 0;
        const auto& lead = terms_.begin()->first;
        return std::accumulate(lead.begin(), lead.end(), std::uint64_t{0});
    }

    bool is_constant() const { return total_degree() == 0; }

    // Degree of the polynomial in one variable.
    std::uint64_t degree_in(std::size_t var) const {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max<std::uint64_t>(d, e[var]);
        return d;
    }

    // max over terms of sum exponent * weight; 0 for the zero polynomial.
    std::uint64_t weighted_degree(std::span<const std::uint64_t> weights) const {
        if (weights.size() != arity()) throw ConfigError("weight vector arity mismatch");
        std::uint64_t best = 0;
        for (const auto& [e, c] : terms_) best = std::max(best, weight_of(e, weights));
        return best;
    }

    std::uint64_t weighted_degree(const std::map<std::string, std::uint64_t>& weights) const {
        return weighted_degree(weights_by_name(weights));
    }

    // True iff every term has weighted degree exactly `degree`.
    bool weighted_homogeneous(std::span<const std::uint64_t> weights, std::uint64_t degree) const {
        if (weights.size() != arity()) throw ConfigError("weight vector arity mismatch");
        for (const auto& [e, c] : terms_) {
            if (weight_of(e, weights) != degree) return false;
        }
        return true;
    }

    Coeff evaluate(std::span<const Coeff> values) const {
        if (values.size() != arity()) throw ConfigError("assignment arity mismatch");
        Coeff acc = ring_.zero();
        for (const auto& [e, c] : terms_) {
            Coeff term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0) term = ring_.mul(term, ring_pow(ring_, values[i], e[i]));
            }
            acc = ring_.add(acc, term);
        }
        return acc;
    }

    Coeff evaluate(const std::map<std::string, Coeff>& assignment) const {
        std::vector<Coeff> values;
        values.reserve(arity());
        for (const auto& name : *vars_) {
            auto it = assignment.find(name);
            if (it == assignment.end()) throw ConfigError("no value assigned to variable " + name);
            values.push_back(it->second);
        }
        return evaluate(values);
    }

    // Canonical rendering, e.g. `X0^2*Y1 + 2*X1*Y1`; the zero polynomial is `0`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            auto [negative, magnitude] = ring_.render_signed(c);
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (*vars_)[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += magnitude;
            } else if (magnitude == "1") {
                out += mono;
            } else if (magnitude.find('+') != std::string::npos) {
                out += "(" + magnitude + ")*" + mono;
            } else {
                out += magnitude + "*" + mono;
            }
        }
        return out;
    }

    friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
        if (!same_variables(f.vars_, g.vars_) || f.terms_.size() != g.terms_.size()) return false;
        auto it = g.terms_.begin();
        for (const auto& [e, c] : f.terms_) {
            if (e != it->first || !f.ring_.equal(c, it->second)) return false;
            ++it;
        }
        return true;
    }

private:
    void check_compatible(const MultiPoly& g) const {
        if (!same_variables(vars_, g.vars_)) throw ConfigError("polynomials use different variable sets");
    }

    static std::uint64_t weight_of(const Monomial& e, std::span<const std::uint64_t> weights) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < e.size(); ++i) w += std::uint64_t{e[i]} * weights[i];
        return w;
    }

    std::vector<std::uint64_t> weights_by_name(const std::map<std::string, std::uint64_t>& weights) const {
        std::vector<std::uint64_t> out;
        out.reserve(arity());
        for (const auto& name : *vars_) {
            auto it = weights.find(name);
            if (it == weights.end()) throw ConfigError("no weight given for variable " + name);
            out.push_back(it->second);
        }
        return out;
    }

    R ring_;
    Variables vars_;
    Terms terms_;
};

using IntPoly = MultiPoly<IntegerRing>;
using FqPoly = MultiPoly<FqRing>;
using GRPoly = MultiPoly<GRRing>;

// Divides every coefficient by c; throws ArithmeticError if any division is inexact.
IntPoly int_divide_exact(const IntPoly& f, const mpz_class& c);

// Replaces each positive exponent e by ((e-1) mod (q-1)) + 1, which preserves
// the induced function on F_q^n.
FqPoly reduce_exponents(const FqPoly& f);

// True iff every variable exponent is at most q-1.
bool is_reduced(const FqPoly& f);

template <CoefficientRing To, CoefficientRing From, class Fn>
MultiPoly<To> map_coefficients(const MultiPoly<From>& f, To ring, Fn&& fn) {
    MultiPoly<To> out(std::move(ring), f.variables());
    for (const auto& [e, c] : f.terms()) out.add_term(e, fn(c));
    return out;
}

// Multiplies the exponent of variable i by factors[i].
template <CoefficientRing R>
MultiPoly<R> scale_exponents(const MultiPoly<R>& f, std::span<const std::uint64_t> factors) {
    if (factors.size() != f.arity()) throw ConfigError("exponent factor arity mismatch");
    MultiPoly<R> out(f.ring(), f.variables());
    Monomial e2(f.arity());
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e2[i] = static_cast<std::uint32_t>(e[i] * factors[i]);
        out.add_term(e2, c);
    }
    return out;
}

// Moves f onto another variable list. old_to_new[i] is the new index of old
// variable i, or -1 when that variable must not occur in f.
template <CoefficientRing R>
MultiPoly<R> remap_variables(const MultiPoly<R>& f, Variables vars, std::span<const int> old_to_new) {
    if (old_to_new.size() != f.arity()) throw ConfigError("variable map arity mismatch");
    MultiPoly<R> out(f.ring(), vars);
    Monomial e2(vars->size());
    for (const auto& [e, c] : f.terms()) {
        std::fill(e2.begin(), e2.end(), 0u);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (old_to_new[i] < 0) throw ConfigError("variable " + (*f.variables())[i] + " has no image");
            e2[static_cast<std::size_t>(old_to_new[i])] += e[i];
        }
        out.add_term(e2, c);
    }
    return out;
}

// Substitutes constants for some variables; values[i] is applied when
// fixed[i] is true. The variable list is unchanged.
template <CoefficientRing R>
MultiPoly<R> specialize(const MultiPoly<R>& f, std::span<const bool> fixed,
                        std::span<const typename R::value_type> values) {
    MultiPoly<R> out(f.ring(), f.variables());
    Monomial e2(f.arity());
    for (const auto& [e, c] : f.terms()) {
        auto coeff = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (fixed[i]) {
                e2[i] = 0;
                if (e[i] != 0) coeff = f.ring().mul(coeff, ring_pow(f.ring(), values[i], e[i]));
            } else {
                e2[i] = e[i];
            }
        }
        out.add_term(e2, coeff);
    }
    return out;
}

}  // namespace wittbox
