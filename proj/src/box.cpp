#include "wittbox/box.hpp"

#include <limits>
#include <string>

#include "wittbox/errors.hpp"

namespace wittbox {

namespace {

std::string index_name(GeneratorIndex idx) {
    return "g[" + std::to_string(idx.i) + "][" + std::to_string(idx.j) + "]";
}

// p^e, saturating at the largest uint64.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t out = 1;
    for (std::uint64_t k = 0; k < e; ++k) {
        if (out > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
        out *= p;
    }
    return out;
}

}  // namespace

Variables box_variables(unsigned n, unsigned m) {
    std::vector<std::string> names;
    names.reserve(std::size_t{n} * m);
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            names.push_back("x[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    return make_variables(std::move(names));
}

BoxSpec::BoxSpec(std::shared_ptr<const Field> field, unsigned n, unsigned m,
                 std::map<GeneratorIndex, FqPoly> generators)
    : field_(std::move(field)), n_(n), m_(m), vars_(box_variables(n, m)) {
    if (n_ < 1 || m_ < 1) throw ValidationError("box needs n >= 1 and m >= 1");
    for (auto& [idx, g] : generators) {
        if (idx.i < m_ || idx.j < 1 || idx.j > n_) {
            throw ValidationError(index_name(idx) + " is out of range (need i >= m=" + std::to_string(m_) +
                                  ", 1 <= j <= n=" + std::to_string(n_) + ")");
        }
        if (!same_variables(g.variables(), vars_)) {
            throw ValidationError(index_name(idx) + " must use exactly the box variables x[i][j], i < m");
        }
        if (!(g.ring().field().params() == field_->params())) {
            throw ValidationError(index_name(idx) + " is defined over a different field");
        }
        if (!is_reduced(g)) {
            throw ValidationError(index_name(idx) + " is not reduced (some exponent exceeds q-1)");
        }
        if (!g.is_zero()) generators_.emplace(idx, std::move(g));
    }
}

BoxSpec BoxSpec::teichmuller(std::shared_ptr<const Field> field, unsigned n, unsigned m) {
    return BoxSpec(std::move(field), n, m, {});
}

BoxSpec BoxSpec::split(std::shared_ptr<const Field> field, unsigned n, unsigned m,
                       std::map<GeneratorIndex, FqPoly> generators) {
    BoxSpec spec(std::move(field), n, m, std::move(generators));
    if (!spec.is_split()) {
        throw ValidationError("split box generators may only use variables of their own coordinate");
    }
    return spec;
}

FqPoly BoxSpec::generator(unsigned i, unsigned j) const {
    const FqRing ring(field_);
    if (i < m_) return FqPoly::variable(ring, vars_, box_variable_index(i, j, n_));
    if (auto it = generators_.find({i, j}); it != generators_.end()) return it->second;
    return FqPoly(ring, vars_);
}

std::uint64_t BoxSpec::generator_degree(unsigned i, unsigned j) const {
    if (i < m_) return 1;
    if (auto it = generators_.find({i, j}); it != generators_.end()) return it->second.total_degree();
    return 0;
}

bool BoxSpec::is_split() const {
    for (const auto& [idx, g] : generators_) {
        for (const auto& [e, c] : g.terms()) {
            for (unsigned i = 0; i < m_; ++i) {
                for (unsigned j = 1; j <= n_; ++j) {
                    if (j != idx.j && e[box_variable_index(i, j, n_)] != 0) return false;
                }
            }
        }
    }
    return true;
}

std::uint64_t BoxSpec::base_size() const {
    const std::uint64_t q = field_->q();
    std::uint64_t size = 1;
    for (unsigned k = 0; k < n_ * m_; ++k) {
        if (size > (std::uint64_t{1} << 62) / q) throw BudgetExceeded("box base space exceeds 2^62 points");
        size *= q;
    }
    return size;
}

BoxEnumerator::BoxEnumerator(const BoxSpec& spec, unsigned precision)
    : field_(spec.field_ptr()),
      n_(spec.n()),
      m_(spec.m()),
      precision_(precision),
      size_(spec.base_size()) {
    if (precision_ < m_) throw ValidationError("enumeration precision must be at least m");
    for (unsigned i = m_; i < precision_; ++i) {
        for (unsigned j = 1; j <= n_; ++j) generators_.push_back(spec.generator(i, j));
    }
}

void BoxEnumerator::base_at(std::uint64_t index, std::span<FqElem> out) const {
    const std::uint64_t q = field_->q();
    for (auto& digit : out) {
        digit = FqElem{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
}

void BoxEnumerator::expand(std::span<const FqElem> base, std::vector<DigitVec>& out) const {
    out.resize(n_);
    for (unsigned j = 1; j <= n_; ++j) {
        auto& digits = out[j - 1].digits;
        digits.resize(precision_);
        for (unsigned i = 0; i < precision_; ++i) {
            digits[i] = i < m_ ? base[box_variable_index(i, j, n_)]
                               : generators_[std::size_t{i - m_} * n_ + (j - 1)].evaluate(base);
        }
    }
}

BoxPoint BoxEnumerator::point(std::uint64_t index) const {
    BoxPoint pt;
    pt.base.resize(std::size_t{n_} * m_);
    base_at(index, pt.base);
    expand(pt.base, pt.expansion);
    return pt;
}

std::vector<BoxPoint> box_enumerate(const BoxSpec& spec, unsigned precision) {
    const BoxEnumerator en(spec, precision);
    std::vector<BoxPoint> points;
    points.reserve(en.size());
    en.for_each(0, en.size(), [&](std::uint64_t, const BoxPoint& pt) { points.push_back(pt); });
    return points;
}

ClosenessReport closeness_check(const BoxSpec& spec, unsigned m_prime) {
    ClosenessReport report;
    const std::uint64_t p = spec.field().p();
    const unsigned h = spec.field().h();
    for (const auto& [idx, g] : spec.generators()) {
        if (idx.i >= m_prime) continue;
        const std::uint64_t limit = saturating_pow(p, std::uint64_t{h} * (idx.i / h));
        const std::uint64_t degree = g.total_degree();
        if (degree > limit) report.violations.push_back({idx.i, idx.j, degree, limit});
    }
    report.holds = report.violations.empty();
    return report;
}

BoxSpec box_from_table(std::shared_ptr<const Field> field, unsigned n, unsigned m, unsigned precision,
                       std::span<const BoxPoint> table) {
    const BoxSpec teich = BoxSpec::teichmuller(field, n, m);
    const std::uint64_t expected = teich.base_size();
    if (table.size() != expected) {
        throw ValidationError("box table needs " + std::to_string(expected) + " rows, got " +
                              std::to_string(table.size()));
    }
    if (precision < m) throw ValidationError("table precision must be at least m");

    const std::size_t nm = std::size_t{n} * m;
    const std::uint64_t q = field->q();
    std::vector<bool> seen(expected, false);
    for (const auto& row : table) {
        if (row.base.size() != nm || row.expansion.size() != n) {
            throw ValidationError("box table row has the wrong shape");
        }
        std::uint64_t key = 0;
        for (std::size_t k = nm; k-- > 0;) {
            if (!field->contains(row.base[k])) throw ValidationError("box table base digit outside F_q");
            key = key * q + row.base[k].code();
        }
        if (seen[key]) throw ValidationError("box table has a duplicate base point");
        seen[key] = true;
        for (unsigned j = 1; j <= n; ++j) {
            const auto& digits = row.expansion[j - 1];
            if (digits.size() != precision) throw ValidationError("box table digit vector has wrong precision");
            for (unsigned i = 0; i < m; ++i) {
                if (digits[i] != row.base[box_variable_index(i, j, n)]) {
                    throw ValidationError("box table digit " + std::to_string(i) + " of coordinate " +
                                          std::to_string(j) + " disagrees with its base point");
                }
            }
        }
    }

    const FqRing ring(field);
    const auto& vars = teich.variables();
    // indicator[k][a] = 1 - (x_k - a)^{q-1}, the indicator of x_k == a.
    std::vector<std::vector<FqPoly>> indicator(nm);
    for (std::size_t k = 0; k < nm; ++k) {
        const FqPoly x = FqPoly::variable(ring, vars, k);
        for (auto a : field->enumerate()) {
            const FqPoly shifted = x - FqPoly::constant(ring, vars, a);
            indicator[k].push_back(FqPoly::constant(ring, vars, field->one()) - shifted.pow(q - 1));
        }
    }

    std::map<GeneratorIndex, FqPoly> generators;
    for (unsigned i = m; i < precision; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            FqPoly g(ring, vars);
            for (const auto& row : table) {
                const FqElem value = row.expansion[j - 1][i];
                if (value.is_zero()) continue;
                FqPoly term = FqPoly::constant(ring, vars, value);
                for (std::size_t k = 0; k < nm; ++k) term *= indicator[k][row.base[k].code()];
                g += term;
            }
            g = reduce_exponents(g);
            if (!g.is_zero()) generators.emplace(GeneratorIndex{i, j}, std::move(g));
        }
    }
    return BoxSpec(std::move(field), n, m, std::move(generators));
}

}  // namespace wittbox
