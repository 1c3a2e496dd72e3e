#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "wittbox/galois_ring.hpp"
#include "wittbox/int_poly.hpp"

namespace wittbox {

// Generator position (i, j): digit i of coordinate j (j is 1-based).
struct GeneratorIndex {
    unsigned i = 0;
    unsigned j = 1;

    friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;
};

// The nm free-digit variables x[i][j], i in [0, m-1], j in [1, n], ordered by
// (i, j); x[i][j] sits at index i*n + j - 1.
Variables box_variables(unsigned n, unsigned m);

inline std::size_t box_variable_index(unsigned i, unsigned j, unsigned n) {
    return std::size_t{i} * n + (j - 1);
}

// A box B_m in Z_q^n given by reduced generator polynomials g_{ij} (i >= m)
// over F_q in the box variables. Digits below m are the free variables
// themselves; generators that are not stored are zero.
class BoxSpec {
public:
    // Validates indices (i >= m, 1 <= j <= n), the variable list, and
    // reducedness. Zero generators are dropped.
    BoxSpec(std::shared_ptr<const Field> field, unsigned n, unsigned m,
            std::map<GeneratorIndex, FqPoly> generators);

    // All generators zero.
    static BoxSpec teichmuller(std::shared_ptr<const Field> field, unsigned n, unsigned m);
    // Additionally requires every g_{ij} to use only column-j variables.
    static BoxSpec split(std::shared_ptr<const Field> field, unsigned n, unsigned m,
                         std::map<GeneratorIndex, FqPoly> generators);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    unsigned n() const noexcept { return n_; }
    unsigned m() const noexcept { return m_; }
    const Variables& variables() const noexcept { return vars_; }
    // Nonzero generators only.
    const std::map<GeneratorIndex, FqPoly>& generators() const noexcept { return generators_; }

    // g_{ij} for any i >= 0: the variable x[i][j] below m, the stored generator
    // or zero above.
    FqPoly generator(unsigned i, unsigned j) const;
    // deg g_{ij} with deg(x[i][j]) = 1 for i < m and deg(0) = 0.
    std::uint64_t generator_degree(unsigned i, unsigned j) const;

    bool is_split() const;
    // q^{nm}; throws BudgetExceeded if it does not fit in 63 bits.
    std::uint64_t base_size() const;

    friend bool operator==(const BoxSpec& a, const BoxSpec& b) {
        return a.field_->params() == b.field_->params() && a.n_ == b.n_ && a.m_ == b.m_ &&
               a.generators_ == b.generators_;
    }

private:
    std::shared_ptr<const Field> field_;
    unsigned n_;
    unsigned m_;
    Variables vars_;
    std::map<GeneratorIndex, FqPoly> generators_;
};

// An element of the box: the free digits (base) and its n coordinates as
// Teichmueller digit vectors of a fixed precision.
struct BoxPoint {
    std::vector<FqElem> base;
    std::vector<DigitVec> expansion;

    friend bool operator==(const BoxPoint&, const BoxPoint&) = default;
};

// Index-addressable view of a box at precision M' >= m. Point k has base digit
// x[i][j] equal to the base-q digit of k at flattened position i*n + j - 1
// (position 0 least significant), matching the field enumeration order.
class BoxEnumerator {
public:
    BoxEnumerator(const BoxSpec& spec, unsigned precision);

    std::uint64_t size() const noexcept { return size_; }
    unsigned precision() const noexcept { return precision_; }

    void base_at(std::uint64_t index, std::span<FqElem> out) const;
    // Fills expansion digits (precision per coordinate) from a base point.
    void expand(std::span<const FqElem> base, std::vector<DigitVec>& out) const;
    BoxPoint point(std::uint64_t index) const;

    // Calls fn(index, point) for index in [begin, end).
    template <class Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
        BoxPoint pt;
        pt.base.resize(std::size_t{n_} * m_);
        for (std::uint64_t k = begin; k < end; ++k) {
            base_at(k, pt.base);
            expand(pt.base, pt.expansion);
            fn(k, static_cast<const BoxPoint&>(pt));
        }
    }

private:
    std::shared_ptr<const Field> field_;
    unsigned n_;
    unsigned m_;
    unsigned precision_;
    std::uint64_t size_;
    // generators_[(i - m) * n + (j - 1)] for i in [m, precision).
    std::vector<FqPoly> generators_;
};

// All q^{nm} points in enumeration order.
std::vector<BoxPoint> box_enumerate(const BoxSpec& spec, unsigned precision);

struct ClosenessViolation {
    unsigned i;
    unsigned j;
    std::uint64_t degree;
    std::uint64_t limit;

    friend bool operator==(const ClosenessViolation&, const ClosenessViolation&) = default;
};

struct ClosenessReport {
    bool holds = true;
    std::vector<ClosenessViolation> violations;
};

// deg g_{ij} <= p^{h floor(i/h)} for all i < m_prime and all j.
ClosenessReport closeness_check(const BoxSpec& spec, unsigned m_prime);

// Recovers the unique reduced generators g_{ij}, m <= i < precision, from the
// full table of box points by symbolic interpolation
//   g(x) = sum_a v_a prod_k (1 - (x_k - a_k)^{q-1}).
BoxSpec box_from_table(std::shared_ptr<const Field> field, unsigned n, unsigned m, unsigned precision,
                       std::span<const BoxPoint> table);

}  // namespace wittbox
