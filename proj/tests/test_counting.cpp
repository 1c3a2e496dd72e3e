#include <doctest.h>

#include <random>

#include "wittbox/counting.hpp"
#include "wittbox/errors.hpp"
#include "wittbox/selftest.hpp"

using namespace wittbox;

namespace {

const IntegerRing Z{};

std::shared_ptr<const Field> f2() { return std::make_shared<const Field>(FieldParams::prime(2)); }

IntPoly linear(unsigned n, std::vector<long> coeffs) {
    const auto v = system_variables(n);
    IntPoly f(Z, v);
    for (unsigned j = 0; j < n; ++j) f += IntPoly::constant(Z, v, coeffs[j]) * IntPoly::variable(Z, v, j);
    return f;
}

BoxSpec example_box(bool second_generator) {
    const auto f = f2();
    const auto vars = box_variables(4, 2);
    auto x = [&](unsigned i, unsigned j) { return FqPoly::variable(FqRing(f), vars, box_variable_index(i, j, 4)); };
    std::map<GeneratorIndex, FqPoly> g;
    g.emplace(GeneratorIndex{2, 1}, x(0, 1) * x(1, 1) * x(0, 2) * x(1, 4));
    if (second_generator) g.emplace(GeneratorIndex{2, 2}, x(0, 1) * x(1, 2) * x(0, 3) * x(0, 4));
    return BoxSpec(f, 4, 2, g);
}

// Plain-integer count for the binary examples: Y_j = d0 + 2 d1 + 4 d2 with
// d2 = g_{2j}(base), f evaluated with machine integers mod 8.
std::uint64_t integer_count(bool second_generator, const std::vector<long>& a) {
    std::uint64_t count = 0;
    for (unsigned k = 0; k < 256; ++k) {
        auto bit = [&](unsigned i, unsigned j) -> long { return (k >> (i * 4 + j - 1)) & 1; };
        long y[5] = {};
        for (unsigned j = 1; j <= 4; ++j) y[j] = bit(0, j) + 2 * bit(1, j);
        y[1] += 4 * (bit(0, 1) * bit(1, 1) * bit(0, 2) * bit(1, 4));
        if (second_generator) y[2] += 4 * (bit(0, 1) * bit(1, 2) * bit(0, 3) * bit(0, 4));
        const long v = a[0] * y[1] + a[1] * y[2] + a[2] * y[3] + a[3] * y[4];
        if (v % 8 == 0) ++count;
    }
    return count;
}

// Independent count: expand every box point to ring elements and evaluate
// each f_k with generic polynomial evaluation.
std::uint64_t generic_count(const ProblemInstance& inst) {
    const auto& ring = *inst.ring();
    std::uint64_t count = 0;
    for (const auto& pt : box_enumerate(inst.box(), inst.evaluation_precision())) {
        std::vector<GRElem> y;
        for (const auto& d : pt.expansion) y.push_back(ring.from_digits(d));
        bool zero = true;
        for (const auto& c : inst.system()) zero = zero && ring.truncate(c.poly.evaluate(y), c.modulus_exponent).is_zero();
        count += zero;
    }
    return count;
}

}  // namespace

TEST_CASE("published binary examples against a plain-integer count") {
    const auto a = ProblemInstance::from_integers(example_box(false), {{linear(4, {1, 3, 5, 6}), 3}});
    const auto ra = count_zeros(a);
    CHECK(ra.cardinality == integer_count(false, {1, 3, 5, 6}));
    CHECK(ra.cardinality == 30);
    CHECK(ra.ord_p == Valuation(1));
    CHECK(ra.ord_q_string() == "1/1");

    const auto b = ProblemInstance::from_integers(example_box(true), {{linear(4, {1, 2, 2, 4}), 3}});
    const auto rb = count_zeros(b);
    CHECK(rb.cardinality == integer_count(true, {1, 2, 2, 4}));
    CHECK(rb.cardinality == 32);
    CHECK(rb.ord_p == Valuation(5));
}

TEST_CASE("smallest instance") {
    const auto inst = ProblemInstance::from_integers(BoxSpec::teichmuller(f2(), 1, 1), {{linear(1, {1}), 1}});
    const auto r = count_zeros(inst);
    CHECK(r.cardinality == 1);
    CHECK(r.ord_p == Valuation(0));
}

TEST_CASE("empty zero set has infinite valuation") {
    const auto v = system_variables(1);
    const IntPoly f = IntPoly::variable(Z, v, 0).pow(2) + IntPoly::constant(Z, v, 1);
    // x^2 + 1 has no root mod 3.
    const auto field = std::make_shared<const Field>(FieldParams::prime(3));
    const auto r = count_zeros(ProblemInstance::from_integers(BoxSpec::teichmuller(field, 1, 1), {{f, 1}}));
    CHECK(r.cardinality == 0);
    CHECK(r.ord_p.is_infinite());
    CHECK(r.ord_q_string() == "inf");
    CHECK_FALSE(r.ord_q().has_value());
}

TEST_CASE("evaluate_point") {
    const auto inst = ProblemInstance::from_integers(example_box(false), {{linear(4, {1, 3, 5, 6}), 3}});
    const BoxEnumerator en(inst.box(), inst.evaluation_precision());
    // Base with x01 = x02 = 1: Y = (1, 1, 0, 0).
    const std::uint64_t idx = (1u << box_variable_index(0, 1, 4)) | (1u << box_variable_index(0, 2, 4));
    const auto res = evaluate_point(inst, en.point(idx));
    REQUIRE(res.size() == 1);
    CHECK(res[0] == GaloisRing(f2(), 3).from_int(4));
    CHECK(evaluate_point(inst, en.point(0))[0].is_zero());

    // Residues do not change when the same point is evaluated at a higher precision.
    const GaloisRing big(f2(), 6);
    const GRRing gr(std::make_shared<const GaloisRing>(f2(), 6));
    const GRPoly f = map_coefficients(linear(4, {1, 3, 5, 6}), gr, [&](const mpz_class& c) { return big.from_int(c); });
    const BoxEnumerator wide(inst.box(), 6);
    for (std::uint64_t k = 0; k < en.size(); k += 7) {
        std::vector<GRElem> y;
        for (const auto& d : wide.point(k).expansion) y.push_back(big.from_digits(d));
        CHECK(big.truncate(f.evaluate(y), 3) == evaluate_point(inst, en.point(k))[0]);
    }
}

TEST_CASE("counts agree with generic evaluation on random instances") {
    std::mt19937_64 rng(99);
    const std::vector<std::pair<std::uint32_t, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {3, 2}};
    int checked = 0;
    for (int trial = 0; checked < 24; ++trial) {
        const auto [p, h] = fields[trial % fields.size()];
        const auto field = std::make_shared<const Field>(FieldParams::with_default_modulus(p, h));
        const unsigned n = 2, m = (field->q() > 3) ? 1 : 2;
        const unsigned mk = 1 + static_cast<unsigned>(rng() % 3);
        const unsigned precision = std::max(m, mk);
        auto ring = std::make_shared<const GaloisRing>(field, precision);
        const GRRing gr(ring);
        const auto v = system_variables(n);
        GRPoly f(gr, v);
        for (int t = 0; t < 3; ++t) {
            Monomial e{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3)};
            f.add_term(e, ring->element(rng() % ring->size()));
        }
        try {
            const ProblemInstance inst(random_box(field, n, m, precision, 0, rng), {{f, mk}});
            CHECK(count_zeros(inst).cardinality == generic_count(inst));
            ++checked;
        } catch (const ValidationError&) {
        }
    }
}

TEST_CASE("partitioning, threading and system order do not change the result") {
    const auto v = system_variables(3);
    auto x = [&](unsigned j) { return IntPoly::variable(Z, v, j); };
    const IntPoly g1 = x(0) * x(1) + x(2).pow(2) + IntPoly::constant(Z, v, 3);
    const IntPoly g2 = x(0) + IntPoly::constant(Z, v, 2) * x(2);
    const auto field = std::make_shared<const Field>(FieldParams::prime(3));
    std::mt19937_64 rng(3);
    const BoxSpec box = random_box(field, 3, 2, 3, 0, rng);
    const auto inst = ProblemInstance::from_integers(box, {{g1, 2}, {g2, 3}});
    const auto swapped = ProblemInstance::from_integers(box, {{g2, 3}, {g1, 2}});
    const auto reference = count_zeros(inst, {.budget = 1u << 24, .threads = 1, .partitions = 1});
    for (unsigned threads : {1u, 2u, 4u}) {
        for (unsigned parts : {1u, 3u, 7u, 64u, 1000u}) {
            CHECK(count_zeros(inst, {.budget = 1u << 24, .threads = threads, .partitions = parts}) == reference);
        }
    }
    CHECK(count_zeros(swapped) == reference);
    std::uint64_t pieces = 0;
    for (std::uint64_t b = 0; b < 729; b += 100) pieces += count_zeros_in_range(inst, b, b + 100);
    CHECK(pieces == reference.cardinality);
    CHECK(inst.moduli() == std::vector<unsigned>{2, 3});
    CHECK(swapped.moduli() == std::vector<unsigned>{2, 3});
}

TEST_CASE("raising a modulus never increases the count") {
    const auto field = std::make_shared<const Field>(FieldParams::prime(2));
    std::mt19937_64 rng(8);
    const BoxSpec box = random_box(field, 3, 2, 5, 0, rng);
    const auto v = system_variables(3);
    const IntPoly f = IntPoly::variable(Z, v, 0) * IntPoly::variable(Z, v, 1) + IntPoly::variable(Z, v, 2).pow(3) +
                      IntPoly::constant(Z, v, 5) * IntPoly::variable(Z, v, 1);
    std::uint64_t previous = ~std::uint64_t{0};
    for (unsigned mk = 1; mk <= 5; ++mk) {
        const auto c = count_zeros(ProblemInstance::from_integers(box, {{f, mk}})).cardinality;
        CHECK(c <= previous);
        previous = c;
    }
}

TEST_CASE("degrees ignore terms that vanish modulo p^{m_k}") {
    const auto v = system_variables(2);
    const IntPoly f = IntPoly::constant(Z, v, 4) * IntPoly::variable(Z, v, 0).pow(3) + IntPoly::variable(Z, v, 1);
    const auto inst = ProblemInstance::from_integers(BoxSpec::teichmuller(f2(), 2, 1), {{f, 2}, {f, 3}});
    CHECK(inst.degree(0) == 1);
    CHECK(inst.degree(1) == 3);
    CHECK(inst.evaluation_precision() == 3);
}

TEST_CASE("refusals and validation") {
    const auto big = ProblemInstance::from_integers(BoxSpec::teichmuller(f2(), 3, 3), {{linear(3, {1, 1, 1}), 2}});
    CHECK_THROWS_AS(count_zeros(big, {.budget = 511}), BudgetExceeded);
    CHECK(count_zeros(big, {.budget = 512}).cardinality == 128);

    const auto v = system_variables(1);
    CHECK_THROWS_AS(ProblemInstance::from_integers(BoxSpec::teichmuller(f2(), 1, 1),
                                                   {{IntPoly::constant(Z, v, 2) * IntPoly::variable(Z, v, 0), 1}}),
                    ValidationError);
    CHECK_THROWS_AS(ProblemInstance(BoxSpec::teichmuller(f2(), 1, 1), {}), ValidationError);
    CHECK_THROWS_AS(ProblemInstance::from_integers(BoxSpec::teichmuller(f2(), 2, 1), {{linear(1, {1}), 1}}),
                    ValidationError);
}

TEST_CASE("ord_q is ord_p / h") {
    const auto f4 = std::make_shared<const Field>(FieldParams::with_default_modulus(2, 2));
    const auto v = system_variables(2);
    // x1 = 0 over T_1 in F_4^2: 4 solutions, ord_2 = 2, ord_4 = 1.
    const auto r = count_zeros(ProblemInstance::from_integers(BoxSpec::teichmuller(f4, 2, 1),
                                                              {{IntPoly::variable(Z, v, 0), 1}}));
    CHECK(r.cardinality == 4);
    CHECK(r.ord_q_string() == "2/2");
    CHECK(*r.ord_q() == 1);
}
