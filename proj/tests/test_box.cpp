#include <doctest.h>

#include <random>
#include <set>

#include "wittbox/box.hpp"
#include "wittbox/errors.hpp"
#include "wittbox/selftest.hpp"

using namespace wittbox;

namespace {

std::shared_ptr<const Field> field_of(std::uint32_t p, unsigned h = 1) {
    return std::make_shared<const Field>(FieldParams::with_default_modulus(p, h));
}

struct Vars {
    std::shared_ptr<const Field> field;
    unsigned n, m;
    FqPoly operator()(unsigned i, unsigned j) const {
        return FqPoly::variable(FqRing(field), box_variables(n, m), box_variable_index(i, j, n));
    }
};

// The four-variable box with g[2][1] = x01 x11 x02 x14 and, optionally, extra generators.
BoxSpec example_box(std::map<GeneratorIndex, FqPoly> extra = {}) {
    const auto f = field_of(2);
    const Vars x{f, 4, 2};
    extra.emplace(GeneratorIndex{2, 1}, x(0, 1) * x(1, 1) * x(0, 2) * x(1, 4));
    return BoxSpec(f, 4, 2, extra);
}

GRElem value_of(const GaloisRing& ring, const DigitVec& d) { return ring.from_digits(d); }

}  // namespace

TEST_CASE("construction and validation") {
    const auto f2 = field_of(2);
    const BoxSpec t = BoxSpec::teichmuller(f2, 3, 2);
    CHECK(t.generators().empty());
    CHECK(t.generator_degree(5, 2) == 0);
    CHECK(t.generator_degree(1, 2) == 1);

    const BoxSpec ex = example_box();
    CHECK(ex.generators().size() == 1);
    CHECK(ex.generator_degree(2, 1) == 4);
    CHECK(ex.generator(2, 2).is_zero());
    CHECK(ex.base_size() == 256);

    const Vars x{f2, 4, 2};
    CHECK_THROWS_AS(BoxSpec(f2, 4, 2, {{GeneratorIndex{2, 1}, x(0, 1).pow(2)}}), ValidationError);
    CHECK_THROWS_AS(BoxSpec(f2, 4, 2, {{GeneratorIndex{1, 1}, x(0, 1)}}), ValidationError);
    CHECK_THROWS_AS(BoxSpec(f2, 4, 2, {{GeneratorIndex{2, 5}, x(0, 1)}}), ValidationError);
    // Wrong variable list.
    const Vars y{f2, 3, 2};
    CHECK_THROWS_AS(BoxSpec(f2, 4, 2, {{GeneratorIndex{2, 1}, y(0, 1)}}), ValidationError);
    // Zero generators are dropped.
    CHECK(BoxSpec(f2, 4, 2, {{GeneratorIndex{2, 1}, x(0, 1) + x(0, 1)}}) == BoxSpec::teichmuller(f2, 4, 2));
}

TEST_CASE("split boxes") {
    const auto f3 = field_of(3);
    const Vars x{f3, 2, 2};
    const BoxSpec ok = BoxSpec::split(f3, 2, 2, {{GeneratorIndex{2, 1}, x(0, 1) * x(1, 1).pow(2)},
                                                  {GeneratorIndex{3, 2}, x(1, 2)}});
    CHECK(ok.is_split());
    CHECK_THROWS_AS(BoxSpec::split(f3, 2, 2, {{GeneratorIndex{2, 1}, x(0, 2)}}), ValidationError);
    CHECK_FALSE(BoxSpec(f3, 2, 2, {{GeneratorIndex{2, 1}, x(0, 2)}}).is_split());
}

TEST_CASE("enumeration of the Teichmueller box over Z/4") {
    const auto f2 = field_of(2);
    const auto ring = std::make_shared<const GaloisRing>(f2, 2);
    std::set<GRElem> values;
    for (const auto& pt : box_enumerate(BoxSpec::teichmuller(f2, 1, 2), 2)) values.insert(value_of(*ring, pt.expansion[0]));
    CHECK(values == std::set<GRElem>{ring->from_int(0), ring->from_int(1), ring->from_int(2), ring->from_int(3)});
}

TEST_CASE("enumeration of the four-variable example box") {
    const BoxSpec ex = example_box();
    const auto pts = box_enumerate(ex, 3);
    CHECK(pts.size() == 256);
    const auto& f = ex.field();
    for (std::uint64_t k = 0; k < pts.size(); ++k) {
        const auto& pt = pts[k];
        // Base digit at flattened position i*n + j - 1 is bit (i*n + j - 1) of k.
        for (unsigned pos = 0; pos < 8; ++pos) REQUIRE(pt.base[pos] == FqElem{static_cast<std::uint32_t>((k >> pos) & 1)});
        for (unsigned j = 1; j <= 4; ++j) {
            for (unsigned i = 0; i < 2; ++i) REQUIRE(pt.expansion[j - 1].digits[i] == pt.base[box_variable_index(i, j, 4)]);
        }
        const bool all_one = pt.base[box_variable_index(0, 1, 4)] == f.one() && pt.base[box_variable_index(1, 1, 4)] == f.one() &&
                             pt.base[box_variable_index(0, 2, 4)] == f.one() && pt.base[box_variable_index(1, 4, 4)] == f.one();
        CHECK(pt.expansion[0].digits[2] == (all_one ? f.one() : f.zero()));
        for (unsigned j = 2; j <= 4; ++j) CHECK(pt.expansion[j - 1].digits[2] == f.zero());
    }
    // The specific base named in the description: x01 = x11 = x02 = x14 = 1.
    const std::uint64_t idx = (1u << box_variable_index(0, 1, 4)) | (1u << box_variable_index(1, 1, 4)) |
                              (1u << box_variable_index(0, 2, 4)) | (1u << box_variable_index(1, 4, 4));
    CHECK(pts[idx].expansion[0].digits[2] == f.one());

    const BoxEnumerator en(ex, 3);
    CHECK(en.point(idx) == pts[idx]);
    CHECK_THROWS_AS(BoxEnumerator(ex, 1), ValidationError);
}

TEST_CASE("reduction mod p^m is a bijection onto (GR(p^m,h))^n") {
    std::mt19937_64 rng(5);
    const std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>> shapes{
        {2, 1, 3, 3}, {3, 1, 2, 2}, {2, 2, 2, 2}, {3, 2, 1, 2}, {2, 1, 1, 9}};
    for (auto [p, h, n, m] : shapes) {
        const auto f = field_of(p, h);
        const BoxSpec box = random_box(f, n, m, m + 2, 0, rng);
        const auto ring = std::make_shared<const GaloisRing>(f, m);
        const auto pts = box_enumerate(box, m + 2);
        std::set<std::vector<GRElem>> images;
        for (const auto& pt : pts) {
            std::vector<GRElem> img;
            for (const auto& d : pt.expansion) {
                DigitVec low{std::vector<FqElem>(d.digits.begin(), d.digits.begin() + m)};
                img.push_back(ring->from_digits(low));
            }
            images.insert(img);
        }
        CHECK(images.size() == pts.size());
        CHECK(pts.size() == box.base_size());
    }
}

TEST_CASE("closeness check") {
    const auto f2 = field_of(2);
    const Vars x{f2, 4, 2};
    const BoxSpec ex = example_box();
    CHECK(closeness_check(ex, 3).holds);
    CHECK(closeness_check(ex, 2).holds);
    CHECK(closeness_check(ex, 1).holds);

    const BoxSpec far(f2, 4, 2, {{GeneratorIndex{2, 1}, x(0, 1) * x(1, 1) * x(0, 2) * x(1, 2) * x(0, 3)},
                                 {GeneratorIndex{2, 2}, x(0, 1) * x(1, 2) * x(0, 3) * x(0, 4)}});
    const auto report = closeness_check(far, 3);
    CHECK_FALSE(report.holds);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].i == 2);
    CHECK(report.violations[0].j == 1);
    CHECK(report.violations[0].degree == 5);
    CHECK(report.violations[0].limit == 4);
    CHECK(closeness_check(far, 2).holds);

    // Over F_4 the limit at level i is 2^{2 floor(i/2)}: 1 at i = 1, 4 at i = 2, 3.
    const auto f4 = field_of(2, 2);
    const Vars z{f4, 1, 1};
    const BoxSpec quad(f4, 1, 1, {{GeneratorIndex{1, 1}, z(0, 1).pow(2)}, {GeneratorIndex{2, 1}, z(0, 1).pow(3)}});
    CHECK_FALSE(closeness_check(quad, 2).holds);
    const BoxSpec lin(f4, 1, 1, {{GeneratorIndex{1, 1}, z(0, 1)}, {GeneratorIndex{2, 1}, z(0, 1).pow(3)}});
    CHECK(closeness_check(lin, 3).holds);
}

TEST_CASE("interpolation from tables") {
    const auto f2 = field_of(2);
    const auto teich = BoxSpec::teichmuller(f2, 2, 2);
    CHECK(box_from_table(f2, 2, 2, 4, box_enumerate(teich, 4)) == teich);

    const BoxSpec ex = example_box();
    const auto table = box_enumerate(ex, 3);
    CHECK(box_from_table(f2, 4, 2, 3, table) == ex);

    auto missing = table;
    missing.pop_back();
    CHECK_THROWS_AS(box_from_table(f2, 4, 2, 3, missing), ValidationError);
    auto duplicate = table;
    duplicate[1] = duplicate[0];
    CHECK_THROWS_AS(box_from_table(f2, 4, 2, 3, duplicate), ValidationError);
    auto mismatch = table;
    mismatch[3].expansion[0].digits[0] = f2->add(mismatch[3].expansion[0].digits[0], f2->one());
    CHECK_THROWS_AS(box_from_table(f2, 4, 2, 3, mismatch), ValidationError);
}

TEST_CASE("interpolated generators respect the degree ceilings") {
    std::mt19937_64 rng(17);
    for (auto [p, h] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const auto f = field_of(p, h);
        const unsigned q = f->q();
        for (int trial = 0; trial < 4; ++trial) {
            const unsigned n = 2, m = 1;
            const BoxSpec box = random_box(f, n, m, 3, 0, rng);
            const BoxSpec back = box_from_table(f, n, m, 3, box_enumerate(box, 3));
            CHECK(back == box);
            for (const auto& [idx, g] : back.generators()) CHECK(g.total_degree() <= n * m * (q - 1));
        }
        // Split box: each generator depends on its own column only.
        const Vars x{f, 2, 2};
        const BoxSpec split = BoxSpec::split(f, 2, 2, {{GeneratorIndex{2, 1}, x(0, 1) * x(1, 1)}, {GeneratorIndex{2, 2}, x(1, 2)}});
        const BoxSpec back = box_from_table(f, 2, 2, 3, box_enumerate(split, 3));
        CHECK(back == split);
        CHECK(back.is_split());
        for (const auto& [idx, g] : back.generators()) CHECK(g.total_degree() <= 2 * (q - 1));
    }
}
