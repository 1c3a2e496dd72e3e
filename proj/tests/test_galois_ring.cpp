#include <doctest.h>

#include <set>

#include "wittbox/errors.hpp"
#include "wittbox/galois_ring.hpp"
#include "wittbox/witt_digits.hpp"

using namespace wittbox;

namespace {

std::shared_ptr<const GaloisRing> make_ring(std::uint32_t p, unsigned h, unsigned M) {
    auto field = std::make_shared<const Field>(FieldParams::with_default_modulus(p, h));
    return std::make_shared<const GaloisRing>(field, M);
}

// The unique z with z^q = z and z = a mod p, found by scanning the whole ring.
GRElem brute_force_teichmuller(const GaloisRing& ring, FqElem a) {
    std::vector<GRElem> hits;
    for (const auto& z : ring.enumerate()) {
        if (ring.residue(z) == a && ring.pow(z, ring.field().q()) == z) hits.push_back(z);
    }
    REQUIRE(hits.size() == 1);
    return hits[0];
}

DigitVec digits(std::initializer_list<std::uint32_t> codes) {
    DigitVec d;
    for (auto c : codes) d.digits.push_back(FqElem{c});
    return d;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
    const auto z4 = make_ring(2, 1, 2);
    CHECK(z4->add(z4->from_int(3), z4->from_int(3)) == z4->from_int(2));
    const auto gr42 = make_ring(2, 2, 2);
    const GRElem t = gr42->make({0, 1});
    CHECK(gr42->render_list(gr42->mul(t, t)) == "[3, 3]");
    for (const auto& a : gr42->enumerate()) CHECK(gr42->mul(a, gr42->one()) == a);
    CHECK(gr42->size() == 16);
    CHECK(gr42->characteristic() == 4);
}

TEST_CASE("integer embedding") {
    CHECK(int_to_gr(3, *make_ring(2, 1, 2)) == make_ring(2, 1, 2)->from_int(3));
    const auto z9 = make_ring(3, 1, 2);
    CHECK(z9->render(int_to_gr(-1, *z9)) == "8");
    const auto z8 = make_ring(2, 1, 3);
    CHECK(z8->render(int_to_gr(6, *z8)) == "6");
    CHECK(z9->from_int(mpz_class("-100000000000000000000")) == z9->from_int(-1));  // 10^20 = 1 mod 9
}

TEST_CASE("Teichmueller lift matches the brute-force fixed point (q <= 27, M <= 3)") {
    const std::vector<std::pair<std::uint32_t, unsigned>> fields{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}};
    for (auto [p, h] : fields) {
        for (unsigned M = 1; M <= 3; ++M) {
            const auto ring = make_ring(p, h, M);
            if (ring->size() > 20000) continue;
            for (auto a : ring->field().enumerate()) {
                const GRElem z = ring->teichmuller(a);
                CHECK(z == brute_force_teichmuller(*ring, a));
                CHECK(ring->residue(z) == a);
                CHECK(ring->pow(z, ring->field().q()) == z);
            }
        }
    }
    const auto z9 = make_ring(3, 1, 2);
    CHECK(z9->teichmuller(FqElem{2}) == z9->from_int(8));
    const auto z16 = make_ring(2, 1, 4);
    CHECK(z16->teichmuller(FqElem{0}) == z16->zero());
    CHECK(z16->teichmuller(FqElem{1}) == z16->one());
}

TEST_CASE("digit codec") {
    const auto z8 = make_ring(2, 1, 3);
    CHECK(z8->to_digits(z8->from_int(6)) == digits({0, 1, 1}));
    const auto z9 = make_ring(3, 1, 2);
    CHECK(z9->to_digits(z9->from_int(2)) == digits({2, 1}));
    CHECK_THROWS_AS(z9->from_digits(digits({1})), ValidationError);

    for (auto [p, h, M] : {std::tuple{3u, 1u, 2u}, {2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 1u, 4u}}) {
        const auto ring = make_ring(p, h, M);
        std::set<std::vector<FqElem>> seen;
        for (const auto& y : ring->enumerate()) {
            const DigitVec d = ring->to_digits(y);
            CHECK(ring->from_digits(d) == y);
            // Oracle: sum of tau(d_i) p^i with brute-force lifts.
            GRElem acc = ring->zero();
            std::uint64_t pi = 1;
            for (unsigned i = 0; i < M; ++i, pi *= p) {
                acc = ring->add(acc, ring->scale(brute_force_teichmuller(*ring, d.digits[i]), pi));
            }
            CHECK(acc == y);
            seen.insert(d.digits);
        }
        CHECK(seen.size() == ring->size());
    }
}

TEST_CASE("valuation") {
    const auto z8 = make_ring(2, 1, 3);
    CHECK(z8->ord_p(z8->from_int(6)) == Valuation(1));
    CHECK(z8->ord_p(z8->zero()).is_infinite());
    CHECK(z8->ord_p(z8->zero()).to_string() == "inf");
    const auto gr = make_ring(3, 2, 2);
    for (auto a : gr->field().enumerate()) {
        if (!a.is_zero()) CHECK(gr->ord_p(gr->teichmuller(a)) == Valuation(0));
    }
    CHECK(gr->ord_p(gr->make({3, 6})) == Valuation(1));
    CHECK(gr->ord_p(gr->make({3, 1})) == Valuation(0));
    CHECK(Valuation(3) < Valuation::infinity());
    CHECK(Valuation::infinity().at_least(1000));
    CHECK(ord_p_of_count(30, 2) == Valuation(1));
    CHECK(ord_p_of_count(0, 2).is_infinite());
}

TEST_CASE("truncation is a ring map") {
    const auto ring = make_ring(3, 2, 3);
    const auto low = make_ring(3, 2, 2);
    const auto a = ring->make({5, 17}), b = ring->make({26, 4});
    CHECK(ring->truncate(ring->mul(a, b), 2) == low->mul(ring->truncate(a, 2), ring->truncate(b, 2)));
    CHECK(ring->truncate(ring->add(a, b), 2) == low->add(ring->truncate(a, 2), ring->truncate(b, 2)));
    CHECK_THROWS_AS(low->truncate(a, 3), ValidationError);
}

TEST_CASE("Witt digit arithmetic") {
    const auto z4 = make_ring(2, 1, 2);
    CHECK(witt_digit_op(z4, digits({1, 0}), digits({1, 0}), WittOp::sum) == digits({0, 1}));
    const auto z9 = make_ring(3, 1, 2);
    CHECK(witt_digit_op(z9, z9->to_digits(z9->from_int(2)), z9->to_digits(z9->from_int(2)), WittOp::sum) ==
          z9->to_digits(z9->from_int(4)));
    CHECK_THROWS_AS(witt_digit_op(z9, digits({1}), digits({1, 0}), WittOp::sum), ValidationError);

    for (auto [p, h, M] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 1u, 3u}}) {
        const auto ring = make_ring(p, h, M);
        const WittDigitArithmetic w(ring);
        const DigitVec one = ring->to_digits(ring->one());
        for (const auto& a : ring->enumerate()) {
            const DigitVec da = ring->to_digits(a);
            CHECK(w.mul(da, one) == da);
            CHECK(w.untwist(w.twist(da)) == da);
            for (const auto& b : ring->enumerate()) {
                const DigitVec db = ring->to_digits(b);
                CHECK(ring->from_digits(w.add(da, db)) == ring->add(a, b));
                CHECK(ring->from_digits(w.mul(da, db)) == ring->mul(a, b));
            }
        }
    }
}

TEST_CASE("three-operand fold matches repeated ring arithmetic") {
    const auto ring = make_ring(2, 2, 2);
    const WittDigitArithmetic w(ring);
    const auto all = ring->enumerate();
    for (std::size_t i = 0; i < all.size(); i += 3) {
        for (std::size_t j = 0; j < all.size(); j += 5) {
            for (std::size_t k = 0; k < all.size(); k += 2) {
                const std::vector<DigitVec> ops{ring->to_digits(all[i]), ring->to_digits(all[j]),
                                                ring->to_digits(all[k])};
                CHECK(ring->from_digits(w.fold(WittOp::sum, ops)) == ring->add(ring->add(all[i], all[j]), all[k]));
                CHECK(ring->from_digits(w.fold(WittOp::product, ops)) ==
                      ring->mul(ring->mul(all[i], all[j]), all[k]));
            }
        }
    }
}
