#include "gsforge/realalg.hpp"
#include "gsforge/upoly.hpp"

#include <doctest.h>
#include <random>

using namespace gsforge;
using namespace gsforge::upoly;

namespace {

UPolyZ make(std::initializer_list<long> cs) {
    UPolyZ p;
    for (long c : cs)
        p.emplace_back(c);
    trim(p);
    return p;
}

} // namespace

TEST_CASE("evaluation and arithmetic") {
    UPolyZ p = make({1, -3, 3}); // 3u^2 - 3u + 1
    CHECK(eval_q(p, Rational(1)) == 1);
    CHECK(eval_q(p, Rational(1, 2)) == Rational(1, 4));
    CHECK(sign_at(p, Rational(0)) == 1);

    UPolyZ d = derivative(p);
    CHECK(d == make({-3, 6}));

    CHECK(mul(make({-1, 1}), make({-1, 1})) == make({1, -2, 1}));
    CHECK(sub(p, p).empty());
}

TEST_CASE("division and gcd") {
    // (u-1)^2 (u+2) = u^3 - 3u + 2
    UPolyZ p = make({2, -3, 0, 1});
    UPolyZ g = gcd(p, derivative(p));
    CHECK(g == make({-1, 1})); // u - 1
    UPolyZ sf = squarefree_part(p);
    // roots 1, -2 both simple
    CHECK(degree(sf) == 2);
    CHECK(sign_at(sf, Rational(1)) == 0);
    CHECK(sign_at(sf, Rational(-2)) == 0);

    CHECK(divide_exact(p, g) == make({-2, 1, 1})); // (u-1)(u+2)
}

TEST_CASE("sturm root counting") {
    // (u - 1/4)(u - 1/2)(u - 3/4) scaled: (4u-1)(2u-1)(4u-3)
    UPolyZ p = mul(mul(make({-1, 4}), make({-1, 2})), make({-3, 4}));
    auto seq = sturm_sequence(p);
    CHECK(sturm_count(seq, Rational(0), Rational(1)) == 3);
    CHECK(sturm_count(seq, Rational(0), Rational(1, 3)) == 1);
    CHECK(sturm_count(seq, Rational(2, 5), Rational(1)) == 2);
}

TEST_CASE("root isolation with rational and irrational roots") {
    // (2u-1)(u^2-2): roots 1/2, +-sqrt(2); in [0,1] -> {1/2}
    UPolyZ p = mul(make({-1, 2}), make({-2, 0, 1}));
    auto r01 = isolate_roots(p, Rational(0), Rational(1));
    REQUIRE(r01.size() == 1);
    CHECK(r01[0].is_rational);
    CHECK(r01[0].value == Rational(1, 2));

    auto r02 = isolate_roots(p, Rational(0), Rational(2));
    REQUIRE(r02.size() == 2);

    // u^2 - 2u + 1: double root at 1 -> one simple root after squarefree
    auto rd = isolate_roots(make({1, -2, 1}), Rational(0), Rational(1));
    REQUIRE(rd.size() == 1);
    CHECK(rd[0].is_rational);
    CHECK(rd[0].value == 1);
}

TEST_CASE("isolation finds all roots of a random product (oracle: constructed roots)") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 30; ++iter) {
        // Random distinct rational roots in [0,1] plus an irrational pair.
        std::vector<Rational> roots;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            Rational r = frac(static_cast<long>(rng() % 16), 16);
            bool dup = false;
            for (const auto& s : roots)
                if (s == r)
                    dup = true;
            if (!dup)
                roots.push_back(r);
        }
        UPolyZ p = make({1});
        for (const auto& r : roots) {
            UPolyZ lin;
            lin.push_back(-r.get_num());
            lin.push_back(r.get_den());
            p = mul(p, lin);
        }
        // multiply in u^2-3 (roots outside [0,1] except sqrt(3)>1)
        p = mul(p, make({-3, 0, 1}));
        auto locs = isolate_roots(p, Rational(0), Rational(1));
        CHECK(locs.size() == roots.size());
        for (const auto& loc : locs) {
            REQUIRE(loc.is_rational);
            bool known = false;
            for (const auto& r : roots)
                if (r == loc.value)
                    known = true;
            CHECK(known);
        }
    }
}

TEST_CASE("exact reals compare and evaluate signs") {
    // sqrt(1/2) as root of 2u^2 - 1
    UPolyZ p = make({-1, 0, 2});
    ExactReal a(p, Rational(0), Rational(1));
    CHECK(a.compare(Rational(7, 10)) > 0);   // 0.7071 > 0.7
    CHECK(a.compare(Rational(3, 4)) < 0);
    CHECK(a.poly_sign(p) == 0);
    CHECK(a.poly_sign(make({-1, 2})) > 0);   // 2u - 1 > 0 at 0.707
    CHECK(a.poly_sign(make({1, -10, 0, 1})) != 0);

    ExactReal b(p, Rational(1, 2), Rational(1));
    CHECK(a.compare(b) == 0); // same root, different brackets

    ExactReal c(Rational(1, 2));
    CHECK(c.compare(a) < 0);
}

TEST_CASE("nth_root of rationals and algebraics") {
    ExactReal r = nth_root(ExactReal(Rational(1, 4)), 2);
    REQUIRE(r.is_rational());
    CHECK(r.rational_value() == Rational(1, 2));

    ExactReal s = nth_root(ExactReal(Rational(1, 2)), 2);
    CHECK(!s.is_rational());
    CHECK(s.compare(Rational(7, 10)) > 0);
    CHECK(s.compare(Rational(71, 100)) < 0);

    // (sqrt(1/2))^(1/2) = (1/2)^(1/4): fourth root of 1/2
    ExactReal t = nth_root(s, 2);
    // t^4 = 1/2: check sign of 2u^4 - 1 at t is zero
    CHECK(t.poly_sign(make({-1, 0, 0, 0, 2})) == 0);
    CHECK(t.compare(Rational(84, 100)) > 0);
    CHECK(t.compare(Rational(85, 100)) < 0);
}
