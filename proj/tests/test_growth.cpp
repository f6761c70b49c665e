#include "gsforge/certify.hpp"
#include "gsforge/growth.hpp"
#include "oracles.hpp"

#include <cmath>
#include <doctest.h>

using namespace gsforge;

namespace {

Presentation two_gen(std::vector<NcPolynomial> rels, std::vector<Rational> ws = {}) {
    GeneratorSet gens({"x", "y"});
    if (ws.empty())
        ws = {Rational(1), Rational(1)};
    return Presentation(gens, DegreeFunction(ws), std::move(rels));
}

} // namespace

TEST_CASE("ufn graph of a1") {
    // forbidden {xx, xyx}: vertices = normal length-2 words {xy, yx, yy}
    UfnGraph g = build_ufn_graph(2, {{0, 0}, {0, 1, 0}});
    CHECK(g.window == 2);
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.edge_count() == 4); // xy->yy, yx->xy, yy->yx, yy->yy
}

TEST_CASE("growth classifications") {
    Presentation a1 = two_gen({NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({0, 1, 0})});
    CHECK(classify_growth(a1).exponential);

    Presentation fr = two_gen({});
    CHECK(classify_growth(fr).exponential);

    GeneratorSet one({"x"});
    Presentation fr1(one, DegreeFunction({Rational(1)}), {});
    GrowthResult g1 = classify_growth(fr1);
    CHECK(!g1.exponential);
    CHECK(g1.degree == 0);

    // <x,y | xy, yx>: normal words x^a and y^b; two disjoint loops.
    Presentation diag = two_gen({NcPolynomial::monomial({0, 1}), NcPolynomial::monomial({1, 0})});
    GrowthResult gd = classify_growth(diag);
    CHECK(!gd.exponential);
    CHECK(gd.degree == 0);

    // Finite-dimensional: all length-2 words forbidden.
    Presentation fin = two_gen({NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({0, 1}),
                                NcPolynomial::monomial({1, 0}), NcPolynomial::monomial({1, 1})});
    GrowthResult gf = classify_growth(fin);
    CHECK(!gf.exponential);
    CHECK(gf.finite_dimensional);
}

TEST_CASE("pattern-closed monomial sets: at most one x") {
    // forbidden x y^t x for all t >= 0
    FamilyWordPattern pat;
    pat.prefix = {0};
    pat.repeated_gen = 1;
    pat.suffix = {0};
    pat.t_start = 0;
    GrowthResult g = classify_growth_monomial(2, {}, {pat});
    CHECK(!g.exponential);
    CHECK(g.degree == 1);

    // The automaton's word counts match the avoid-everything oracle.
    AvoidAutomaton dfa = build_avoid_automaton(2, {}, {pat});
    auto counts = dfa.count_words(12);
    for (int n = 1; n <= 12; ++n)
        CHECK(counts[n] == n + 1); // y^n plus y^a x y^b
}

TEST_CASE("pattern suffix and occurrence checks") {
    FamilyWordPattern pat;
    pat.prefix = {0};
    pat.repeated_gen = 1;
    pat.suffix = {0};
    pat.t_start = 0;
    CHECK(pattern_occurs(pat, {0, 1, 1, 0}));
    CHECK(pattern_occurs(pat, {1, 0, 0, 1}));
    CHECK(!pattern_occurs(pat, {1, 0, 1, 1}));
    CHECK(pattern_is_suffix(pat, {1, 0, 1, 0}));
    CHECK(!pattern_is_suffix(pat, {0, 0, 1}));

    // Bounded range: only t in {1, 2} forbidden.
    FamilyWordPattern b = pat;
    b.t_start = 1;
    b.t_end = 2;
    CHECK(!pattern_occurs(b, {0, 0}));
    CHECK(pattern_occurs(b, {0, 1, 0}));
    CHECK(pattern_occurs(b, {0, 1, 1, 0}));
    CHECK(!pattern_occurs(b, {0, 1, 1, 1, 0}));
}

TEST_CASE("standard series") {
    Presentation fr = two_gen({});
    StandardSeries s = standard_hilbert(fr, 5);
    std::vector<long> expect{1, 2, 4, 8, 16, 32};
    CHECK(s.h == expect);

    GeneratorSet gens({"x", "y", "z"});
    DegreeFunction deg({Rational(2), Rational(2), Rational(1)}); // re-graded to 1 internally
    Presentation m(gens, deg,
                   {NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({1, 1}),
                    NcPolynomial::monomial({0, 2})});
    StandardSeries sm = standard_hilbert(m, 3);
    // Exhaustive: words over {x,y,z} avoiding xx, yy, xz.
    auto counts = oracles::count_avoiding(3, {{0, 0}, {1, 1}, {0, 2}}, {1, 1, 1}, 3);
    CHECK(sm.h[0] == 1);
    CHECK(sm.h[1] == 3);
    CHECK(sm.h[2] == 6);
    CHECK(sm.h[3] == counts[3]);
    CHECK(sm.h[3] == 12);
    // h_n <= |X| * h_{n-1}
    for (size_t n = 1; n < sm.h.size(); ++n)
        CHECK(sm.h[n] <= 3 * sm.h[n - 1]);
}

TEST_CASE("degree rescaling inequality") {
    Presentation fr12 = two_gen({}, {Rational(1), Rational(2)});
    RescalingReport r = verify_degree_rescaling(fr12, 10);
    CHECK(r.holds);
    CHECK(r.min_weight == 1);
    CHECK(r.max_weight == 2);

    Presentation fr = two_gen({});
    RescalingReport req = verify_degree_rescaling(fr, 10);
    CHECK(req.holds);
    for (const auto& [lhs, rhs] : req.rows)
        CHECK(lhs == rhs); // equal weights make the chain an identity

    GeneratorSet gens({"x", "y", "z"});
    DegreeFunction deg({Rational(2), Rational(2), Rational(1)});
    Presentation m(gens, deg,
                   {NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({1, 1}),
                    NcPolynomial::monomial({0, 2})});
    CHECK(verify_degree_rescaling(m, 8).holds);
}

TEST_CASE("growth classification consistency with measured series") {
    // Exponential: (h_n)^(1/n) beats 1.05 at the cutoff.
    Presentation a1 = two_gen({NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({0, 1, 0})});
    REQUIRE(classify_growth(a1).exponential);
    StandardSeries s = standard_hilbert(a1, 14);
    double rate = std::pow(static_cast<double>(s.h[14]), 1.0 / 14);
    CHECK(rate > 1.05);

    // Polynomial of degree d: h_n <= C n^d with C fitted on the first half.
    FamilyWordPattern pat;
    pat.prefix = {0};
    pat.repeated_gen = 1;
    pat.suffix = {0};
    pat.t_start = 0;
    GrowthResult g = classify_growth_monomial(2, {}, {pat});
    REQUIRE(!g.exponential);
    AvoidAutomaton dfa = build_avoid_automaton(2, {}, {pat});
    auto counts = dfa.count_words(16);
    double c_fit = 0;
    for (int n = 1; n <= 8; ++n)
        c_fit = std::max(c_fit, counts[n].get_d() / std::pow(n, g.degree));
    for (int n = 9; n <= 16; ++n)
        CHECK(counts[n].get_d() <= c_fit * std::pow(n, g.degree) + 1e-9);
}

TEST_CASE("GS presentations have exponential leading-word growth") {
    // Each corpus presentation certified GS must classify as exponential
    // (possibly for its associated graded algebra).
    std::vector<Presentation> gs_cases;
    // weighted a1, weights (9,1): GS
    gs_cases.push_back(two_gen({NcPolynomial::monomial({0, 0}),
                                NcPolynomial::monomial({0, 1, 0})},
                               {Rational(9), Rational(1)}));
    // <x,y,z | x^2, y^2> after dropping xz: GS under the standard grading
    GeneratorSet gens3({"x", "y", "z"});
    DegreeFunction deg3({Rational(1), Rational(1), Rational(1)});
    gs_cases.push_back(Presentation(gens3, deg3, {NcPolynomial::monomial({0, 0}),
                                                  NcPolynomial::monomial({1, 1})}));
    // extended presentation with v - xy (non-monomial): GS
    GeneratorSet gensv({"x", "y", "v"});
    DegreeFunction degv({Rational(1), Rational(1), Rational(3)});
    NcPolynomial rv = NcPolynomial::monomial({2}) - NcPolynomial::monomial({0, 1});
    gs_cases.push_back(Presentation(gensv, degv,
                                    {rv, NcPolynomial::monomial({2, 2, 0}),
                                     NcPolynomial::monomial({2, 2, 1}),
                                     NcPolynomial::monomial({0, 2, 2})}));
    for (const auto& p : gs_cases) {
        REQUIRE(certify(p).status == GsStatus::GS);
        GrowthResult g = classify_growth(p);
        CHECK(g.exponential);
    }
}

TEST_CASE("unbounded families with one-sided patterns reduce to their shortest word") {
    // x y^t (t >= 1): forbidding it equals forbidding the factor xy.
    FamilyWordPattern pat;
    pat.prefix = {0};
    pat.repeated_gen = 1;
    pat.t_start = 1;
    AvoidAutomaton dfa = build_avoid_automaton(2, {}, {pat});
    auto counts = dfa.count_words(8);
    // Words avoiding xy: y^b x^a, so n+1 per length.
    for (int n = 0; n <= 8; ++n)
        CHECK(counts[n] == n + 1);
    GrowthResult g = classify_growth_monomial(2, {}, {pat});
    CHECK(!g.exponential);
    CHECK(g.degree == 1);
}
