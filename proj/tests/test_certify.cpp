#include "gsforge/certify.hpp"

#include <doctest.h>
#include <random>

using namespace gsforge;

namespace {

Presentation m_algebra(std::vector<Rational> ws) {
    GeneratorSet gens({"x", "y", "z"});
    return Presentation(gens, DegreeFunction(std::move(ws)),
                        {NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({1, 1}),
                         NcPolynomial::monomial({0, 2})});
}

int strength(GsStatus s) {
    switch (s) {
    case GsStatus::GS: return 2;
    case GsStatus::WgsOnly: return 1;
    case GsStatus::NotWgs: return 0;
    }
    return -1;
}

} // namespace

TEST_CASE("series of the worked examples") {
    CHECK(gs_series(m_algebra({Rational(1), Rational(1), Rational(1)})).str() ==
          "1 - 3*z + 3*z^2");
    CHECK(gs_series(m_algebra({Rational(2), Rational(2), Rational(1)})).str() ==
          "1 - z - 2*z^2 + z^3 + 2*z^4");

    GeneratorSet gens({"x", "y", "v"});
    DegreeFunction deg({Rational(1), Rational(1), Rational(3)});
    NcPolynomial rv = NcPolynomial::monomial({2}) - NcPolynomial::monomial({0, 1});
    Presentation ext(gens, deg,
                     {rv, NcPolynomial::monomial({2, 2, 0}), NcPolynomial::monomial({2, 2, 1}),
                      NcPolynomial::monomial({0, 2, 2})});
    CHECK(gs_series(ext).str() == "1 - 2*z + z^2 - z^3 + 3*z^7");
}

TEST_CASE("certificates carry consistent witnesses") {
    GsCertificate c1 = certify(m_algebra({Rational(1), Rational(1), Rational(1)}));
    CHECK(c1.status == GsStatus::NotWgs);
    CHECK(c1.negativity_set.is_empty());
    CHECK(!c1.witness);

    GeneratorSet gens({"x", "y"});
    DegreeFunction deg({Rational(1), Rational(1)});
    Presentation sq(gens, deg, {NcPolynomial::monomial({0, 0})});
    GsCertificate c2 = certify(sq);
    CHECK(c2.status == GsStatus::WgsOnly);
    REQUIRE(c2.boundary_witness);
    CHECK(sign_at(c2.series, *c2.boundary_witness) == Sign::Zero);
    CHECK(!c2.negativity_set.has_positive_length());

    Presentation gs(gens, deg, {NcPolynomial::monomial({0, 0})});
    // x^2, xyx with weights (9,1): the weight-search regime; strictly negative somewhere
    DegreeFunction deg91({Rational(9), Rational(1)});
    Presentation a1w(gens, deg91,
                     {NcPolynomial::monomial({0, 0}), NcPolynomial::monomial({0, 1, 0})});
    GsCertificate c3 = certify(a1w);
    CHECK(c3.status == GsStatus::GS);
    REQUIRE(c3.witness);
    REQUIRE(c3.witness_value);
    CHECK(*c3.witness_value < 0);
    CHECK(evaluate(c3.series, *c3.witness) == *c3.witness_value);
    CHECK(c3.negativity_set.contains(*c3.witness));
}

TEST_CASE("f(0) = 1 for every presentation") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        GeneratorSet gens({"x", "y"});
        DegreeFunction deg({frac(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 2)),
                            Rational(1 + static_cast<long>(rng() % 3))});
        std::vector<NcPolynomial> rels;
        for (int k = static_cast<int>(rng() % 3); k-- > 0;) {
            Word w;
            size_t len = 1 + rng() % 4;
            for (size_t j = 0; j < len; ++j)
                w.push_back(rng() % 2);
            rels.push_back(NcPolynomial::monomial(w));
        }
        GenPoly f = gs_series(Presentation(gens, deg, rels));
        CHECK(evaluate(f, Rational(0)) == 1);
    }
}

TEST_CASE("dropping relations never weakens the certificate") {
    std::mt19937 rng(6021);
    for (int iter = 0; iter < 100; ++iter) {
        size_t ngens = 2 + rng() % 2;
        std::vector<std::string> names;
        std::vector<Rational> ws;
        for (size_t i = 0; i < ngens; ++i) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
            ws.emplace_back(1 + static_cast<long>(rng() % 3));
        }
        std::vector<NcPolynomial> rels;
        int nrel = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < nrel; ++k) {
            Word w;
            size_t len = 1 + rng() % 5;
            for (size_t i = 0; i < len; ++i)
                w.push_back(rng() % ngens);
            rels.push_back(NcPolynomial::monomial(w));
        }
        Presentation p(GeneratorSet(names), DegreeFunction(ws), rels);
        std::vector<size_t> keep;
        for (size_t i = 0; i < rels.size(); ++i)
            if (rng() % 2)
                keep.push_back(i);
        Presentation q = drop_relations(p, keep);
        GsCertificate cp = certify(p);
        GsCertificate cq = certify(q);
        CHECK(strength(cq.status) >= strength(cp.status));
        CHECK(is_subset(cp.negativity_set, cq.negativity_set));
    }
}

TEST_CASE("laguerre-style component bound on corpus series") {
    std::vector<std::pair<GenPoly, size_t>> series;
    series.push_back({gs_series(m_algebra({Rational(1), Rational(1), Rational(1)})), 3});
    series.push_back({gs_series(m_algebra({Rational(2), Rational(2), Rational(1)})), 3});
    GeneratorSet g2({"x", "y"});
    DegreeFunction d2({Rational(1), Rational(1)});
    series.push_back({gs_series(Presentation(g2, d2, {NcPolynomial::monomial({0, 0})})), 2});
    series.push_back({gs_series(Presentation(g2, d2, {})), 2});
    for (long a = 2; a <= 14; ++a) {
        DegreeFunction da({Rational(a), Rational(1)});
        series.push_back(
            {gs_series(Presentation(g2, da, {NcPolynomial::monomial({0, 0}),
                                             NcPolynomial::monomial({0, 1, 0})})),
             2});
    }
    for (const auto& [f, ngens] : series) {
        IntervalSet s = negativity_set(f);
        CHECK(s.component_count() <= ngens + 1);
    }
}

TEST_CASE("vinberg coefficient inequality") {
    Presentation fr(GeneratorSet({"x", "y"}), DegreeFunction({Rational(1), Rational(1)}), {});
    VinbergReport v = verify_vinberg(fr, 10);
    CHECK(v.holds);
    CHECK(v.exact_equality);
    for (const auto& c : v.cumulative)
        CHECK(c == 1);

    VinbergReport vm = verify_vinberg(m_algebra({Rational(1), Rational(1), Rational(1)}), 8);
    CHECK(vm.holds);
    CHECK(!vm.exact_equality);

    // Weighted degrees scale onto an integer lattice.
    Presentation fr12(GeneratorSet({"x", "y"}), DegreeFunction({frac(1, 2), Rational(1)}), {});
    CHECK(verify_vinberg(fr12, 6).holds);
}

TEST_CASE("scalar inequality evidence") {
    Presentation fr(GeneratorSet({"x", "y"}), DegreeFunction({Rational(1), Rational(1)}), {});
    ScalarReport r = verify_scalar(fr, frac(1, 4), 20);
    CHECK(r.f_value == frac(1, 2));
    CHECK(!r.divergence_mode);
    // H_trunc(1/4) -> 2, product -> 1 from below.
    CHECK(r.h_truncated < 2);
    CHECK(r.h_truncated > frac(19, 10));
    CHECK(r.product < 1);
    CHECK(r.product > frac(99, 100));

    ScalarReport rm = verify_scalar(m_algebra({Rational(1), Rational(1), Rational(1)}),
                                    frac(1, 2), 12);
    CHECK(rm.f_value == frac(1, 4));
    CHECK(!rm.divergence_mode);

    // wGS-only case at the boundary: H_trunc(1) grows without bound.
    Presentation sq(GeneratorSet({"x", "y"}), DegreeFunction({Rational(1), Rational(1)}),
                    {NcPolynomial::monomial({0, 0})});
    ScalarReport rs = verify_scalar(sq, Rational(1), 10);
    CHECK(rs.f_value == 0);
    CHECK(rs.divergence_mode);
    REQUIRE(rs.divergence_table.size() >= 3);
    for (size_t i = 1; i < rs.divergence_table.size(); ++i)
        CHECK(rs.divergence_table[i].second > rs.divergence_table[i - 1].second);
}

namespace {

void check_certificate_invariants(const GsCertificate& cert) {
    switch (cert.status) {
    case GsStatus::GS:
        CHECK(cert.negativity_set.has_positive_length());
        REQUIRE(cert.witness);
        REQUIRE(cert.witness_value);
        CHECK(*cert.witness_value < 0);
        CHECK(evaluate(cert.series, *cert.witness) == *cert.witness_value);
        CHECK(sign_at(cert.series, *cert.witness) == Sign::Negative);
        CHECK(cert.negativity_set.contains(*cert.witness));
        break;
    case GsStatus::WgsOnly:
        CHECK(!cert.negativity_set.is_empty());
        CHECK(!cert.negativity_set.has_positive_length());
        REQUIRE(cert.boundary_witness);
        CHECK(sign_at(cert.series, *cert.boundary_witness) == Sign::Zero);
        CHECK(!cert.witness);
        break;
    case GsStatus::NotWgs:
        CHECK(cert.negativity_set.is_empty());
        CHECK(!cert.witness);
        CHECK(!cert.boundary_witness);
        break;
    }
}

} // namespace

TEST_CASE("certificate invariants hold across a presentation sweep") {
    std::vector<Presentation> ps;
    ps.push_back(m_algebra({Rational(1), Rational(1), Rational(1)}));
    ps.push_back(m_algebra({Rational(2), Rational(2), Rational(1)}));
    GeneratorSet g2({"x", "y"});
    DegreeFunction d2({Rational(1), Rational(1)});
    ps.push_back(Presentation(g2, d2, {NcPolynomial::monomial({0, 0})}));
    ps.push_back(Presentation(g2, d2, {}));
    for (long a = 2; a <= 12; ++a) {
        DegreeFunction da({Rational(a), Rational(1)});
        ps.push_back(Presentation(g2, da, {NcPolynomial::monomial({0, 0}),
                                           NcPolynomial::monomial({0, 1, 0})}));
    }
    // fractional weights as well
    DegreeFunction dh({frac(1, 2), frac(3, 2)});
    ps.push_back(Presentation(g2, dh, {NcPolynomial::monomial({0, 1})}));
    for (const auto& p : ps)
        check_certificate_invariants(certify(p));
}

TEST_CASE("scalar lower bounds increase with the cutoff") {
    Presentation m = m_algebra({Rational(1), Rational(1), Rational(1)});
    Rational prev(-1);
    for (int cutoff = 2; cutoff <= 12; cutoff += 2) {
        ScalarReport r = verify_scalar(m, frac(1, 2), cutoff);
        REQUIRE(!r.divergence_mode);
        CHECK(r.product >= prev);
        prev = r.product;
    }
    CHECK(verify_scalar(m, frac(1, 2), 12).product > frac(9, 10));
}

TEST_CASE("vinberg inequality holds for a GS-certified weighted presentation") {
    GeneratorSet gens({"x", "y"});
    DegreeFunction deg({Rational(9), Rational(1)});
    Presentation p(gens, deg, {NcPolynomial::monomial({0, 0}),
                               NcPolynomial::monomial({0, 1, 0})});
    REQUIRE(certify(p).status == GsStatus::GS);
    VinbergReport v = verify_vinberg(p, 12);
    CHECK(v.holds);
}
