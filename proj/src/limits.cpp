#include "gsforge/limits.hpp"

#include <algorithm>

namespace gsforge {

Rational RelationFamily::degree_offset(const DegreeFunction& d) const {
    return word_degree(pattern.prefix, d) + word_degree(pattern.suffix, d);
}

Rational RelationFamily::degree_slope(const DegreeFunction& d) const {
    return d.weight(pattern.repeated_gen);
}

Presentation instantiate(const LimitSpec& spec, long n) {
    std::vector<NcPolynomial> rels = spec.base_relations;
    for (const auto& f : spec.families) {
        long hi = n;
        if (f.pattern.t_end)
            hi = std::min(hi, *f.pattern.t_end);
        for (long t = f.pattern.t_start; t <= hi; ++t)
            rels.push_back(NcPolynomial::monomial(f.pattern.instantiate(t)));
    }
    return Presentation(spec.gens, spec.deg, std::move(rels));
}

Presentation truncate_relations(const LimitSpec& spec, const Rational& bound) {
    std::vector<NcPolynomial> rels;
    for (const auto& r : spec.base_relations) {
        auto d = poly_degree(r, spec.deg);
        if (*d <= bound)
            rels.push_back(r);
    }
    for (const auto& f : spec.families) {
        Rational c = f.degree_offset(spec.deg);
        Rational e = f.degree_slope(spec.deg);
        // c + e*t <= bound  <=>  t <= (bound - c) / e
        Rational tmax_q = (bound - c) / e;
        Integer fl = tmax_q.get_num() / tmax_q.get_den();
        if (tmax_q < 0)
            continue;
        long tmax = fl.fits_slong_p() ? fl.get_si() : 0;
        if (f.pattern.t_end)
            tmax = std::min(tmax, *f.pattern.t_end);
        for (long t = f.pattern.t_start; t <= tmax; ++t)
            rels.push_back(NcPolynomial::monomial(f.pattern.instantiate(t)));
    }
    return Presentation(spec.gens, spec.deg, std::move(rels));
}

NestedSetsReport nested_sets(const LimitSpec& spec, long stages, unsigned long denom_cap,
                             long stabilization_upto) {
    if (stages < 1)
        throw DomainError("nested_sets: stages must be >= 1");
    NestedSetsReport rep;
    unsigned long lattice = spec.deg.denominator_lcm();
    for (long i = 0; i <= stages; ++i) {
        StageReport sr;
        sr.index = i;
        Presentation p = instantiate(spec, i);
        sr.series = gs_series(p);
        sr.certificate = certify_series(sr.series, denom_cap, lattice);
        sr.negativity = sr.certificate.negativity_set;
        if (i > 0) {
            sr.nested_in_previous = is_subset(sr.negativity, rep.stages.back().negativity);
            rep.all_nested = rep.all_nested && sr.nested_in_previous;
        }
        rep.stages.push_back(std::move(sr));
    }
    rep.intersection = rep.stages.front().negativity;
    for (size_t i = 1; i < rep.stages.size(); ++i)
        rep.intersection = intersect(rep.intersection, rep.stages[i].negativity);
    rep.common_witness = pick_rational_witness(rep.intersection);
    for (long n = 1; n <= stabilization_upto; ++n)
        rep.stabilization.emplace_back(n, stabilization_index(spec, Rational(n)));
    return rep;
}

std::string to_string(LimitVerdict v) {
    switch (v) {
    case LimitVerdict::WgsCertified: return "wGS_certified";
    case LimitVerdict::WgsUpToTruncation: return "wGS_up_to_truncation";
    case LimitVerdict::NotWgs: return "not_wGS";
    case LimitVerdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// Base series plus every bounded family folded in (finitely many terms).
GenPoly bounded_part_series(const LimitSpec& spec) {
    GenPoly f = GenPoly::constant(Rational(1));
    for (uint32_t g = 0; g < spec.gens.size(); ++g)
        f.add_term(Rational(-1), spec.deg.weight(g));
    for (const auto& r : spec.base_relations)
        f.add_term(Rational(1), *poly_degree(r, spec.deg));
    for (const auto& fam : spec.families) {
        if (fam.unbounded())
            continue;
        Rational c = fam.degree_offset(spec.deg);
        Rational e = fam.degree_slope(spec.deg);
        for (long t = fam.pattern.t_start; t <= *fam.pattern.t_end; ++t)
            f.add_term(Rational(1), c + e * t);
    }
    return f;
}

} // namespace

Rational limit_closed_eval(const LimitSpec& spec, const Rational& z, unsigned long denom_cap) {
    if (z < 0 || z > 1)
        throw DomainError("limit_closed_eval: z outside [0,1]");
    GenPoly base = bounded_part_series(spec);
    bool has_unbounded = false;
    for (const auto& f : spec.families)
        if (f.unbounded())
            has_unbounded = true;
    if (z == 1 && has_unbounded)
        throw DomainError("limit_closed_eval: series diverges at z = 1");
    Rational acc = evaluate(base, z, denom_cap);
    for (const auto& fam : spec.families) {
        if (!fam.unbounded())
            continue;
        Rational c = fam.degree_offset(spec.deg) + fam.degree_slope(spec.deg) * fam.pattern.t_start;
        Rational e = fam.degree_slope(spec.deg);
        GenPoly head = GenPoly::term(Rational(1), c);
        GenPoly tail_den = GenPoly::constant(Rational(1));
        tail_den.add_term(Rational(-1), e);
        Rational num = evaluate(head, z, denom_cap);
        Rational den = evaluate(tail_den, z, denom_cap);
        acc += num / den;
    }
    return acc;
}

LimitCertificate certify_limit(const LimitSpec& spec, const Rational& truncation,
                               unsigned long denom_cap) {
    LimitCertificate out;
    unsigned long lattice = spec.deg.denominator_lcm();

    std::vector<const RelationFamily*> unbounded;
    for (const auto& f : spec.families)
        if (f.unbounded())
            unbounded.push_back(&f);

    if (unbounded.empty()) {
        // The limit is the last finite stage.
        long top = 0;
        for (const auto& f : spec.families)
            top = std::max(top, f.pattern.t_end.value_or(0));
        out.finite_certificate = certify(instantiate(spec, top), denom_cap);
        out.used_closed_form = false;
        switch (out.finite_certificate.status) {
        case GsStatus::GS:
            out.verdict = LimitVerdict::WgsCertified;
            out.strict = true;
            out.witness = out.finite_certificate.witness;
            out.witness_value = out.finite_certificate.witness_value;
            break;
        case GsStatus::WgsOnly:
            out.verdict = LimitVerdict::WgsCertified;
            out.boundary_witness = out.finite_certificate.boundary_witness;
            break;
        case GsStatus::NotWgs:
            out.verdict = LimitVerdict::NotWgs;
            break;
        }
        (void)truncation;
        return out;
    }

    // Common denominator 1 - z^E over the weight lattice.
    long S = static_cast<long>(lattice);
    long Escaled = 1;
    for (const auto* f : unbounded) {
        Rational e = f->degree_slope(spec.deg) * S;
        Escaled = lcm_long(Escaled, e.get_num().get_si());
    }
    Rational E = frac(Escaled, S);

    GenPoly one_minus_zE = GenPoly::constant(Rational(1));
    one_minus_zE.add_term(Rational(-1), E);

    GenPoly numerator = bounded_part_series(spec) * one_minus_zE;
    for (const auto* f : unbounded) {
        Rational c = f->degree_offset(spec.deg) + f->degree_slope(spec.deg) * f->pattern.t_start;
        Rational e = f->degree_slope(spec.deg);
        // z^c * (1 + z^e + ... + z^(E - e))
        GenPoly geo;
        for (Rational t(0); t < E; t += e)
            geo.add_term(Rational(1), c + t);
        numerator = numerator + geo;
    }
    out.cleared_numerator = numerator;
    out.denominator_exponent = E;
    out.used_closed_form = true;

    // On [0,1) the denominator is positive; at z = 1 the tail diverges, so the
    // numerator (whose value at 1 counts the tails) stays positive there and
    // the negativity set of the numerator is the limit's negativity set.
    GsCertificate cert = certify_series(numerator, denom_cap, lattice);
    switch (cert.status) {
    case GsStatus::GS:
        out.verdict = LimitVerdict::WgsCertified;
        out.strict = true;
        out.witness = cert.witness;
        out.witness_value = limit_closed_eval(spec, *cert.witness, denom_cap);
        break;
    case GsStatus::WgsOnly:
        out.verdict = LimitVerdict::WgsCertified;
        out.boundary_witness = cert.boundary_witness;
        break;
    case GsStatus::NotWgs:
        out.verdict = LimitVerdict::NotWgs;
        break;
    }
    out.finite_certificate = std::move(cert);
    return out;
}

HilbertTruncation limit_hilbert(const LimitSpec& spec, const Rational& cutoff,
                                const GroebnerLimits& limits) {
    // Relations of degree above the cutoff cannot change dimensions at or
    // below it, so the stage holding all limit relations of degree <= cutoff
    // already has the limit's truncation.
    Presentation p = truncate_relations(spec, cutoff);
    return hilbert_truncation(p, cutoff, limits);
}

GrowthResult limit_growth(const LimitSpec& spec) {
    std::vector<Word> forbidden;
    for (const auto& r : spec.base_relations) {
        if (r.term_count() != 1)
            throw DomainError("limit_growth: base relations must be monomial");
        forbidden.push_back(r.terms().begin()->first);
    }
    std::vector<FamilyWordPattern> fams;
    for (const auto& f : spec.families) {
        if (f.unbounded()) {
            fams.push_back(f.pattern);
        } else {
            for (long t = f.pattern.t_start; t <= *f.pattern.t_end; ++t)
                forbidden.push_back(f.pattern.instantiate(t));
        }
    }
    return classify_growth_monomial(spec.gens.size(), forbidden, fams);
}

long stabilization_index(const LimitSpec& spec, const Rational& degree,
                         const GroebnerLimits& limits) {
    HilbertTruncation target = limit_hilbert(spec, degree, limits);
    // Upper bound: the stage index that includes every relation of degree
    // <= the requested degree.
    long upper = 0;
    for (const auto& f : spec.families) {
        Rational c = f.degree_offset(spec.deg);
        Rational e = f.degree_slope(spec.deg);
        Rational tq = (degree - c) / e;
        if (tq < 0)
            continue;
        Integer fl = tq.get_num() / tq.get_den();
        long t = fl.fits_slong_p() ? fl.get_si() : 0;
        if (f.pattern.t_end)
            t = std::min(t, *f.pattern.t_end);
        upper = std::max(upper, t);
    }
    for (long m = 0; m <= upper; ++m) {
        HilbertTruncation h = hilbert_truncation(instantiate(spec, m), degree, limits);
        if (h.entries == target.entries)
            return m;
    }
    return upper;
}

std::optional<WeightSearchResult> find_gs_weight(long n, long bound, unsigned long denom_cap) {
    if (n < 0 || bound < 1)
        throw DomainError("find_gs_weight: need n >= 0 and bound >= 1");
    for (long a = 1; a <= bound; ++a) {
        GeneratorSet gens({"x", "y"});
        DegreeFunction deg({Rational(a), Rational(1)});
        std::vector<NcPolynomial> rels;
        for (long t = 0; t <= n; ++t) {
            Word w{0};
            for (long i = 0; i < t; ++i)
                w.push_back(1);
            w.push_back(0);
            rels.push_back(NcPolynomial::monomial(w));
        }
        Presentation p(gens, deg, rels);
        GsCertificate cert = certify(p, denom_cap);
        if (cert.status == GsStatus::GS)
            return WeightSearchResult{a, std::move(cert)};
    }
    return std::nullopt;
}

UPolyQ gn_remainder(long n, long a) {
    if (n < 1 || a < 1)
        throw DomainError("gn_remainder: need n >= 1, a >= 1");
    // g_n(u) = 1 - u - u^a + n u^(2a)
    UPolyQ g(2 * a + 1, Rational(0));
    g[0] = 1;
    g[1] += -1;
    g[a] += -1;
    g[2 * a] += n;
    // modulus u^a - 1/(2n)
    UPolyQ mod(a + 1, Rational(0));
    mod[0] = frac(-1, 2 * n);
    mod[a] = 1;
    UPolyQ quot, rem;
    upoly::divmod_q(g, mod, quot, rem);
    return rem;
}

bool gn_identity_holds(long n, long a) {
    UPolyQ rem = gn_remainder(n, a);
    UPolyQ expect{Rational(1) - frac(1, 4 * n), Rational(-1)};
    upoly::trim_q(rem);
    upoly::trim_q(expect);
    return rem == expect;
}

} // namespace gsforge
