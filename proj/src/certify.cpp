#include "gsforge/certify.hpp"

#include <algorithm>

namespace gsforge {

std::string to_string(GsStatus s) {
    switch (s) {
    case GsStatus::GS: return "GS";
    case GsStatus::WgsOnly: return "wGS_only";
    case GsStatus::NotWgs: return "not_wGS";
    }
    return "?";
}

GenPoly gs_series(const Presentation& p) {
    GenPoly f = GenPoly::constant(Rational(1));
    for (uint32_t g = 0; g < p.gens().size(); ++g)
        f.add_term(Rational(-1), p.deg().weight(g));
    for (const auto& r : p.relations()) {
        auto d = poly_degree(r, p.deg());
        f.add_term(Rational(1), *d);
    }
    return f;
}

GsCertificate certify_series(GenPoly series, unsigned long denom_cap,
                             unsigned long lattice_hint) {
    GsCertificate cert;
    cert.series = std::move(series);
    if (cert.series.is_zero())
        throw DomainError("certify: zero series");
    cert.negativity_set = negativity_set(cert.series, denom_cap, lattice_hint);

    if (cert.negativity_set.is_empty()) {
        cert.status = GsStatus::NotWgs;
        return cert;
    }
    if (cert.negativity_set.has_positive_length()) {
        cert.status = GsStatus::GS;
        cert.witness = pick_rational_witness(cert.negativity_set);
        if (sign_at(cert.series, *cert.witness, denom_cap) != Sign::Negative)
            throw DomainError("internal: GS witness failed its sign check");
        try {
            cert.witness_value = evaluate(cert.series, *cert.witness, denom_cap);
        } catch (const InexactEvalError&) {
            // witness chosen on the u-grid: z = w^q evaluates exactly; keep empty otherwise
        }
        return cert;
    }
    cert.status = GsStatus::WgsOnly;
    cert.boundary_witness = cert.negativity_set.component_lower(0);
    if (sign_at(cert.series, *cert.boundary_witness, denom_cap) != Sign::Zero)
        throw DomainError("internal: boundary witness failed its sign check");
    return cert;
}

GsCertificate certify(const Presentation& p, unsigned long denom_cap) {
    return certify_series(gs_series(p), denom_cap, p.deg().denominator_lcm());
}

namespace {

// Dense truncated power series on the scaled-integer grid.
using Series = std::vector<Rational>;

Series mul_trunc(const Series& a, const Series& b, size_t n) {
    Series r(n + 1, Rational(0));
    for (size_t i = 0; i <= n && i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; i + j <= n && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace

VinbergReport verify_vinberg(const Presentation& p, int cutoff,
                             const GroebnerLimits& limits) {
    VinbergReport rep;
    rep.cutoff = cutoff;
    MonomialOrder order(p.deg());
    const long scale = static_cast<long>(order.scale());
    const size_t n = static_cast<size_t>(cutoff) * static_cast<size_t>(scale);

    // H_A on the scaled grid.
    HilbertTruncation h = hilbert_truncation(p, Rational(cutoff), limits);
    Series H(n + 1, Rational(0));
    for (const auto& [deg, dim] : h.entries) {
        Rational s = deg * scale;
        size_t idx = s.get_num().get_ui();
        if (idx <= n)
            H[idx] = dim;
    }

    // f_A with scaled integer exponents.
    GenPoly f = gs_series(p);
    Series F(n + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) {
        Rational s = e * scale;
        if (s.get_den() != 1)
            throw DomainError("verify_vinberg: degree off the weight lattice");
        if (s.get_num().fits_ulong_p()) {
            size_t idx = s.get_num().get_ui();
            if (idx <= n)
                F[idx] += c;
        }
    }

    // (f*H)/(1-z) >= 1/(1-z) coefficient-wise <=> partial sums of f*H >= 1.
    Series prod = mul_trunc(F, H, n);
    Rational acc(0);
    rep.holds = true;
    rep.exact_equality = true;
    for (size_t i = 0; i <= n; ++i) {
        acc += prod[i];
        rep.cumulative.push_back(acc);
        if (acc < 1 && rep.first_violation < 0) {
            rep.holds = false;
            rep.first_violation = static_cast<int>(i);
        }
        if (acc != 1)
            rep.exact_equality = false;
    }
    return rep;
}

ScalarReport verify_scalar(const Presentation& p, const Rational& z0, int cutoff,
                           const GroebnerLimits& limits) {
    if (z0 < 0 || z0 > 1)
        throw DomainError("verify_scalar: z0 outside [0,1]");
    ScalarReport rep;
    rep.z0 = z0;
    rep.cutoff = cutoff;
    GenPoly f = gs_series(p);
    rep.f_value = evaluate(f, z0);

    HilbertTruncation h = hilbert_truncation(p, Rational(cutoff), limits);
    // Exact evaluation of the truncated series at z0 (q-th root must exist).
    unsigned long scale = p.deg().denominator_lcm();
    Rational w = z0;
    if (scale > 1) {
        auto root = exact_root(z0, scale);
        if (!root)
            throw InexactEvalError("verify_scalar: z0 is not an exact power for the weight lattice");
        w = *root;
    }
    auto value_at = [&](const HilbertTruncation& ht, const Rational& bound) {
        Rational acc(0);
        for (const auto& [deg, dim] : ht.entries) {
            if (deg > bound || dim == 0)
                continue;
            Rational s = deg * static_cast<long>(scale);
            acc += Rational(dim) * pow_rational(w, s.get_num().get_ui());
        }
        return acc;
    };
    rep.h_truncated = value_at(h, Rational(cutoff));

    if (rep.f_value > 0) {
        rep.product = rep.f_value * rep.h_truncated;
        rep.reached_one = rep.product >= 1;
    } else {
        rep.divergence_mode = true;
        for (int c = 1; c <= cutoff; ++c)
            rep.divergence_table.emplace_back(c, value_at(h, Rational(c)));
    }
    return rep;
}

} // namespace gsforge
