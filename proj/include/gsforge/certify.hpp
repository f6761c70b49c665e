#ifndef GSFORGE_CERTIFY_HPP
#define GSFORGE_CERTIFY_HPP

#include "gsforge/gbasis.hpp"
#include "gsforge/genpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsforge {

enum class GsStatus { GS, WgsOnly, NotWgs };

std::string to_string(GsStatus s);

/// Outcome of the series test: the series itself, its exact negativity set,
/// and the witness data backing the verdict.
struct GsCertificate {
    GsStatus status = GsStatus::NotWgs;
    GenPoly series;
    IntervalSet negativity_set;
    /// For GS: a rational z0 with certified series(z0) < 0, plus the value.
    std::optional<Rational> witness;
    std::optional<Rational> witness_value; // exact when the witness evaluates exactly
    /// For wGS-only: a boundary point with certified series value 0.
    std::optional<ExactPoint> boundary_witness;
};

/// The series 1 - sum_gens z^deg(g) + sum_rels z^deg(r).
GenPoly gs_series(const Presentation& p);

GsCertificate certify(const Presentation& p,
                      unsigned long denom_cap = kDefaultExponentDenomCap);

/// Certificate for an explicitly given series (used by the limit machinery).
GsCertificate certify_series(GenPoly series,
                             unsigned long denom_cap = kDefaultExponentDenomCap,
                             unsigned long lattice_hint = 1);

/// Coefficient-wise check of (f_A/(1-z)) * H_A >= 1/(1-z) on the truncated
/// series, for integer-valued degrees after lcm scaling.
struct VinbergReport {
    bool holds = true;
    bool conclusive = true;
    int first_violation = -1;
    bool exact_equality = true; // every checked coefficient met with equality
    int cutoff = 0;
    std::vector<Rational> cumulative; // partial sums of f*H, index = scaled degree
};

VinbergReport verify_vinberg(const Presentation& p, int cutoff,
                             const GroebnerLimits& limits = {});

/// One-sided scalar evidence for f(z0) * H(z0) >= 1 at an exact point.
struct ScalarReport {
    Rational z0;
    Rational f_value;
    int cutoff = 0;
    Rational h_truncated;     // lower bound of H_A(z0)
    Rational product;         // f(z0) * h_truncated when f(z0) > 0
    bool reached_one = false; // product >= 1 already at this cutoff
    bool divergence_mode = false; // f(z0) <= 0: H must diverge
    std::vector<std::pair<int, Rational>> divergence_table; // cutoff -> H_trunc
};

ScalarReport verify_scalar(const Presentation& p, const Rational& z0, int cutoff,
                           const GroebnerLimits& limits = {});

} // namespace gsforge

#endif
