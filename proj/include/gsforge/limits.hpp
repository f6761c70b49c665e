#ifndef GSFORGE_LIMITS_HPP
#define GSFORGE_LIMITS_HPP

#include "gsforge/certify.hpp"
#include "gsforge/growth.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsforge {

/// One-parameter family of monomial relations prefix * g^t * suffix with an
/// affine degree law deg r_t = offset + slope * t.
struct RelationFamily {
    FamilyWordPattern pattern;

    Rational degree_offset(const DegreeFunction& d) const; // deg(prefix)+deg(suffix)
    Rational degree_slope(const DegreeFunction& d) const;  // weight of the repeated generator
    bool unbounded() const { return !pattern.t_end.has_value(); }
};

/// A direct-limit sequence A_0 -> A_1 -> ... of quotients: fixed generators
/// and degree function, finite base relations, plus relation families whose
/// parameter grows along the sequence.
struct LimitSpec {
    GeneratorSet gens;
    DegreeFunction deg;
    std::vector<NcPolynomial> base_relations;
    std::vector<RelationFamily> families;

    LimitSpec(GeneratorSet g, DegreeFunction d, std::vector<NcPolynomial> base,
              std::vector<RelationFamily> fams)
        : gens(std::move(g)), deg(std::move(d)), base_relations(std::move(base)),
          families(std::move(fams)) {}
};

/// Finite stage A_n: base relations plus family members with t <= n.
Presentation instantiate(const LimitSpec& spec, long n);

/// All relations of degree <= bound, from base and families (the proof-side
/// degree-truncated surrogate stages).
Presentation truncate_relations(const LimitSpec& spec, const Rational& bound);

struct StageReport {
    long index = 0;
    GenPoly series;
    IntervalSet negativity;
    GsCertificate certificate;
    bool nested_in_previous = true;
};

struct NestedSetsReport {
    std::vector<StageReport> stages;
    IntervalSet intersection;
    std::optional<Rational> common_witness; // rational interior point, if any
    bool all_nested = true;
    /// (degree n, least stage m whose Hilbert truncation agrees with the
    /// limit's below n) for the requested degrees.
    std::vector<std::pair<long, long>> stabilization;
};

NestedSetsReport nested_sets(const LimitSpec& spec, long stages,
                             unsigned long denom_cap = kDefaultExponentDenomCap,
                             long stabilization_upto = 0);

enum class LimitVerdict { WgsCertified, WgsUpToTruncation, NotWgs, Unknown };

std::string to_string(LimitVerdict v);

struct LimitCertificate {
    LimitVerdict verdict = LimitVerdict::Unknown;
    bool strict = false; // witness has series value < 0 (GS-strength)
    std::optional<Rational> witness;
    std::optional<Rational> witness_value; // exact f_lim(witness)
    std::optional<ExactPoint> boundary_witness;
    /// (1 - z^E) * f_lim as a generalized polynomial, with the common
    /// denominator exponent E; empty without an unbounded family.
    GenPoly cleared_numerator;
    Rational denominator_exponent; // E
    GsCertificate finite_certificate; // used when no unbounded family exists
    bool used_closed_form = false;
};

/// Exact wGS decision for the limit algebra via geometric summation of the
/// family tails. The truncation parameter only matters for specs without an
/// exact path (kept for interface completeness; families here always have
/// affine degree laws).
LimitCertificate certify_limit(const LimitSpec& spec, const Rational& truncation,
                               unsigned long denom_cap = kDefaultExponentDenomCap);

/// f_base(z) + sum over families of z^(c + e*t_start) / (1 - z^e), exact.
/// Throws DomainError at z = 1 with a nonempty unbounded family (divergence).
Rational limit_closed_eval(const LimitSpec& spec, const Rational& z,
                           unsigned long denom_cap = kDefaultExponentDenomCap);

/// Hilbert truncation of the limit algebra: exact, via the stage that already
/// contains every limit relation of degree <= cutoff.
HilbertTruncation limit_hilbert(const LimitSpec& spec, const Rational& cutoff,
                                const GroebnerLimits& limits = {});

/// Growth classification of the limit algebra (monomial data only).
GrowthResult limit_growth(const LimitSpec& spec);

/// Least stage m whose Hilbert truncation agrees with the limit's below the
/// given degree.
long stabilization_index(const LimitSpec& spec, const Rational& degree,
                         const GroebnerLimits& limits = {});

/// Scan deg x = a (deg y = 1) for the least integer a making
/// <x,y | x^2, xyx, ..., xy^n x> a GS algebra; nullopt past the bound.
struct WeightSearchResult {
    long weight = 0;
    GsCertificate certificate;
};
std::optional<WeightSearchResult> find_gs_weight(long n, long bound,
                                                 unsigned long denom_cap = kDefaultExponentDenomCap);

/// Exact remainder of 1 - u - u^a + n*u^(2a) modulo (u^a - 1/(2n)); the
/// expected value is 1 - u - 1/(4n).
UPolyQ gn_remainder(long n, long a);
bool gn_identity_holds(long n, long a);

} // namespace gsforge

#endif
