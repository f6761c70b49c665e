#ifndef GSFORGE_GENPOLY_HPP
#define GSFORGE_GENPOLY_HPP

#include "gsforge/realalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsforge {

/// Configurable cap on the lcm of exponent denominators (substitution order).
inline constexpr unsigned long kDefaultExponentDenomCap = 60;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// A generalized polynomial: a finite sum of c * z^a with rational
/// coefficients and nonnegative rational exponents, kept sorted by exponent
/// with no zero coefficients. The empty sum is the zero function.
class GenPoly {
public:
    GenPoly() = default;

    static GenPoly zero() { return GenPoly(); }
    static GenPoly constant(const Rational& c);
    /// c * z^a
    static GenPoly term(const Rational& coeff, const Rational& exponent);

    void add_term(const Rational& coeff, const Rational& exponent);

    GenPoly operator+(const GenPoly& other) const;
    GenPoly operator-(const GenPoly& other) const;
    GenPoly operator*(const GenPoly& other) const;
    GenPoly scaled(const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Rational, Rational>>& terms() const { return terms_; }

    /// lcm of the exponent denominators; 1 when all exponents are integers.
    unsigned long exponent_denominator_lcm() const;

    /// Integer polynomial F with F(u) = s * f(u^q) for a positive integer s.
    /// q must be a multiple of exponent_denominator_lcm().
    UPolyZ substituted(unsigned long q) const;

    bool operator==(const GenPoly& other) const { return terms_ == other.terms_; }

    std::string str(const std::string& var = "z") const;

private:
    std::vector<std::pair<Rational, Rational>> terms_; // (exponent, coefficient)
};

/// An exact point of [0, 1] described as z = u^power.
struct ExactPoint {
    ExactReal u;
    unsigned long power = 1;

    bool is_rational() const;
    /// Exact rational value when available.
    std::optional<Rational> rational() const;
    /// Rational bracketing of z.
    Rational lower() const;
    Rational upper() const;
    std::string str() const;
};

/// Exact evaluation of f at a rational z. Requires z to be an exact q-th
/// power when f has fractional exponents; throws InexactEvalError otherwise.
Rational evaluate(const GenPoly& f, const Rational& z,
                  unsigned long denom_cap = kDefaultExponentDenomCap);

/// Certified sign of f at a rational point of [0, 1].
Sign sign_at(const GenPoly& f, const Rational& z,
             unsigned long denom_cap = kDefaultExponentDenomCap);

/// Certified sign of f at an exact algebraic point of [0, 1].
Sign sign_at(const GenPoly& f, const ExactPoint& z,
             unsigned long denom_cap = kDefaultExponentDenomCap);

/// The negativity set S = { z in [0,1] : f(z) <= 0 } of a nonzero GenPoly,
/// as a finite union of disjoint closed intervals with exact endpoints.
/// Internally the set lives on the u-axis with z = u^q.
class IntervalSet {
public:
    struct Component {
        ExactReal lo, hi;   // u-space, lo <= hi; lo == hi for point components
        bool degenerate = false;
        /// u-space open subintervals on which the generating function was
        /// certified strictly negative (empty after set operations).
        std::vector<std::pair<ExactReal, ExactReal>> strict_gaps;
    };

    IntervalSet() : q_(1) {}
    explicit IntervalSet(unsigned long q) : q_(q) {}

    static IntervalSet empty_set() { return IntervalSet(); }
    static IntervalSet whole_interval(unsigned long q = 1);

    unsigned long root_power() const { return q_; }
    const std::vector<Component>& components() const { return comps_; }

    bool is_empty() const { return comps_.empty(); }
    size_t component_count() const { return comps_.size(); }

    /// True iff some component has positive length.
    bool has_positive_length() const;

    bool contains(const Rational& z) const;

    ExactPoint component_lower(size_t i) const;
    ExactPoint component_upper(size_t i) const;

    void append_component(Component c);

    std::string str() const;

private:
    unsigned long q_;
    std::vector<Component> comps_;
};

/// lattice_hint forces the substitution order q to a multiple of the given
/// value, so sets and witnesses from one weight lattice stay comparable and
/// exactly evaluable across a whole family of series.
IntervalSet negativity_set(const GenPoly& f,
                           unsigned long denom_cap = kDefaultExponentDenomCap,
                           unsigned long lattice_hint = 1);

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// A rational interior point of a positive-length component, if one exists.
/// Point components only (or the empty set) yield nullopt.
std::optional<Rational> pick_rational_witness(const IntervalSet& s);

/// A rational z in the open u-space interval (lo, hi) mapped through u -> u^q.
/// Prefers small decimal denominators, falling back to the simplest fraction.
Rational rational_inside(const ExactReal& lo, const ExactReal& hi, unsigned long q);

} // namespace gsforge

#endif
