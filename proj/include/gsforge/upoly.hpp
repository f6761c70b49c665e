#ifndef GSFORGE_UPOLY_HPP
#define GSFORGE_UPOLY_HPP

#include "gsforge/rational.hpp"

#include <vector>

namespace gsforge {

/// Dense univariate polynomial with integer coefficients, coeffs[i] * u^i.
/// The zero polynomial is the empty vector.
using UPolyZ = std::vector<Integer>;

/// Dense univariate polynomial over the rationals.
using UPolyQ = std::vector<Rational>;

namespace upoly {

void trim(UPolyZ& p);
void trim_q(UPolyQ& p);
bool is_zero(const UPolyZ& p);
int degree(const UPolyZ& p); // -1 for zero

Rational eval_q(const UPolyZ& p, const Rational& x);
int sign_at(const UPolyZ& p, const Rational& x);

UPolyZ derivative(const UPolyZ& p);
UPolyZ add(const UPolyZ& a, const UPolyZ& b);
UPolyZ sub(const UPolyZ& a, const UPolyZ& b);
UPolyZ mul(const UPolyZ& a, const UPolyZ& b);

/// Content-normalized copy with positive leading coefficient removed of
/// common integer factors. Zero maps to zero.
UPolyZ primitive(const UPolyZ& p);

/// Divide out common integer content, keep the sign of the leading coefficient.
UPolyZ primitive_signed(const UPolyZ& p);

UPolyQ to_q(const UPolyZ& p);
/// Scale a rational polynomial to a primitive integer one; positive scaling only.
UPolyZ scale_to_z(const UPolyQ& p);

/// Quotient and remainder over Q. Divisor must be nonzero.
void divmod_q(const UPolyQ& num, const UPolyQ& den, UPolyQ& quot, UPolyQ& rem);

/// Exact division over Q (throws DomainError if remainder nonzero).
UPolyZ divide_exact(const UPolyZ& num, const UPolyZ& den);

/// Polynomial gcd, returned primitive with positive leading coefficient.
UPolyZ gcd(const UPolyZ& a, const UPolyZ& b);

/// p / gcd(p, p'): same real roots, all simple.
UPolyZ squarefree_part(const UPolyZ& p);

/// Substitute u -> u^m (m >= 1).
UPolyZ compose_power(const UPolyZ& p, unsigned long m);

/// Sturm sequence of p (primitive integer representatives).
std::vector<UPolyZ> sturm_sequence(const UPolyZ& p);

/// Number of distinct real roots in (a, b]; requires p(a) != 0.
int sturm_count(const std::vector<UPolyZ>& seq, const Rational& a, const Rational& b);

/// A located real root: either an exact rational, or an open isolating
/// interval (lo, hi) together with the squarefree polynomial for which
/// poly(lo)*poly(hi) < 0 and (lo, hi) holds exactly one root.
struct RootLoc {
    bool is_rational = false;
    Rational value;      // when is_rational
    Rational lo, hi;     // when interval
    UPolyZ poly;         // when interval
};

/// Isolate all distinct real roots of p in the closed interval [lo, hi].
/// Roots are returned in increasing order. p must be nonzero.
std::vector<RootLoc> isolate_roots(const UPolyZ& p, const Rational& lo, const Rational& hi);

std::string to_string(const UPolyZ& p, const std::string& var = "u");

} // namespace upoly
} // namespace gsforge

#endif
