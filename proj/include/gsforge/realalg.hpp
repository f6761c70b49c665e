#ifndef GSFORGE_REALALG_HPP
#define GSFORGE_REALALG_HPP

#include "gsforge/upoly.hpp"

#include <string>

namespace gsforge {

/// An algebraic real given by a squarefree integer polynomial together with
/// an open rational interval (lo, hi) on which the polynomial changes sign
/// and contains exactly one root.
struct AlgebraicNumber {
    UPolyZ defining_poly;
    Rational lo, hi;
};

/// An exact real number: a rational, or an isolated algebraic root.
/// All values handled here lie in [0, 1]. Comparisons, sign evaluation and
/// refinement are exact; no floating point is involved.
class ExactReal {
public:
    ExactReal() : rational_(true), value_(0) {}
    explicit ExactReal(Rational v) : rational_(true), value_(std::move(v)) {}
    ExactReal(UPolyZ poly, Rational lo, Rational hi);

    static ExactReal from_root(const upoly::RootLoc& loc);

    bool is_rational() const { return rational_; }
    const Rational& rational_value() const;
    const AlgebraicNumber& algebraic() const;

    /// Current rational bracketing (lo = hi for rationals).
    Rational lower() const { return rational_ ? value_ : alg_.lo; }
    Rational upper() const { return rational_ ? value_ : alg_.hi; }

    /// One bisection step; may collapse to a rational.
    void refine();
    /// Shrink the bracket until its width is at most eps.
    void refine_below(const Rational& eps);

    /// -1, 0, +1 comparison against a rational — exact, no iteration.
    int compare(const Rational& r) const;
    /// Exact three-way comparison with another ExactReal.
    int compare(const ExactReal& other) const;

    /// Exact sign of an integer polynomial evaluated at this number.
    int poly_sign(const UPolyZ& f) const;

    double approx() const;
    std::string str() const;

private:
    bool rational_;
    Rational value_;
    AlgebraicNumber alg_;

    void collapse(const Rational& v);
};

inline bool operator<(const ExactReal& a, const ExactReal& b) { return a.compare(b) < 0; }
inline bool operator==(const ExactReal& a, const ExactReal& b) { return a.compare(b) == 0; }
inline bool operator<=(const ExactReal& a, const ExactReal& b) { return a.compare(b) <= 0; }

/// The m-th root of x (x in [0,1], m >= 1) as an exact real.
ExactReal nth_root(const ExactReal& x, unsigned long m);

} // namespace gsforge

#endif
