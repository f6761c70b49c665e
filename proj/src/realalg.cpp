#include "gsforge/realalg.hpp"

#include <sstream>

namespace gsforge {

ExactReal::ExactReal(UPolyZ poly, Rational lo, Rational hi)
    : rational_(false), value_(0) {
    alg_.defining_poly = std::move(poly);
    alg_.lo = std::move(lo);
    alg_.hi = std::move(hi);
    if (upoly::sign_at(alg_.defining_poly, alg_.lo) * upoly::sign_at(alg_.defining_poly, alg_.hi) >= 0)
        throw DomainError("ExactReal: interval endpoints must straddle a sign change");
}

ExactReal ExactReal::from_root(const upoly::RootLoc& loc) {
    if (loc.is_rational)
        return ExactReal(loc.value);
    return ExactReal(loc.poly, loc.lo, loc.hi);
}

const Rational& ExactReal::rational_value() const {
    if (!rational_)
        throw DomainError("ExactReal: not rational");
    return value_;
}

const AlgebraicNumber& ExactReal::algebraic() const {
    if (rational_)
        throw DomainError("ExactReal: rational, no algebraic data");
    return alg_;
}

void ExactReal::collapse(const Rational& v) {
    rational_ = true;
    value_ = v;
    alg_ = AlgebraicNumber{};
}

void ExactReal::refine() {
    if (rational_)
        return;
    Rational mid = (alg_.lo + alg_.hi) / 2;
    int sm = upoly::sign_at(alg_.defining_poly, mid);
    if (sm == 0) {
        collapse(mid);
        return;
    }
    int sl = upoly::sign_at(alg_.defining_poly, alg_.lo);
    if (sl * sm < 0)
        alg_.hi = mid;
    else
        alg_.lo = mid;
}

void ExactReal::refine_below(const Rational& eps) {
    while (!rational_ && alg_.hi - alg_.lo > eps)
        refine();
}

int ExactReal::compare(const Rational& r) const {
    if (rational_)
        return cmp(value_, r) < 0 ? -1 : (value_ == r ? 0 : 1);
    if (r <= alg_.lo)
        return 1;
    if (r >= alg_.hi)
        return -1;
    int sr = upoly::sign_at(alg_.defining_poly, r);
    if (sr == 0)
        return 0; // r is the unique root in the interval
    int sl = upoly::sign_at(alg_.defining_poly, alg_.lo);
    // Sign change on (lo, r) means the root is below r.
    return (sl * sr < 0) ? -1 : 1;
}

int ExactReal::compare(const ExactReal& other) const {
    if (other.rational_) {
        return compare(other.value_);
    }
    if (rational_) {
        return -other.compare(value_);
    }
    // Both algebraic. Decide equality via a common root of the gcd.
    Rational ilo = std::max(alg_.lo, other.alg_.lo);
    Rational ihi = std::min(alg_.hi, other.alg_.hi);
    if (ilo < ihi) {
        UPolyZ g = upoly::gcd(alg_.defining_poly, other.alg_.defining_poly);
        if (upoly::degree(g) >= 1) {
            auto seq = upoly::sturm_sequence(g);
            // Endpoints of the overlap are non-roots of both defining polys.
            if (upoly::sturm_count(seq, ilo, ihi) >= 1)
                return 0;
        }
    }
    // Distinct numbers: refine until bracketing intervals separate.
    ExactReal a = *this;
    ExactReal b = other;
    while (true) {
        if (a.rational_)
            return -b.compare(a.value_);
        if (b.rational_)
            return a.compare(b.value_);
        if (a.alg_.hi <= b.alg_.lo)
            return -1;
        if (b.alg_.hi <= a.alg_.lo)
            return 1;
        a.refine();
        b.refine();
    }
}

int ExactReal::poly_sign(const UPolyZ& f) const {
    if (upoly::is_zero(f))
        return 0;
    if (rational_)
        return upoly::sign_at(f, value_);
    UPolyZ g = upoly::gcd(f, alg_.defining_poly);
    if (upoly::degree(g) >= 1) {
        auto gseq = upoly::sturm_sequence(g);
        if (upoly::sturm_count(gseq, alg_.lo, alg_.hi) >= 1)
            return 0; // this number is a root of f
    }
    // f has no root at *this; shrink until f is root-free on the bracket,
    // then the sign at any interior point is the sign at the root.
    ExactReal a = *this;
    auto fseq = upoly::sturm_sequence(upoly::squarefree_part(f));
    while (true) {
        if (a.rational_)
            return upoly::sign_at(f, a.value_);
        if (upoly::sign_at(f, a.alg_.lo) != 0 && upoly::sign_at(f, a.alg_.hi) != 0 &&
            upoly::sturm_count(fseq, a.alg_.lo, a.alg_.hi) == 0) {
            return upoly::sign_at(f, (a.alg_.lo + a.alg_.hi) / 2);
        }
        a.refine();
    }
}

double ExactReal::approx() const {
    if (rational_)
        return value_.get_d();
    ExactReal a = *this;
    a.refine_below(Rational(1, 1000000000));
    Rational mid = (a.lower() + a.upper()) / 2;
    return mid.get_d();
}

std::string ExactReal::str() const {
    if (rational_)
        return rational_str(value_);
    std::ostringstream os;
    os << "root of " << upoly::to_string(alg_.defining_poly) << " in ("
       << rational_str(alg_.lo) << ", " << rational_str(alg_.hi) << ")";
    return os.str();
}

ExactReal nth_root(const ExactReal& x, unsigned long m) {
    if (m == 1)
        return x;
    if (x.is_rational()) {
        const Rational& r = x.rational_value();
        if (r < 0)
            throw DomainError("nth_root: negative input");
        if (r == 0)
            return ExactReal(Rational(0));
        if (auto w = exact_root(r, m))
            return ExactReal(*w);
        // Root of den*v^m - num: strictly increasing for v >= 0, one positive root.
        UPolyZ p(m + 1, Integer(0));
        p[0] = -r.get_num();
        p[m] = r.get_den();
        Rational hi = std::max(Rational(1), r);
        while (upoly::sign_at(p, hi) <= 0)
            hi += 1;
        ExactReal v(p, Rational(0), hi);
        for (int i = 0; i < 8 && !v.is_rational(); ++i)
            v.refine();
        return v;
    }
    // Algebraic input u with defining poly P: v = u^(1/m) is a root of P(v^m).
    const AlgebraicNumber& a = x.algebraic();
    UPolyZ q = upoly::squarefree_part(upoly::compose_power(a.defining_poly, m));
    Rational span_hi = std::max(Rational(1), a.hi);
    auto roots = upoly::isolate_roots(q, Rational(0), span_hi);
    const ExactReal& u = x; // fixed bracket: exactly one root of P inside
    for (const auto& loc : roots) {
        ExactReal cand = ExactReal::from_root(loc);
        // cand is the answer iff cand^m == u. cand^m is a root of P, and u's
        // isolating interval holds exactly one root of P, so shrinking cand's
        // image bracket into or out of that interval decides membership.
        while (true) {
            if (cand.is_rational()) {
                if (u.compare(pow_rational(cand.rational_value(), m)) == 0)
                    return cand;
                break;
            }
            Rational clm = pow_rational(cand.lower(), m);
            Rational chm = pow_rational(cand.upper(), m);
            if (chm <= u.lower() || clm >= u.upper())
                break; // cand^m provably outside u's isolating interval
            if (u.lower() <= clm && chm <= u.upper())
                return cand; // cand^m is a root of P inside u's isolating interval
            cand.refine();
        }
    }
    throw DomainError("nth_root: no matching root found");
}

} // namespace gsforge
