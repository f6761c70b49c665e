#include "gsforge/rational.hpp"

namespace gsforge {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw DomainError("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw DomainError("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_root(const Rational& value, unsigned long n) {
    if (value < 0 || n == 0)
        return std::nullopt;
    Integer rn, rd;
    int exact_num = mpz_root(rn.get_mpz_t(), value.get_num().get_mpz_t(), n);
    if (!exact_num)
        return std::nullopt;
    int exact_den = mpz_root(rd.get_mpz_t(), value.get_den().get_mpz_t(), n);
    if (!exact_den)
        return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

int sign_of(const Rational& q) {
    return sgn(q);
}

Rational frac(long n, long d) {
    if (d == 0)
        throw DomainError("frac: zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

long lcm_long(long a, long b) {
    Integer l;
    Integer za(a), zb(b);
    mpz_lcm(l.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    if (!l.fits_slong_p())
        throw ResourceLimitError("lcm overflow");
    return l.get_si();
}

namespace {

// Continued-fraction descent; lo <= hi, both >= 0.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    Integer fl = lo.get_num() / lo.get_den(); // floor for nonneg
    Rational n(fl);
    if (n >= lo)
        return n; // lo is an integer
    if (n + 1 <= hi)
        return Rational(n + 1);
    Rational inv = simplest_nonneg(1 / (hi - n), 1 / (lo - n));
    return n + 1 / inv;
}

} // namespace

Rational simplest_in_closed(const Rational& lo, const Rational& hi) {
    if (lo > hi)
        throw DomainError("simplest_in_closed: empty interval");
    if (lo <= 0 && hi >= 0)
        return Rational(0);
    if (hi < 0) {
        return -simplest_nonneg(-hi, -lo);
    }
    return simplest_nonneg(lo, hi);
}

} // namespace gsforge
