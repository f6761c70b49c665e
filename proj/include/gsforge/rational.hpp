#ifndef GSFORGE_RATIONAL_HPP
#define GSFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace gsforge {

using Rational = mpq_class;
using Integer = mpz_class;

/// Error classes shared across the library.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

class InexactEvalError : public std::runtime_error {
public:
    explicit InexactEvalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse "p" or "p/q" (optionally signed). Throws DomainError on bad input.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string rational_str(const Rational& q);

/// q^e for e >= 0.
Rational pow_rational(const Rational& base, unsigned long e);

/// Exact n-th root of a nonnegative rational, if it exists.
std::optional<Rational> exact_root(const Rational& value, unsigned long n);

int sign_of(const Rational& q);

/// Canonicalized n/d (the two-argument mpq_class constructor does not reduce).
Rational frac(long n, long d);

long lcm_long(long a, long b);

/// Simplest rational (smallest denominator, then smallest numerator) in [lo, hi].
Rational simplest_in_closed(const Rational& lo, const Rational& hi);

} // namespace gsforge

#endif
