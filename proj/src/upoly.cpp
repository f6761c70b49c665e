#include "gsforge/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace gsforge {
namespace upoly {

void trim(UPolyZ& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void trim_q(UPolyQ& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

bool is_zero(const UPolyZ& p) {
    return p.empty();
}

int degree(const UPolyZ& p) {
    return static_cast<int>(p.size()) - 1;
}

Rational eval_q(const UPolyZ& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

int sign_at(const UPolyZ& p, const Rational& x) {
    return sgn(eval_q(p, x));
}

UPolyZ derivative(const UPolyZ& p) {
    UPolyZ d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

UPolyZ add(const UPolyZ& a, const UPolyZ& b) {
    UPolyZ r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPolyZ sub(const UPolyZ& a, const UPolyZ& b) {
    UPolyZ r(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPolyZ mul(const UPolyZ& a, const UPolyZ& b) {
    if (a.empty() || b.empty())
        return {};
    UPolyZ r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPolyZ primitive_signed(const UPolyZ& p) {
    if (p.empty())
        return {};
    Integer c(0);
    for (const auto& a : p)
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    UPolyZ r = p;
    if (c > 1)
        for (auto& a : r)
            a /= c;
    return r;
}

UPolyZ primitive(const UPolyZ& p) {
    UPolyZ r = primitive_signed(p);
    if (!r.empty() && r.back() < 0)
        for (auto& a : r)
            a = -a;
    return r;
}

UPolyQ to_q(const UPolyZ& p) {
    UPolyQ q;
    q.reserve(p.size());
    for (const auto& a : p)
        q.emplace_back(a);
    return q;
}

UPolyZ scale_to_z(const UPolyQ& p) {
    Integer den(1);
    for (const auto& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    UPolyZ r;
    r.reserve(p.size());
    for (const auto& c : p) {
        Rational s = c * Rational(den);
        r.push_back(s.get_num());
    }
    trim(r);
    return primitive_signed(r);
}

void divmod_q(const UPolyQ& num, const UPolyQ& den, UPolyQ& quot, UPolyQ& rem) {
    UPolyQ d = den;
    trim_q(d);
    if (d.empty())
        throw DomainError("polynomial division by zero");
    rem = num;
    trim_q(rem);
    if (rem.size() < d.size()) {
        quot.clear();
        return;
    }
    quot.assign(rem.size() - d.size() + 1, Rational(0));
    const Rational lead = d.back();
    while (rem.size() >= d.size()) {
        Rational f = rem.back() / lead;
        size_t shift = rem.size() - d.size();
        quot[shift] = f;
        for (size_t i = 0; i < d.size(); ++i)
            rem[shift + i] -= f * d[i];
        trim_q(rem); // leading slot cancels exactly, so the loop advances
    }
    trim_q(quot);
}

UPolyZ divide_exact(const UPolyZ& num, const UPolyZ& den) {
    UPolyQ q, r;
    divmod_q(to_q(num), to_q(den), q, r);
    if (!r.empty())
        throw DomainError("divide_exact: nonzero remainder");
    return scale_to_z(q);
}

UPolyZ gcd(const UPolyZ& a, const UPolyZ& b) {
    UPolyZ f = primitive(a);
    UPolyZ g = primitive(b);
    while (!g.empty()) {
        UPolyQ q, r;
        divmod_q(to_q(f), to_q(g), q, r);
        f = g;
        g = scale_to_z(r);
        if (!g.empty() && g.back() < 0)
            for (auto& c : g)
                c = -c;
    }
    return primitive(f);
}

UPolyZ squarefree_part(const UPolyZ& p) {
    if (p.empty())
        return {};
    if (p.size() <= 2)
        return primitive(p);
    UPolyZ g = gcd(p, derivative(p));
    if (degree(g) == 0)
        return primitive(p);
    return primitive(divide_exact(p, g));
}

UPolyZ compose_power(const UPolyZ& p, unsigned long m) {
    if (m == 0)
        throw DomainError("compose_power: m must be >= 1");
    if (m == 1 || p.empty())
        return p;
    UPolyZ r((p.size() - 1) * m + 1, Integer(0));
    for (size_t i = 0; i < p.size(); ++i)
        r[i * m] = p[i];
    trim(r);
    return r;
}

std::vector<UPolyZ> sturm_sequence(const UPolyZ& p) {
    std::vector<UPolyZ> seq;
    UPolyZ s0 = primitive_signed(p);
    if (s0.empty())
        return seq;
    seq.push_back(s0);
    UPolyZ s1 = primitive_signed(derivative(s0));
    if (s1.empty())
        return seq;
    seq.push_back(s1);
    while (true) {
        const UPolyZ& a = seq[seq.size() - 2];
        const UPolyZ& b = seq.back();
        UPolyQ q, r;
        divmod_q(to_q(a), to_q(b), q, r);
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        seq.push_back(scale_to_z(r)); // positive scaling keeps Sturm signs
        if (degree(seq.back()) == 0)
            break;
    }
    return seq;
}

namespace {

int sign_variations(const std::vector<UPolyZ>& seq, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
        int sg = sign_at(s, x);
        if (sg == 0)
            continue;
        if (prev != 0 && sg != prev)
            ++count;
        prev = sg;
    }
    return count;
}

} // namespace

int sturm_count(const std::vector<UPolyZ>& seq, const Rational& a, const Rational& b) {
    if (seq.empty())
        return 0;
    return sign_variations(seq, a) - sign_variations(seq, b);
}

namespace {

// Remove the factor (x - r) from p, exactly.
UPolyZ deflate(const UPolyZ& p, const Rational& r) {
    UPolyQ lin{-r, Rational(1)};
    UPolyQ q, rem;
    divmod_q(to_q(p), lin, q, rem);
    if (!rem.empty())
        throw DomainError("deflate: not a root");
    return scale_to_z(q);
}

// Divisors of |n| by trial division; n must fit in unsigned long.
std::vector<Integer> small_divisors(const Integer& n) {
    std::vector<Integer> divs;
    unsigned long v = mpz_get_ui(n.get_mpz_t());
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.emplace_back(d);
            if (d != v / d)
                divs.emplace_back(v / d);
        }
    }
    return divs;
}

// Strip all rational roots of a squarefree primitive polynomial; returns the
// roots and leaves the deflated polynomial in f. Skipped when the extreme
// coefficients are too large to factor cheaply (isolation still works, the
// roots just stay represented as intervals).
std::vector<Rational> extract_rational_roots(UPolyZ& f) {
    std::vector<Rational> found;
    const Integer cap = Integer(1000000);
    while (degree(f) >= 1) {
        if (f[0] == 0) {
            found.emplace_back(0);
            f.erase(f.begin());
            trim(f);
            continue;
        }
        if (degree(f) == 1) {
            Rational r(-f[0], f[1]);
            r.canonicalize();
            found.push_back(r);
            f = UPolyZ{f[1]};
            break;
        }
        Integer c0 = abs(f[0]);
        Integer cl = abs(f.back());
        if (c0 > cap || cl > cap)
            break;
        bool hit = false;
        for (const auto& p : small_divisors(c0)) {
            for (const auto& q : small_divisors(cl)) {
                Rational r(p, q);
                r.canonicalize();
                for (int s = 0; s < 2; ++s) {
                    Rational cand = s ? -r : r;
                    if (sign_at(f, cand) == 0) {
                        found.push_back(cand);
                        f = deflate(f, cand);
                        hit = true;
                        break;
                    }
                }
                if (hit)
                    break;
            }
            if (hit)
                break;
        }
        if (!hit)
            break;
    }
    std::sort(found.begin(), found.end());
    return found;
}

void isolate_rec(const UPolyZ& p, const std::vector<UPolyZ>& seq,
                 const Rational& a, const Rational& b,
                 std::vector<RootLoc>& out, int depth) {
    if (depth > 4000)
        throw ResourceLimitError("root isolation recursion too deep");
    int n = sturm_count(seq, a, b);
    if (n == 0)
        return;
    if (n == 1) {
        RootLoc loc;
        loc.is_rational = false;
        loc.lo = a;
        loc.hi = b;
        loc.poly = p;
        out.push_back(loc);
        return;
    }
    Rational mid = (a + b) / 2;
    if (sign_at(p, mid) == 0) {
        // Rational root at the midpoint: record it, deflate, restart on (a,b).
        RootLoc loc;
        loc.is_rational = true;
        loc.value = mid;
        out.push_back(loc);
        UPolyZ rest = deflate(p, mid);
        auto rest_seq = sturm_sequence(rest);
        isolate_rec(rest, rest_seq, a, b, out, depth + 1);
        return;
    }
    isolate_rec(p, seq, a, mid, out, depth + 1);
    isolate_rec(p, seq, mid, b, out, depth + 1);
}

} // namespace

std::vector<RootLoc> isolate_roots(const UPolyZ& p, const Rational& lo, const Rational& hi) {
    if (p.empty())
        throw DomainError("isolate_roots: zero polynomial");
    std::vector<RootLoc> out;
    UPolyZ f = squarefree_part(p);
    if (degree(f) <= 0)
        return out;
    // Endpoint roots first.
    if (sign_at(f, lo) == 0) {
        RootLoc loc;
        loc.is_rational = true;
        loc.value = lo;
        out.push_back(loc);
        f = deflate(f, lo);
    }
    if (!f.empty() && degree(f) >= 1 && sign_at(f, hi) == 0) {
        RootLoc loc;
        loc.is_rational = true;
        loc.value = hi;
        out.push_back(loc);
        f = deflate(f, hi);
    }
    // Exact rational roots where cheap, Sturm bisection for the rest.
    for (const auto& r : extract_rational_roots(f)) {
        if (r > lo && r < hi) {
            RootLoc loc;
            loc.is_rational = true;
            loc.value = r;
            out.push_back(loc);
        }
    }
    if (degree(f) >= 1) {
        auto seq = sturm_sequence(f);
        isolate_rec(f, seq, lo, hi, out, 0);
    }
    // Note: isolating intervals from different deflation stages may overlap,
    // so callers needing a total order must compare the roots exactly.
    return out;
}

std::string to_string(const UPolyZ& p, const std::string& var) {
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0)
            continue;
        Integer c = p[i];
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        if (a != 1 || i == 0)
            os << a.get_str();
        if (i >= 1) {
            if (a != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

} // namespace upoly
} // namespace gsforge
