#include "gsforge/genpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gsforge {

GenPoly GenPoly::constant(const Rational& c) {
    GenPoly p;
    p.add_term(c, Rational(0));
    return p;
}

GenPoly GenPoly::term(const Rational& coeff, const Rational& exponent) {
    GenPoly p;
    p.add_term(coeff, exponent);
    return p;
}

void GenPoly::add_term(const Rational& coeff, const Rational& exponent) {
    if (coeff == 0)
        return;
    if (exponent < 0)
        throw DomainError("GenPoly: negative exponent");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const auto& t, const Rational& e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, {exponent, coeff});
    }
}

GenPoly GenPoly::operator+(const GenPoly& other) const {
    GenPoly r = *this;
    for (const auto& [e, c] : other.terms_)
        r.add_term(c, e);
    return r;
}

GenPoly GenPoly::operator-(const GenPoly& other) const {
    GenPoly r = *this;
    for (const auto& [e, c] : other.terms_)
        r.add_term(-c, e);
    return r;
}

GenPoly GenPoly::operator*(const GenPoly& other) const {
    GenPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            r.add_term(c1 * c2, e1 + e2);
    return r;
}

GenPoly GenPoly::scaled(const Rational& c) const {
    GenPoly r;
    if (c == 0)
        return r;
    for (const auto& [e, co] : terms_)
        r.add_term(co * c, e);
    return r;
}

unsigned long GenPoly::exponent_denominator_lcm() const {
    Integer l(1);
    for (const auto& [e, c] : terms_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    if (!l.fits_ulong_p())
        throw ResourceLimitError("exponent denominator lcm overflow");
    return l.get_ui();
}

UPolyZ GenPoly::substituted(unsigned long q) const {
    Integer cden(1);
    for (const auto& [e, c] : terms_)
        mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(), c.get_den().get_mpz_t());
    UPolyZ f;
    for (const auto& [e, c] : terms_) {
        Rational scaled_exp = e * static_cast<long>(q);
        if (scaled_exp.get_den() != 1)
            throw DomainError("GenPoly::substituted: q is not a common exponent denominator");
        Integer ez = scaled_exp.get_num();
        if (!ez.fits_ulong_p() || ez.get_ui() > 2000000)
            throw ResourceLimitError("substituted polynomial degree too large");
        size_t idx = ez.get_ui();
        if (f.size() <= idx)
            f.resize(idx + 1, Integer(0));
        Rational cc = c * Rational(cden);
        f[idx] += cc.get_num();
    }
    upoly::trim(f);
    return f;
}

std::string GenPoly::str(const std::string& var) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (e == 0) {
            os << rational_str(a);
        } else {
            if (!unit)
                os << rational_str(a) << "*";
            os << var;
            if (e != 1) {
                os << "^";
                if (e.get_den() == 1)
                    os << e.get_num().get_str();
                else
                    os << "(" << rational_str(e) << ")";
            }
        }
    }
    return os.str();
}

bool ExactPoint::is_rational() const {
    if (!u.is_rational())
        return false;
    return true;
}

std::optional<Rational> ExactPoint::rational() const {
    if (!u.is_rational())
        return std::nullopt;
    return pow_rational(u.rational_value(), power);
}

Rational ExactPoint::lower() const {
    return pow_rational(u.lower(), power);
}

Rational ExactPoint::upper() const {
    return pow_rational(u.upper(), power);
}

std::string ExactPoint::str() const {
    if (auto r = rational())
        return rational_str(*r);
    std::ostringstream os;
    if (power == 1)
        return u.str();
    os << "(" << u.str() << ")^" << power;
    return os.str();
}

namespace {

unsigned long checked_lcm(const GenPoly& f, unsigned long denom_cap) {
    unsigned long q = f.exponent_denominator_lcm();
    if (q > denom_cap)
        throw ResourceLimitError("exponent denominator lcm " + std::to_string(q) +
                                 " exceeds cap " + std::to_string(denom_cap));
    return q;
}

} // namespace

Rational evaluate(const GenPoly& f, const Rational& z, unsigned long denom_cap) {
    unsigned long q = checked_lcm(f, denom_cap);
    if (q == 1) {
        Rational acc(0);
        for (const auto& [e, c] : f.terms()) {
            if (!e.get_num().fits_ulong_p())
                throw ResourceLimitError("evaluate: exponent too large");
            unsigned long ei = e.get_num().get_ui();
            acc += c * pow_rational(z, ei);
        }
        return acc;
    }
    auto w = exact_root(z, q);
    if (!w)
        throw InexactEvalError("inexact input: z is not an exact " + std::to_string(q) +
                               "-th power; use sign_at");
    Rational acc(0);
    for (const auto& [e, c] : f.terms()) {
        Rational se = e * static_cast<long>(q);
        acc += c * pow_rational(*w, se.get_num().get_ui());
    }
    return acc;
}

Sign sign_at(const GenPoly& f, const Rational& z, unsigned long denom_cap) {
    if (f.is_zero())
        return Sign::Zero;
    if (z < 0 || z > 1)
        throw DomainError("sign_at: z outside [0,1]");
    unsigned long q = checked_lcm(f, denom_cap);
    UPolyZ F = f.substituted(q);
    if (q == 1)
        return static_cast<Sign>(upoly::sign_at(F, z));
    if (auto w = exact_root(z, q))
        return static_cast<Sign>(upoly::sign_at(F, *w));
    ExactReal u = nth_root(ExactReal(z), q);
    return static_cast<Sign>(u.poly_sign(F));
}

Sign sign_at(const GenPoly& f, const ExactPoint& z, unsigned long denom_cap) {
    if (f.is_zero())
        return Sign::Zero;
    if (auto r = z.rational())
        return sign_at(f, *r, denom_cap);
    unsigned long q = checked_lcm(f, denom_cap);
    // z = u^p; write z = v^L with L = lcm(p, q), v = u^(p/L-th root inverse).
    unsigned long L = static_cast<unsigned long>(lcm_long(static_cast<long>(q), static_cast<long>(z.power)));
    ExactReal v = nth_root(z.u, L / z.power);
    UPolyZ F = f.substituted(L);
    return static_cast<Sign>(v.poly_sign(F));
}

IntervalSet IntervalSet::whole_interval(unsigned long q) {
    IntervalSet s(q);
    Component c;
    c.lo = ExactReal(Rational(0));
    c.hi = ExactReal(Rational(1));
    s.comps_.push_back(std::move(c));
    return s;
}

bool IntervalSet::has_positive_length() const {
    for (const auto& c : comps_)
        if (!c.degenerate)
            return true;
    return false;
}

bool IntervalSet::contains(const Rational& z) const {
    if (comps_.empty())
        return false;
    if (z < 0 || z > 1)
        return false;
    ExactReal u = nth_root(ExactReal(z), q_);
    for (const auto& c : comps_) {
        if (c.lo.compare(u) <= 0 && u.compare(c.hi) <= 0)
            return true;
    }
    return false;
}

ExactPoint IntervalSet::component_lower(size_t i) const {
    return ExactPoint{comps_.at(i).lo, q_};
}

ExactPoint IntervalSet::component_upper(size_t i) const {
    return ExactPoint{comps_.at(i).hi, q_};
}

void IntervalSet::append_component(Component c) {
    comps_.push_back(std::move(c));
}

std::string IntervalSet::str() const {
    if (comps_.empty())
        return "{}";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (!first)
            os << " U ";
        first = false;
        ExactPoint lo = component_lower(i);
        ExactPoint hi = component_upper(i);
        if (comps_[i].degenerate)
            os << "{" << lo.str() << "}";
        else
            os << "[" << lo.str() << ", " << hi.str() << "]";
    }
    return os.str();
}

IntervalSet negativity_set(const GenPoly& f, unsigned long denom_cap,
                           unsigned long lattice_hint) {
    if (f.is_zero())
        throw DomainError("negativity_set: zero function");
    unsigned long q = checked_lcm(f, denom_cap);
    if (lattice_hint > 1) {
        q = static_cast<unsigned long>(
            lcm_long(static_cast<long>(q), static_cast<long>(lattice_hint)));
        if (q > denom_cap)
            throw ResourceLimitError("exponent denominator lcm " + std::to_string(q) +
                                     " exceeds cap " + std::to_string(denom_cap));
    }
    UPolyZ F = f.substituted(q);
    IntervalSet s(q);
    if (upoly::degree(F) <= 0) {
        // Nonzero constant.
        if (!F.empty() && F[0] < 0)
            return IntervalSet::whole_interval(q);
        return s;
    }
    auto roots = upoly::isolate_roots(F, Rational(0), Rational(1));

    std::vector<ExactReal> pts;
    pts.reserve(roots.size());
    for (const auto& loc : roots)
        pts.push_back(ExactReal::from_root(loc));
    std::sort(pts.begin(), pts.end(),
              [](const ExactReal& a, const ExactReal& b) { return a.compare(b) < 0; });
    // Refine brackets until strictly separated so every gap has width.
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        while (!(pts[i].upper() < pts[i + 1].lower())) {
            pts[i].refine();
            pts[i + 1].refine();
        }
    }

    // Boundaries 0 = b_0 < r_1 < ... < r_k < b_end = 1 (roots at 0/1 handled
    // as rational roots). Determine the sign of F on every open gap.
    struct Node {
        ExactReal point;
        bool is_root;
    };
    std::vector<Node> nodes;
    bool zero_is_root = !pts.empty() && pts.front().is_rational() && pts.front().rational_value() == 0;
    bool one_is_root = !pts.empty() && pts.back().is_rational() && pts.back().rational_value() == 1;
    if (!zero_is_root)
        nodes.push_back({ExactReal(Rational(0)), false});
    for (auto& p : pts)
        nodes.push_back({std::move(p), true});
    if (!one_is_root)
        nodes.push_back({ExactReal(Rational(1)), false});

    size_t ngaps = nodes.size() - 1;
    std::vector<int> gap_sign(ngaps, 0);
    for (size_t i = 0; i < ngaps; ++i) {
        Rational a = nodes[i].point.upper();
        Rational b = nodes[i + 1].point.lower();
        // F keeps a constant sign on the open gap; any point of [a, b] that is
        // not a root sees that sign (there are no roots in [a, b] beyond the
        // gap's own endpoints).
        Rational sample = (a + b) / 2;
        int sg = upoly::sign_at(F, sample);
        while (sg == 0) {
            sample = (sample + b) / 2;
            sg = upoly::sign_at(F, sample);
        }
        gap_sign[i] = sg;
    }

    // Assemble maximal runs where F <= 0.
    size_t i = 0;
    while (i < ngaps) {
        if (gap_sign[i] < 0) {
            IntervalSet::Component comp;
            comp.lo = nodes[i].point; // root or boundary 0
            size_t j = i;
            comp.strict_gaps.push_back({nodes[j].point, nodes[j + 1].point});
            while (j + 1 < ngaps && gap_sign[j + 1] < 0) {
                ++j;
                comp.strict_gaps.push_back({nodes[j].point, nodes[j + 1].point});
            }
            comp.hi = nodes[j + 1].point;
            comp.degenerate = false;
            s.append_component(std::move(comp));
            i = j + 1;
        } else {
            // Isolated root between two positive gaps -> degenerate component.
            if (nodes[i].is_root && (i == 0 || gap_sign[i - 1] > 0)) {
                IntervalSet::Component comp;
                comp.lo = nodes[i].point;
                comp.hi = nodes[i].point;
                comp.degenerate = true;
                s.append_component(std::move(comp));
            }
            ++i;
        }
    }
    // Trailing root at z=1 (or a root node that ends the chain).
    if (!nodes.empty() && nodes.back().is_root && (ngaps == 0 || gap_sign[ngaps - 1] > 0)) {
        IntervalSet::Component comp;
        comp.lo = nodes.back().point;
        comp.hi = nodes.back().point;
        comp.degenerate = true;
        s.append_component(std::move(comp));
    }
    return s;
}

namespace {

ExactReal rebase_point(const ExactReal& u, unsigned long m) {
    return nth_root(u, m);
}

IntervalSet rebase(const IntervalSet& s, unsigned long L) {
    if (s.root_power() == L)
        return s;
    unsigned long m = L / s.root_power();
    IntervalSet out(L);
    for (const auto& c : s.components()) {
        IntervalSet::Component nc;
        nc.lo = rebase_point(c.lo, m);
        nc.hi = c.degenerate ? nc.lo : rebase_point(c.hi, m);
        nc.degenerate = c.degenerate;
        out.append_component(std::move(nc));
    }
    return out;
}

} // namespace

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    unsigned long L = static_cast<unsigned long>(
        lcm_long(static_cast<long>(a.root_power()), static_cast<long>(b.root_power())));
    IntervalSet ra = rebase(a, L);
    IntervalSet rb = rebase(b, L);
    IntervalSet out(L);
    size_t i = 0, j = 0;
    const auto& ca = ra.components();
    const auto& cb = rb.components();
    while (i < ca.size() && j < cb.size()) {
        const ExactReal& lo = (ca[i].lo.compare(cb[j].lo) >= 0) ? ca[i].lo : cb[j].lo;
        const ExactReal& hi = (ca[i].hi.compare(cb[j].hi) <= 0) ? ca[i].hi : cb[j].hi;
        int c = lo.compare(hi);
        if (c <= 0) {
            IntervalSet::Component nc;
            nc.lo = lo;
            nc.hi = hi;
            nc.degenerate = (c == 0);
            out.append_component(std::move(nc));
        }
        if (ca[i].hi.compare(cb[j].hi) <= 0)
            ++i;
        else
            ++j;
    }
    return out;
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
    if (a.is_empty())
        return true;
    unsigned long L = static_cast<unsigned long>(
        lcm_long(static_cast<long>(a.root_power()), static_cast<long>(b.root_power())));
    IntervalSet ra = rebase(a, L);
    IntervalSet rb = rebase(b, L);
    for (const auto& c : ra.components()) {
        bool covered = false;
        for (const auto& d : rb.components()) {
            if (d.lo.compare(c.lo) <= 0 && c.hi.compare(d.hi) <= 0) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

Rational rational_inside(const ExactReal& lo, const ExactReal& hi, unsigned long q) {
    ExactReal a = lo, b = hi;
    auto inside = [&](const Rational& c) { return a.compare(c) < 0 && b.compare(c) > 0; };
    // Prefer a small power-of-ten grid point of the open gap, nearest its
    // center. Brackets are refined per level so each scan stays short.
    Integer den(1);
    Rational width = Rational(1);
    for (int k = 1; k <= 6; ++k) {
        den *= 10;
        width /= 10;
        a.refine_below(width);
        b.refine_below(width);
        Rational outer_lo = a.lower();
        Rational outer_hi = b.upper();
        Rational center = (outer_lo + outer_hi) / 2;
        Integer n = (outer_lo.get_num() * den) / outer_lo.get_den();
        Rational step = Rational(1) / Rational(den);
        Rational cand = Rational(n) / Rational(den);
        Rational best;
        bool found = false;
        for (; cand <= outer_hi; cand += step) {
            if (inside(cand) && (!found || abs(cand - center) < abs(best - center))) {
                best = cand;
                found = true;
            }
        }
        if (found)
            return pow_rational(best, q);
    }
    // Sub-1e-6 gap: fall back to the simplest fraction in a certified closed
    // rational subinterval.
    while (true) {
        Rational ar = a.is_rational() ? a.rational_value() : a.upper();
        Rational br = b.is_rational() ? b.rational_value() : b.lower();
        if (ar < br) {
            Rational mid_lo = (ar * 2 + br) / 3;
            Rational mid_hi = (ar + br * 2) / 3;
            Rational w = simplest_in_closed(mid_lo, mid_hi);
            if (inside(w))
                return pow_rational(w, q);
        }
        a.refine();
        b.refine();
    }
}

std::optional<Rational> pick_rational_witness(const IntervalSet& s) {
    for (size_t i = 0; i < s.components().size(); ++i) {
        const auto& c = s.components()[i];
        if (c.degenerate)
            continue;
        if (!c.strict_gaps.empty()) {
            const auto& g = c.strict_gaps.front();
            return rational_inside(g.first, g.second, s.root_power());
        }
        return rational_inside(c.lo, c.hi, s.root_power());
    }
    return std::nullopt;
}

} // namespace gsforge
