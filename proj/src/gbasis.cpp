#include "gsforge/gbasis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace gsforge {

MonomialOrder::MonomialOrder(const DegreeFunction& deg) {
    scale_ = deg.denominator_lcm();
    weights_.reserve(deg.size());
    for (const auto& w : deg.weights()) {
        Rational s = w * static_cast<long>(scale_);
        if (s.get_den() != 1 || !s.get_num().fits_slong_p())
            throw ResourceLimitError("scaled weight out of range");
        weights_.push_back(s.get_num().get_si());
    }
}

long MonomialOrder::scaled_degree(const Word& w) const {
    long d = 0;
    for (uint32_t g : w)
        d += weights_.at(g);
    return d;
}

int MonomialOrder::compare(const Word& w1, const Word& w2) const {
    long d1 = scaled_degree(w1), d2 = scaled_degree(w2);
    if (d1 != d2)
        return d1 < d2 ? -1 : 1;
    size_t n = std::min(w1.size(), w2.size());
    for (size_t i = 0; i < n; ++i) {
        if (w1[i] != w2[i])
            return w1[i] < w2[i] ? -1 : 1;
    }
    if (w1.size() != w2.size())
        return w1.size() < w2.size() ? -1 : 1;
    return 0;
}

const Word& MonomialOrder::leading_word(const NcPolynomial& p) const {
    if (p.is_zero())
        throw DomainError("leading_word of zero polynomial");
    const Word* best = nullptr;
    for (const auto& [w, c] : p.terms()) {
        if (!best || compare(w, *best) < 0)
            best = &w;
    }
    return *best;
}

std::vector<Word> TruncatedGroebner::leading_words() const {
    std::vector<Word> ws;
    ws.reserve(elements.size());
    for (const auto& e : elements)
        ws.push_back(e.lead);
    return ws;
}

bool TruncatedGroebner::is_normal(const Word& w) const {
    for (const auto& e : elements)
        if (is_subword(e.lead, w))
            return false;
    return true;
}

namespace {

struct WorkElem {
    NcPolynomial poly;
    Word lead;
    long lead_deg;
};

struct Reducer {
    const MonomialOrder& order;
    long cutoff;
    const std::map<long, WorkElem>* basis;

    // Fully reduce p modulo the live basis, truncating words whose scaled
    // degree exceeds the cutoff. Sets dropped when truncation fired.
    NcPolynomial reduce(NcPolynomial p, bool& dropped) const {
        // Strip over-cutoff words of the input itself.
        {
            NcPolynomial q;
            for (const auto& [w, c] : p.terms()) {
                if (order.scaled_degree(w) <= cutoff)
                    q.add_term(w, c);
                else
                    dropped = true;
            }
            p = std::move(q);
        }
        while (true) {
            // Order-minimal reducible word.
            const Word* target = nullptr;
            const WorkElem* by = nullptr;
            size_t at = 0;
            for (const auto& [w, c] : p.terms()) {
                if (target && order.compare(w, *target) >= 0)
                    continue;
                for (const auto& [id, e] : *basis) {
                    auto pos = find_subword(e.lead, w);
                    if (pos) {
                        target = &w;
                        by = &e;
                        at = *pos;
                        break;
                    }
                }
            }
            if (!target)
                return p;
            Word a(target->begin(), target->begin() + at);
            Word b(target->begin() + at + by->lead.size(), target->end());
            Rational c = p.coeff(*target);
            // p -= c * a * e * b, truncated.
            for (const auto& [w, ec] : by->poly.terms()) {
                Word full = concat(a, concat(w, b));
                if (order.scaled_degree(full) > cutoff) {
                    dropped = true;
                    continue;
                }
                p.add_term(full, -c * ec);
            }
        }
    }
};

struct PairKey {
    long deg;
    Word overlap;
    long id1, id2;
    size_t shift;

    bool operator<(const PairKey& o) const {
        if (deg != o.deg)
            return deg < o.deg;
        if (overlap != o.overlap)
            return overlap < o.overlap;
        if (id1 != o.id1)
            return id1 < o.id1;
        if (id2 != o.id2)
            return id2 < o.id2;
        return shift < o.shift;
    }
};

} // namespace

TruncatedGroebner truncated_groebner(const Presentation& p, const Rational& cutoff,
                                     const GroebnerLimits& limits) {
    MonomialOrder order(p.deg());
    TruncatedGroebner result(order);
    result.cutoff = cutoff;
    Rational scaled = cutoff * static_cast<long>(order.scale());
    Integer fl = scaled.get_num() / scaled.get_den();
    if (!fl.fits_slong_p())
        throw ResourceLimitError("cutoff out of range");
    const long cutS = fl.get_si();
    result.scaled_cutoff = cutS;

    std::map<long, WorkElem> basis;
    long next_id = 0;
    std::set<PairKey> pairs;
    Reducer red{order, cutS, &basis};

    auto queue_overlaps = [&](long id1, long id2) {
        const Word& w1 = basis.at(id1).lead;
        const Word& w2 = basis.at(id2).lead;
        // w2 starts at position s inside w1 and sticks out on the right.
        for (size_t s = 1; s < w1.size(); ++s) {
            size_t olap = w1.size() - s;
            if (olap >= w2.size())
                continue;
            if (!std::equal(w1.begin() + s, w1.end(), w2.begin()))
                continue;
            Word overlap(w1.begin(), w1.begin() + s);
            overlap.insert(overlap.end(), w2.begin(), w2.end());
            long d = order.scaled_degree(overlap);
            if (d > cutS)
                continue;
            pairs.insert(PairKey{d, overlap, id1, id2, s});
        }
    };

    std::deque<NcPolynomial> pending;
    for (const auto& r : p.relations())
        pending.push_back(r);

    auto add_element = [&](NcPolynomial h) {
        bool dropped = false;
        h = red.reduce(std::move(h), dropped);
        if (h.is_zero())
            return;
        Word lead = order.leading_word(h);
        h = h.scaled(1 / h.coeff(lead));
        long lead_deg = order.scaled_degree(lead);

        // Retire basis elements whose lead is divisible by the new lead.
        std::vector<long> retired;
        for (const auto& [id, e] : basis)
            if (is_subword(lead, e.lead))
                retired.push_back(id);
        for (long id : retired) {
            pending.push_back(basis.at(id).poly);
            basis.erase(id);
        }
        if (!retired.empty()) {
            for (auto it = pairs.begin(); it != pairs.end();) {
                bool dead = !basis.count(it->id1) || !basis.count(it->id2);
                it = dead ? pairs.erase(it) : std::next(it);
            }
        }

        long id = next_id++;
        basis.emplace(id, WorkElem{std::move(h), std::move(lead), lead_deg});
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("truncated basis exceeds element limit");
        for (const auto& [oid, e] : basis) {
            queue_overlaps(id, oid);
            if (oid != id)
                queue_overlaps(oid, id);
        }
    };

    while (!pending.empty() || !pairs.empty()) {
        if (!pending.empty()) {
            NcPolynomial q = std::move(pending.front());
            pending.pop_front();
            add_element(std::move(q));
            continue;
        }
        PairKey key = *pairs.begin();
        pairs.erase(pairs.begin());
        auto it1 = basis.find(key.id1);
        auto it2 = basis.find(key.id2);
        if (it1 == basis.end() || it2 == basis.end())
            continue;
        const WorkElem& e1 = it1->second;
        const WorkElem& e2 = it2->second;
        // overlap = a + w2 = w1 + b with a = w1[0..shift).
        Word a(e1.lead.begin(), e1.lead.begin() + key.shift);
        Word b(e2.lead.begin() + (e1.lead.size() - key.shift), e2.lead.end());
        NcPolynomial s = e1.poly * NcPolynomial::monomial(b) -
                         NcPolynomial::monomial(a) * e2.poly;
        if (!s.is_zero())
            add_element(std::move(s));
    }

    // Final tail interreduction.
    std::vector<long> ids;
    for (const auto& [id, e] : basis)
        ids.push_back(id);
    for (long id : ids) {
        WorkElem e = basis.at(id);
        basis.erase(id);
        bool dropped = false;
        NcPolynomial reduced = red.reduce(e.poly, dropped);
        // The lead is normal w.r.t. the others, so it survives.
        basis.emplace(id, WorkElem{std::move(reduced), e.lead, e.lead_deg});
    }

    for (const auto& [id, e] : basis)
        result.elements.push_back({e.poly, e.lead, e.lead_deg});
    std::sort(result.elements.begin(), result.elements.end(),
              [&](const TruncatedGroebner::Element& a, const TruncatedGroebner::Element& b) {
                  return order.compare(a.lead, b.lead) < 0;
              });
    result.complete = true;
    return result;
}

void for_each_normal_word(const TruncatedGroebner& basis,
                          const std::function<void(const Word&, long)>& visit,
                          const GroebnerLimits& limits) {
    struct Walker {
        const TruncatedGroebner& b;
        const std::function<void(const Word&, long)>& visit;
        size_t seen = 0;
        size_t max_words;
        uint32_t ngens;
        Word word;

        void walk(long deg) {
            if (++seen > max_words)
                throw ResourceLimitError("normal word enumeration exceeds limit");
            visit(word, deg);
            for (uint32_t g = 0; g < ngens; ++g) {
                word.push_back(g);
                long nd = deg + b.order.scaled_degree(Word{g});
                if (nd <= b.scaled_cutoff) {
                    // A normal word stays normal unless a leading word ends
                    // the extension.
                    bool ok = true;
                    for (const auto& e : b.elements) {
                        if (is_suffix(e.lead, word)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok)
                        walk(nd);
                }
                word.pop_back();
            }
        }
    };
    Walker w{basis, visit, 0, limits.max_normal_words,
             static_cast<uint32_t>(basis.order.generator_count()), {}};
    w.walk(0);
}

long HilbertTruncation::dimension_at(const Rational& degree) const {
    for (const auto& [d, n] : entries)
        if (d == degree)
            return n;
    return 0;
}

Rational HilbertTruncation::series_value(const Rational& z) const {
    Rational acc(0);
    for (const auto& [d, n] : entries) {
        Rational e = d;
        if (e.get_den() != 1)
            throw InexactEvalError("series_value: fractional degrees need an exact power");
        acc += Rational(n) * pow_rational(z, e.get_num().get_ui());
    }
    return acc;
}

HilbertTruncation hilbert_truncation(const TruncatedGroebner& basis,
                                     const GroebnerLimits& limits) {
    std::map<long, long> counts;
    for_each_normal_word(basis, [&](const Word&, long deg) { ++counts[deg]; }, limits);
    HilbertTruncation h;
    long scale = static_cast<long>(basis.order.scale());
    for (long d = 0; d <= basis.scaled_cutoff; ++d) {
        auto it = counts.find(d);
        long n = it == counts.end() ? 0 : it->second;
        h.entries.emplace_back(frac(d, scale), n);
    }
    return h;
}

HilbertTruncation hilbert_truncation(const Presentation& p, const Rational& cutoff,
                                     const GroebnerLimits& limits) {
    return hilbert_truncation(truncated_groebner(p, cutoff, limits), limits);
}

NcPolynomial normal_form(const TruncatedGroebner& basis, const NcPolynomial& q) {
    if (q.is_zero())
        return q;
    for (const auto& [w, c] : q.terms())
        if (basis.order.scaled_degree(w) > basis.scaled_cutoff)
            throw DomainError("normal_form: input degree exceeds the basis cutoff");
    std::map<long, WorkElem> live;
    long id = 0;
    for (const auto& e : basis.elements)
        live.emplace(id++, WorkElem{e.poly, e.lead, e.lead_scaled_degree});
    Reducer red{basis.order, basis.scaled_cutoff, &live};
    bool dropped = false;
    NcPolynomial r = red.reduce(q, dropped);
    if (dropped)
        throw DomainError("normal_form: reduction needs words above the cutoff");
    return r;
}

namespace {

// Reduction that tolerates truncation, used by the subalgebra check.
NcPolynomial reduce_tolerant(const TruncatedGroebner& basis, const NcPolynomial& q,
                             bool& dropped) {
    std::map<long, WorkElem> live;
    long id = 0;
    for (const auto& e : basis.elements)
        live.emplace(id++, WorkElem{e.poly, e.lead, e.lead_scaled_degree});
    Reducer red{basis.order, basis.scaled_cutoff, &live};
    return red.reduce(q, dropped);
}

} // namespace

FreeSubalgebraResult free_subalgebra_check(const Presentation& p,
                                           const std::vector<NcPolynomial>& subgens,
                                           int maxlen,
                                           const GroebnerLimits& limits) {
    FreeSubalgebraResult res;
    if (subgens.empty() || maxlen < 1)
        throw DomainError("free_subalgebra_check: need generators and maxlen >= 1");
    MonomialOrder order(p.deg());
    long max_deg = 0;
    for (const auto& s : subgens) {
        if (s.is_zero())
            throw DomainError("free_subalgebra_check: zero subalgebra generator");
        for (const auto& [w, c] : s.terms())
            max_deg = std::max(max_deg, order.scaled_degree(w));
    }
    Rational cutoff = frac(max_deg * maxlen, static_cast<long>(order.scale()));

    TruncatedGroebner basis(order);
    try {
        basis = truncated_groebner(p, cutoff, limits);
    } catch (const ResourceLimitError&) {
        res.free = false;
        res.conclusive = false;
        res.dependency = "(basis cutoff exceeds resource limits)";
        return res;
    }

    for (const auto& s : subgens) {
        bool drop = false;
        if (reduce_tolerant(basis, s, drop).is_zero())
            throw DomainError("free_subalgebra_check: a subalgebra generator is zero in the quotient");
    }

    bool any_drop = false;
    // Incremental Gaussian elimination over normal forms, pivot = minimal
    // support word of each stored row. Elimination runs to a fixpoint: each
    // subtraction replaces a pivot by strictly larger words, so it ends.
    std::vector<std::map<Word, Rational>> rows;
    std::map<Word, size_t> pivot_of;
    auto insert_row = [&](NcPolynomial v) -> bool {
        std::map<Word, Rational> r(v.terms().begin(), v.terms().end());
        while (!r.empty()) {
            auto pit = pivot_of.find(r.begin()->first);
            if (pit == pivot_of.end()) {
                // Scan the rest of the support for known pivots.
                bool hit = false;
                for (const auto& [w, c] : r) {
                    auto p2 = pivot_of.find(w);
                    if (p2 != pivot_of.end()) {
                        pit = p2;
                        hit = true;
                        break;
                    }
                }
                if (!hit)
                    break;
            }
            const auto& row = rows[pit->second];
            Rational f = r.at(pit->first);
            for (const auto& [w, c] : row) {
                auto jt = r.find(w);
                if (jt == r.end()) {
                    r.emplace(w, -f * c);
                } else {
                    jt->second -= f * c;
                    if (jt->second == 0)
                        r.erase(jt);
                }
            }
        }
        if (r.empty())
            return false;
        Rational piv = r.begin()->second;
        for (auto& [w, c] : r)
            c /= piv;
        pivot_of.emplace(r.begin()->first, rows.size());
        rows.push_back(std::move(r));
        return true;
    };

    // The empty product maps to 1.
    insert_row(NcPolynomial::monomial(Word{}));

    struct Item {
        NcPolynomial value;
        std::string label;
    };
    std::vector<Item> layer;
    layer.push_back({NcPolynomial::monomial(Word{}), ""});
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Item> next;
        for (const auto& it : layer) {
            for (size_t s = 0; s < subgens.size(); ++s) {
                NcPolynomial prod = it.value * subgens[s];
                bool drop = false;
                NcPolynomial nf = reduce_tolerant(basis, prod, drop);
                any_drop = any_drop || drop;
                std::ostringstream lab;
                if (!it.label.empty())
                    lab << it.label << "*";
                lab << "(" << subgens[s].str(p.gens()) << ")";
                if (!insert_row(nf)) {
                    res.free = false;
                    res.dependency = lab.str();
                    res.conclusive = !any_drop;
                    return res;
                }
                next.push_back({std::move(nf), lab.str()});
            }
        }
        layer = std::move(next);
    }
    res.free = true;
    res.conclusive = true;
    return res;
}

} // namespace gsforge
