#include "gsforge/growth.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gsforge {

size_t UfnGraph::edge_count() const {
    size_t n = 0;
    for (const auto& adj : edges)
        n += adj.size();
    return n;
}

namespace {

bool word_is_normal(const Word& w, const std::vector<Word>& forbidden) {
    for (const auto& f : forbidden)
        if (is_subword(f, w))
            return false;
    return true;
}

// Keep only subword-minimal forbidden words.
std::vector<Word> interreduce_words(std::vector<Word> words) {
    std::sort(words.begin(), words.end(),
              [](const Word& a, const Word& b) { return a.size() < b.size(); });
    std::vector<Word> out;
    for (const auto& w : words) {
        bool redundant = false;
        for (const auto& m : out)
            if (is_subword(m, w)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(w);
    }
    return out;
}

struct DigraphGrowth {
    bool exponential = false;
    int max_cycles = 0; // max distinct cycles along a source-reachable path
};

// Tarjan SCC + condensation DP. sources empty means "all vertices".
DigraphGrowth digraph_growth(const std::vector<std::vector<size_t>>& adj,
                             std::vector<size_t> sources) {
    size_t n = adj.size();
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
    std::vector<bool> onstk(n, false);
    int counter = 0, ncomp = 0;
    std::vector<int> order;
    // Iterative Tarjan.
    for (size_t root = 0; root < n; ++root) {
        if (num[root] != -1)
            continue;
        std::vector<std::pair<size_t, size_t>> frame{{root, 0}};
        while (!frame.empty()) {
            auto& [v, ei] = frame.back();
            if (ei == 0) {
                num[v] = low[v] = counter++;
                stk.push_back(static_cast<int>(v));
                onstk[v] = true;
            }
            if (ei < adj[v].size()) {
                size_t w = adj[v][ei++];
                if (num[w] == -1) {
                    frame.push_back({w, 0});
                } else if (onstk[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        onstk[w] = false;
                        comp[w] = ncomp;
                        if (w == static_cast<int>(v))
                            break;
                    }
                    ++ncomp;
                }
                size_t vv = v;
                frame.pop_back();
                if (!frame.empty())
                    low[frame.back().first] = std::min(low[frame.back().first], low[vv]);
            }
        }
    }

    std::vector<size_t> comp_size(ncomp, 0), comp_edges(ncomp, 0);
    for (size_t v = 0; v < n; ++v) {
        ++comp_size[comp[v]];
        for (size_t w : adj[v])
            if (comp[w] == comp[v])
                ++comp_edges[comp[v]];
    }
    std::vector<bool> cyclic(ncomp, false);
    for (int c = 0; c < ncomp; ++c)
        cyclic[c] = comp_edges[c] >= 1; // any internal edge closes a cycle

    // Reachability from sources (component level).
    std::vector<std::vector<size_t>> cadj(ncomp);
    for (size_t v = 0; v < n; ++v)
        for (size_t w : adj[v])
            if (comp[v] != comp[w])
                cadj[comp[v]].push_back(comp[w]);
    std::vector<bool> reach(ncomp, false);
    std::vector<size_t> todo;
    if (sources.empty()) {
        for (int c = 0; c < ncomp; ++c)
            reach[c] = true;
    } else {
        for (size_t s : sources)
            if (!reach[comp[s]]) {
                reach[comp[s]] = true;
                todo.push_back(comp[s]);
            }
        while (!todo.empty()) {
            size_t c = todo.back();
            todo.pop_back();
            for (size_t d : cadj[c])
                if (!reach[d]) {
                    reach[d] = true;
                    todo.push_back(d);
                }
        }
    }

    DigraphGrowth res;
    for (int c = 0; c < ncomp; ++c) {
        if (reach[c] && comp_edges[c] > comp_size[c]) {
            res.exponential = true;
            return res;
        }
    }
    // Longest chain of cyclic components (Tarjan numbers components in
    // reverse topological order, so process ascending component ids).
    std::vector<int> best(ncomp, 0);
    for (int c = 0; c < ncomp; ++c) {
        int down = 0;
        for (size_t d : cadj[c])
            down = std::max(down, best[d]);
        best[c] = down + (cyclic[c] ? 1 : 0);
    }
    for (int c = 0; c < ncomp; ++c)
        if (reach[c])
            res.max_cycles = std::max(res.max_cycles, best[c]);
    return res;
}

GrowthResult classify_digraph(const std::vector<std::vector<size_t>>& adj,
                              std::vector<size_t> sources) {
    DigraphGrowth g = digraph_growth(adj, std::move(sources));
    GrowthResult r;
    if (g.exponential) {
        r.exponential = true;
        return r;
    }
    if (g.max_cycles == 0) {
        r.finite_dimensional = true;
        r.degree = 0;
        return r;
    }
    r.degree = g.max_cycles - 1;
    return r;
}

} // namespace

UfnGraph build_ufn_graph(size_t ngens, const std::vector<Word>& forbidden_in) {
    std::vector<Word> forbidden = interreduce_words(forbidden_in);
    size_t d = 1;
    for (const auto& w : forbidden)
        d = std::max(d, w.size());
    UfnGraph g;
    g.window = d - 1;
    if (g.window > 24)
        throw ResourceLimitError("Ufnarovski window too long");

    // Enumerate normal words of length d-1.
    std::vector<Word> vertices;
    Word cur;
    std::function<void()> gen = [&]() {
        if (cur.size() == g.window) {
            vertices.push_back(cur);
            return;
        }
        for (uint32_t x = 0; x < ngens; ++x) {
            cur.push_back(x);
            if (word_is_normal(cur, forbidden))
                gen();
            cur.pop_back();
            if (vertices.size() > 500000)
                throw ResourceLimitError("Ufnarovski graph too large");
        }
    };
    if (g.window == 0) {
        vertices.push_back(Word{});
    } else {
        gen();
    }

    std::map<Word, size_t> index;
    for (size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = i;
    g.vertices = vertices;
    g.edges.assign(vertices.size(), {});
    for (size_t i = 0; i < vertices.size(); ++i) {
        const Word& u = vertices[i];
        for (uint32_t x = 0; x < ngens; ++x) {
            Word glue = u;
            glue.push_back(x); // length d word
            if (!word_is_normal(glue, forbidden))
                continue;
            Word v(glue.begin() + 1, glue.end());
            auto it = index.find(v);
            if (it != index.end())
                g.edges[i].push_back(it->second);
        }
    }
    return g;
}

GrowthResult classify_growth(const Presentation& p, const GroebnerLimits& limits) {
    bool monomial = true;
    for (const auto& r : p.relations())
        if (r.term_count() != 1)
            monomial = false;

    std::vector<Word> forbidden;
    GrowthResult pre;
    if (monomial) {
        for (const auto& r : p.relations())
            forbidden.push_back(r.terms().begin()->first);
    } else {
        // Classify the leading-word algebra from a truncated basis.
        MonomialOrder order(p.deg());
        long maxdeg = 0;
        for (const auto& r : p.relations())
            maxdeg = std::max(maxdeg, order.scaled_degree(order.leading_word(r)));
        long cutS = std::max(4 * maxdeg, static_cast<long>(8 * order.scale()));
        TruncatedGroebner basis =
            truncated_groebner(p, frac(cutS, static_cast<long>(order.scale())), limits);
        forbidden = basis.leading_words();
        pre.associated_graded = true;
        // The truncation is global exactly when no composition sticks out.
        bool global = true;
        for (const auto& e1 : basis.elements) {
            for (const auto& e2 : basis.elements) {
                const Word& w1 = e1.lead;
                const Word& w2 = e2.lead;
                for (size_t s = 1; s < w1.size(); ++s) {
                    size_t olap = w1.size() - s;
                    if (olap >= w2.size())
                        continue;
                    if (!std::equal(w1.begin() + s, w1.end(), w2.begin()))
                        continue;
                    Word overlap(w1.begin(), w1.begin() + s);
                    overlap.insert(overlap.end(), w2.begin(), w2.end());
                    if (order.scaled_degree(overlap) > basis.scaled_cutoff)
                        global = false;
                }
            }
        }
        if (!global)
            pre.note = "leading words truncated at degree " + rational_str(basis.cutoff) +
                       "; classification applies to that approximation";
        else
            pre.note = "associated graded algebra";
    }

    UfnGraph g = build_ufn_graph(p.gens().size(), forbidden);
    GrowthResult r = classify_digraph(g.edges, {});
    r.associated_graded = pre.associated_graded;
    r.note = pre.note;
    return r;
}

GrowthResult classify_growth_monomial(size_t ngens, const std::vector<Word>& forbidden,
                                      const std::vector<FamilyWordPattern>& families) {
    if (families.empty()) {
        UfnGraph g = build_ufn_graph(ngens, forbidden);
        return classify_digraph(g.edges, {});
    }
    AvoidAutomaton dfa = build_avoid_automaton(ngens, forbidden, families);
    std::vector<std::vector<size_t>> adj(dfa.state_count());
    for (size_t s = 0; s < dfa.state_count(); ++s)
        for (size_t g = 0; g < dfa.ngens; ++g)
            if (dfa.next[s][g] != AvoidAutomaton::npos)
                adj[s].push_back(dfa.next[s][g]);
    return classify_digraph(adj, {dfa.start});
}

StandardSeries standard_hilbert(const Presentation& p, int maxlen,
                                const GroebnerLimits& limits) {
    std::vector<Rational> ones(p.gens().size(), Rational(1));
    Presentation std_graded(p.gens(), DegreeFunction(ones), p.relations());
    HilbertTruncation h = hilbert_truncation(std_graded, Rational(maxlen), limits);
    StandardSeries s;
    s.h.assign(maxlen + 1, 0);
    for (const auto& [deg, dim] : h.entries) {
        if (deg.get_den() == 1) {
            long n = deg.get_num().get_si();
            if (n >= 0 && n <= maxlen)
                s.h[n] = dim;
        }
    }
    return s;
}

RescalingReport verify_degree_rescaling(const Presentation& p, int cutoff,
                                        const GroebnerLimits& limits) {
    MonomialOrder order(p.deg());
    long dmin = 0, dmax = 0;
    for (uint32_t g = 0; g < p.gens().size(); ++g) {
        long w = order.scaled_degree(Word{g});
        dmin = dmin == 0 ? w : std::min(dmin, w);
        dmax = std::max(dmax, w);
    }

    RescalingReport rep;
    rep.min_weight = dmin;
    rep.max_weight = dmax;

    // Weighted layer dimensions up to scaled degree cutoff*dmin.
    Rational wcut = frac(cutoff * dmin, static_cast<long>(order.scale()));
    HilbertTruncation wh = hilbert_truncation(p, wcut, limits);
    StandardSeries st = standard_hilbert(p, cutoff, limits);

    // Partial sums: weighted dim(A / A_{> n*dmin}) vs standard cumulative h_n.
    std::map<long, long> wdims;
    for (const auto& [deg, dim] : wh.entries) {
        Rational s = deg * static_cast<long>(order.scale());
        wdims[s.get_num().get_si()] = dim;
    }
    Rational std_acc(0);
    long wpos = 0;
    Rational wacc(0);
    for (int n = 0; n <= cutoff; ++n) {
        while (wpos <= static_cast<long>(n) * dmin) {
            auto it = wdims.find(wpos);
            if (it != wdims.end())
                wacc += it->second;
            ++wpos;
        }
        std_acc += st.h[n];
        rep.rows.emplace_back(wacc, std_acc);
        if (wacc > std_acc && rep.first_violation < 0) {
            rep.holds = false;
            rep.first_violation = n;
        }
    }
    return rep;
}

} // namespace gsforge
