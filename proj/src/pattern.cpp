#include "gsforge/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsforge {

Word FamilyWordPattern::instantiate(long t) const {
    if (t < t_start || (t_end && t > *t_end))
        throw DomainError("family parameter out of range");
    Word w = prefix;
    for (long i = 0; i < t; ++i)
        w.push_back(repeated_gen);
    w.insert(w.end(), suffix.begin(), suffix.end());
    return w;
}

namespace {

// Instance ending at position end (exclusive) of w, for some admissible t.
bool pattern_ends_at(const FamilyWordPattern& pat, const Word& w, size_t end) {
    size_t fixed = pat.prefix.size() + pat.suffix.size();
    if (end < fixed)
        return false;
    // suffix must end at `end`.
    for (size_t i = 0; i < pat.suffix.size(); ++i)
        if (w[end - pat.suffix.size() + i] != pat.suffix[i])
            return false;
    size_t run_end = end - pat.suffix.size();
    long tmax = static_cast<long>(run_end) - static_cast<long>(pat.prefix.size());
    for (long t = pat.t_start; t <= tmax; ++t) {
        if (pat.t_end && t > *pat.t_end)
            break;
        size_t pos = run_end - static_cast<size_t>(t);
        bool ok = true;
        for (size_t i = 0; i < static_cast<size_t>(t); ++i)
            if (w[pos + i] != pat.repeated_gen) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (pos < pat.prefix.size())
            continue;
        size_t pstart = pos - pat.prefix.size();
        bool pm = true;
        for (size_t i = 0; i < pat.prefix.size(); ++i)
            if (w[pstart + i] != pat.prefix[i]) {
                pm = false;
                break;
            }
        if (pm)
            return true;
    }
    return false;
}

} // namespace

bool pattern_is_suffix(const FamilyWordPattern& pat, const Word& w) {
    return pattern_ends_at(pat, w, w.size());
}

bool pattern_occurs(const FamilyWordPattern& pat, const Word& w) {
    for (size_t end = 0; end <= w.size(); ++end)
        if (pattern_ends_at(pat, w, end))
            return true;
    return false;
}

namespace {

// NFA for "contains a forbidden factor": state 0 loops on everything; word
// chains and family chains advance; reaching an accepting state is absorbing.
struct Nfa {
    struct State {
        // letter -> successor states
        std::vector<std::vector<size_t>> moves;
        bool accept = false;
    };
    std::vector<State> states;
    size_t ngens;

    size_t add() {
        states.push_back(State{std::vector<std::vector<size_t>>(ngens), false});
        return states.size() - 1;
    }
};

} // namespace

AvoidAutomaton build_avoid_automaton(size_t ngens, const std::vector<Word>& forbidden,
                                     const std::vector<FamilyWordPattern>& families) {
    Nfa nfa;
    nfa.ngens = ngens;
    size_t q0 = nfa.add();
    for (size_t g = 0; g < ngens; ++g)
        nfa.states[q0].moves[g].push_back(q0);
    size_t sink = nfa.add();
    nfa.states[sink].accept = true;
    for (size_t g = 0; g < ngens; ++g)
        nfa.states[sink].moves[g].push_back(sink);

    auto chain = [&](const Word& w, size_t from) -> size_t {
        size_t cur = from;
        for (size_t i = 0; i < w.size(); ++i) {
            size_t nxt = (i + 1 == w.size()) ? sink : nfa.add();
            nfa.states[cur].moves[w[i]].push_back(nxt);
            cur = nxt;
        }
        return cur;
    };

    for (const auto& w : forbidden) {
        if (w.empty())
            throw DomainError("empty forbidden word");
        chain(w, q0);
    }
    for (const auto& f : families) {
        if (f.t_end) {
            // Bounded families expand to finitely many words.
            for (long t = f.t_start; t <= *f.t_end; ++t)
                chain(f.instantiate(t), q0);
            continue;
        }
        if (f.suffix.empty() || f.prefix.empty()) {
            // Every longer instance contains the shortest one as a factor,
            // so the whole unbounded family forbids exactly that word.
            chain(f.instantiate(f.t_start), q0);
            continue;
        }
        // prefix . g^{t_start} . g* . suffix
        size_t cur = q0;
        for (uint32_t g : f.prefix) {
            size_t nxt = nfa.add();
            nfa.states[cur].moves[g].push_back(nxt);
            cur = nxt;
        }
        for (long i = 0; i < f.t_start; ++i) {
            size_t nxt = nfa.add();
            nfa.states[cur].moves[f.repeated_gen].push_back(nxt);
            cur = nxt;
        }
        nfa.states[cur].moves[f.repeated_gen].push_back(cur); // g*
        chain(f.suffix, cur);
    }

    // Subset construction, keeping only non-accepting subsets.
    AvoidAutomaton dfa;
    dfa.ngens = ngens;
    std::map<std::set<size_t>, size_t> ids;
    std::vector<std::set<size_t>> subsets;
    std::set<size_t> start{q0};
    ids[start] = 0;
    subsets.push_back(start);
    dfa.next.emplace_back(ngens, AvoidAutomaton::npos);
    dfa.start = 0;
    for (size_t i = 0; i < subsets.size(); ++i) {
        for (size_t g = 0; g < ngens; ++g) {
            std::set<size_t> tgt;
            bool dead = false;
            for (size_t s : subsets[i]) {
                for (size_t t : nfa.states[s].moves[g]) {
                    if (nfa.states[t].accept) {
                        dead = true;
                        break;
                    }
                    tgt.insert(t);
                }
                if (dead)
                    break;
            }
            if (dead)
                continue; // extension contains a forbidden factor
            auto it = ids.find(tgt);
            size_t id;
            if (it == ids.end()) {
                id = subsets.size();
                ids[tgt] = id;
                subsets.push_back(tgt);
                dfa.next.emplace_back(ngens, AvoidAutomaton::npos);
                if (subsets.size() > 200000)
                    throw ResourceLimitError("avoid-automaton subset construction too large");
            } else {
                id = it->second;
            }
            dfa.next[i][g] = id;
        }
    }
    return dfa;
}

std::vector<Integer> AvoidAutomaton::count_words(int maxlen) const {
    std::vector<Integer> out;
    std::vector<Integer> cur(state_count(), Integer(0));
    cur[start] = 1;
    for (int len = 0; len <= maxlen; ++len) {
        Integer total(0);
        for (const auto& v : cur)
            total += v;
        out.push_back(total);
        if (len == maxlen)
            break;
        std::vector<Integer> nxt(state_count(), Integer(0));
        for (size_t s = 0; s < state_count(); ++s) {
            if (cur[s] == 0)
                continue;
            for (size_t g = 0; g < ngens; ++g) {
                size_t t = next[s][g];
                if (t != npos)
                    nxt[t] += cur[s];
            }
        }
        cur = std::move(nxt);
    }
    return out;
}

} // namespace gsforge
