#ifndef GSFORGE_PATTERN_HPP
#define GSFORGE_PATTERN_HPP

#include "gsforge/algebra.hpp"

#include <optional>
#include <vector>

namespace gsforge {

/// A one-parameter family of forbidden words: prefix * g^t * suffix for
/// t running from t_start to t_end (unbounded when t_end is absent).
struct FamilyWordPattern {
    Word prefix;
    uint32_t repeated_gen = 0;
    Word suffix;
    long t_start = 0;
    std::optional<long> t_end;

    Word instantiate(long t) const;
};

/// Does any family instance (any admissible t) occur as a factor of w?
bool pattern_occurs(const FamilyWordPattern& pat, const Word& w);
/// Does any family instance end exactly at the end of w?
bool pattern_is_suffix(const FamilyWordPattern& pat, const Word& w);

/// Deterministic automaton for words avoiding a set of finite forbidden words
/// and forbidden pattern families. States are subset-constructed; counting
/// paths from the start state counts normal words exactly.
struct AvoidAutomaton {
    size_t ngens = 0;
    size_t start = 0;
    // next[state][letter] -> state, or npos when the extension is forbidden.
    static constexpr size_t npos = static_cast<size_t>(-1);
    std::vector<std::vector<size_t>> next;

    size_t state_count() const { return next.size(); }

    /// Number of accepted words per length 0..maxlen (exact big integers).
    std::vector<Integer> count_words(int maxlen) const;
};

AvoidAutomaton build_avoid_automaton(size_t ngens, const std::vector<Word>& forbidden,
                                     const std::vector<FamilyWordPattern>& families);

} // namespace gsforge

#endif
