// Test-side oracles, independent of the library's enumeration and reduction
// machinery: plain exhaustive generation with naive subword scans.
#ifndef GSFORGE_TESTS_ORACLES_HPP
#define GSFORGE_TESTS_ORACLES_HPP

#include "gsforge/algebra.hpp"

#include <map>
#include <vector>

namespace gsforge::oracles {

inline bool contains_factor(const Word& hay, const Word& needle) {
    if (needle.empty() || needle.size() > hay.size())
        return needle.empty();
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
        bool hit = true;
        for (size_t j = 0; j < needle.size(); ++j)
            if (hay[i + j] != needle[j]) {
                hit = false;
                break;
            }
        if (hit)
            return true;
    }
    return false;
}

/// Counts of words avoiding every forbidden factor, keyed by scaled degree.
/// Pure breadth-first generation over all words (no suffix tricks).
inline std::map<long, long> count_avoiding(size_t ngens, const std::vector<Word>& forbidden,
                                           const std::vector<long>& weights, long cutoff) {
    std::map<long, long> counts;
    std::vector<Word> layer{Word{}};
    counts[0] = 1;
    while (!layer.empty()) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (uint32_t g = 0; g < ngens; ++g) {
                Word e = w;
                e.push_back(g);
                long d = 0;
                for (uint32_t x : e)
                    d += weights[x];
                if (d > cutoff)
                    continue;
                bool bad = false;
                for (const auto& f : forbidden)
                    if (contains_factor(e, f)) {
                        bad = true;
                        break;
                    }
                if (bad)
                    continue;
                ++counts[d];
                next.push_back(std::move(e));
            }
        }
        layer = std::move(next);
    }
    return counts;
}

} // namespace gsforge::oracles

#endif
