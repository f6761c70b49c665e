#ifndef GSFORGE_GROWTH_HPP
#define GSFORGE_GROWTH_HPP

#include "gsforge/gbasis.hpp"
#include "gsforge/pattern.hpp"

#include <string>
#include <vector>

namespace gsforge {

/// Overlap graph on normal words of length d-1 (d = longest forbidden word):
/// an edge u -> v exists when u and v overlap in d-2 letters and the glued
/// length-d word avoids every forbidden word.
struct UfnGraph {
    std::vector<Word> vertices;
    std::vector<std::vector<size_t>> edges; // adjacency by vertex index
    size_t window = 0;                      // d-1

    size_t vertex_count() const { return vertices.size(); }
    size_t edge_count() const;
};

UfnGraph build_ufn_graph(size_t ngens, const std::vector<Word>& forbidden);

struct GrowthResult {
    bool exponential = false;
    /// For polynomial growth: dim A_n = Theta(n^degree).
    int degree = 0;
    bool finite_dimensional = false;
    /// Set when the classification concerns the leading-word algebra of a
    /// non-monomial presentation.
    bool associated_graded = false;
    std::string note;
};

/// Growth classification of a monomial algebra via its overlap graph:
/// exponential iff two distinct cycles share a vertex; otherwise polynomial
/// with per-degree exponent = (max distinct cycles along a path) - 1.
GrowthResult classify_growth(const Presentation& p, const GroebnerLimits& limits = {});

/// Pattern-aware variant for family-closed monomial sets (direct limits).
GrowthResult classify_growth_monomial(size_t ngens, const std::vector<Word>& forbidden,
                                      const std::vector<FamilyWordPattern>& families);

/// Dimensions of the length filtration: h_n = number of normal words of
/// length exactly n, for the presentation re-graded with all weights 1.
struct StandardSeries {
    std::vector<long> h; // h[0..maxlen]
};

StandardSeries standard_hilbert(const Presentation& p, int maxlen,
                                const GroebnerLimits& limits = {});

/// Coefficient check tying the weighted Hilbert series to the standard one:
/// partial sums of weighted layer dimensions up to n*d (d = least generator
/// weight) never exceed the cumulative standard dimensions at length n.
struct RescalingReport {
    bool holds = true;
    int first_violation = -1;
    long min_weight = 0; // scaled least generator degree
    long max_weight = 0;
    std::vector<std::pair<Rational, Rational>> rows; // (weighted partial sum, standard cumulative)
};

RescalingReport verify_degree_rescaling(const Presentation& p, int cutoff,
                                        const GroebnerLimits& limits = {});

} // namespace gsforge

#endif
