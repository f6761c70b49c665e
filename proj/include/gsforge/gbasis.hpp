#ifndef GSFORGE_GBASIS_HPP
#define GSFORGE_GBASIS_HPP

#include "gsforge/algebra.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gsforge {

/// Word order: weighted degree first (weights scaled to integers), then
/// left-lexicographic on generator order. Total, multiplication-compatible,
/// and the empty word is minimal. The leading word of a polynomial is the
/// minimal word of its support (lowest filtration layer).
class MonomialOrder {
public:
    explicit MonomialOrder(const DegreeFunction& deg);

    long scaled_degree(const Word& w) const;
    unsigned long scale() const { return scale_; }
    size_t generator_count() const { return weights_.size(); }

    /// -1 / 0 / +1 for w1 <, =, > w2.
    int compare(const Word& w1, const Word& w2) const;

    const Word& leading_word(const NcPolynomial& p) const;

private:
    std::vector<long> weights_;
    unsigned long scale_;
};

struct GroebnerLimits {
    size_t max_basis = 20000;
    size_t max_normal_words = 5000000;
};

/// A reduced, degree-truncated two-sided Groebner basis: leading words form a
/// subword-antichain, tails are fully reduced, and every composition with
/// overlap degree at or below the cutoff has been resolved.
class TruncatedGroebner {
public:
    struct Element {
        NcPolynomial poly; // monic: leading coefficient 1
        Word lead;
        long lead_scaled_degree;
    };

    Rational cutoff;
    long scaled_cutoff = 0;
    MonomialOrder order;
    std::vector<Element> elements; // sorted by (lead degree, lead word)
    bool complete = true;

    explicit TruncatedGroebner(MonomialOrder ord) : order(std::move(ord)) {}

    std::vector<Word> leading_words() const;
    /// True when no leading word occurs as a factor of w.
    bool is_normal(const Word& w) const;
};

TruncatedGroebner truncated_groebner(const Presentation& p, const Rational& cutoff,
                                     const GroebnerLimits& limits = {});

/// Per-degree dimensions of the associated graded algebra, degree 0..cutoff
/// on the weight lattice (zero dimensions included).
struct HilbertTruncation {
    std::vector<std::pair<Rational, long>> entries;

    long dimension_at(const Rational& degree) const;
    Rational series_value(const Rational& z) const; // sum dim * z^degree, exact
};

HilbertTruncation hilbert_truncation(const Presentation& p, const Rational& cutoff,
                                     const GroebnerLimits& limits = {});
HilbertTruncation hilbert_truncation(const TruncatedGroebner& basis,
                                     const GroebnerLimits& limits = {});

/// Walk all normal words of scaled degree <= the basis cutoff.
void for_each_normal_word(const TruncatedGroebner& basis,
                          const std::function<void(const Word&, long)>& visit,
                          const GroebnerLimits& limits = {});

/// Fully reduced representative of q modulo the truncated basis. Throws
/// DomainError when the input degree exceeds the cutoff or when reduction
/// would need words above the cutoff.
NcPolynomial normal_form(const TruncatedGroebner& basis, const NcPolynomial& q);

struct FreeSubalgebraResult {
    bool free = false;
    bool conclusive = true;
    std::string dependency; // first dependent formal word, if any
};

/// Checks whether formal words of length <= maxlen in the given subalgebra
/// generators stay linearly independent in the quotient (exact rational
/// linear algebra on normal forms).
FreeSubalgebraResult free_subalgebra_check(const Presentation& p,
                                           const std::vector<NcPolynomial>& subgens,
                                           int maxlen,
                                           const GroebnerLimits& limits = {});

} // namespace gsforge

#endif
