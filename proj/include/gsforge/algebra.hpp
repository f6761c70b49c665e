#ifndef GSFORGE_ALGEBRA_HPP
#define GSFORGE_ALGEBRA_HPP

#include "gsforge/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gsforge {

/// Ordered set of distinct generator names. The order is fixed and used for
/// monomial-order tie-breaking.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(uint32_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<uint32_t> index_of(const std::string& name) const;

    bool operator==(const GeneratorSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

/// Strictly positive rational weight per generator.
class DegreeFunction {
public:
    DegreeFunction() = default;
    explicit DegreeFunction(std::vector<Rational> weights);

    size_t size() const { return weights_.size(); }
    const Rational& weight(uint32_t i) const { return weights_.at(i); }
    const std::vector<Rational>& weights() const { return weights_; }

    /// lcm of the weight denominators: the exponent lattice of all series
    /// derived from this degree function.
    unsigned long denominator_lcm() const;

    bool operator==(const DegreeFunction& other) const { return weights_ == other.weights_; }

private:
    std::vector<Rational> weights_;
};

/// A word in the free monoid on the generators; empty = identity.
using Word = std::vector<uint32_t>;

Word concat(const Word& a, const Word& b);
bool is_subword(const Word& needle, const Word& hay);
/// First position where needle occurs as a factor of hay, or nullopt.
std::optional<size_t> find_subword(const Word& needle, const Word& hay);
bool is_suffix(const Word& needle, const Word& hay);

Rational word_degree(const Word& w, const DegreeFunction& d);

/// Noncommutative polynomial over Q: finitely many words with nonzero
/// rational coefficients, canonically ordered.
class NcPolynomial {
public:
    NcPolynomial() = default;
    static NcPolynomial monomial(Word w, Rational c = Rational(1));

    void add_term(const Word& w, const Rational& c);

    NcPolynomial operator+(const NcPolynomial& other) const;
    NcPolynomial operator-(const NcPolynomial& other) const;
    NcPolynomial operator*(const NcPolynomial& other) const;
    NcPolynomial scaled(const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rational>& terms() const { return terms_; }
    Rational coeff(const Word& w) const;

    bool mentions(uint32_t gen) const;

    bool operator==(const NcPolynomial& other) const { return terms_ == other.terms_; }

    std::string str(const GeneratorSet& gens) const;

private:
    std::map<Word, Rational> terms_;
};

/// Filtration degree: min word degree over the support; +infinity (nullopt)
/// for the zero polynomial.
std::optional<Rational> poly_degree(const NcPolynomial& p, const DegreeFunction& d);

/// A finitely presented algebra: generators, weights, defining relations.
/// Relations are nonzero with strictly positive degree.
class Presentation {
public:
    Presentation(GeneratorSet gens, DegreeFunction deg, std::vector<NcPolynomial> relations);

    const GeneratorSet& gens() const { return gens_; }
    const DegreeFunction& deg() const { return deg_; }
    const std::vector<NcPolynomial>& relations() const { return relations_; }

    std::string str() const;

private:
    GeneratorSet gens_;
    DegreeFunction deg_;
    std::vector<NcPolynomial> relations_;
};

/// Restrict the relation list to the given indices (same generators/degrees).
Presentation drop_relations(const Presentation& p, const std::vector<size_t>& keep);

/// Remove generator x using a relation of the shape x - f_x where f_x avoids
/// x; every other relation must already avoid x. Throws DomainError when the
/// shape or the avoidance condition fails.
Presentation eliminate_generator(const Presentation& p, uint32_t gen, size_t relation_index);

/// Convenience word/presentation builders used by tests and the corpus.
Word make_word(std::initializer_list<uint32_t> letters);

} // namespace gsforge

#endif
