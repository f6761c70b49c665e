#include "gsforge/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gsforge {

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw DomainError("generator set must be nonempty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw DomainError("empty generator name");
        if (!seen.insert(n).second)
            throw DomainError("duplicate generator name: " + n);
    }
}

std::optional<uint32_t> GeneratorSet::index_of(const std::string& name) const {
    for (uint32_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

DegreeFunction::DegreeFunction(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (const auto& w : weights_)
        if (w <= 0)
            throw DomainError("generator weights must be strictly positive");
}

unsigned long DegreeFunction::denominator_lcm() const {
    Integer l(1);
    for (const auto& w : weights_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den().get_mpz_t());
    if (!l.fits_ulong_p())
        throw ResourceLimitError("weight denominator lcm overflow");
    return l.get_ui();
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::optional<size_t> find_subword(const Word& needle, const Word& hay) {
    if (needle.empty())
        return 0;
    if (needle.size() > hay.size())
        return std::nullopt;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), hay.begin() + i))
            return i;
    }
    return std::nullopt;
}

bool is_subword(const Word& needle, const Word& hay) {
    return find_subword(needle, hay).has_value();
}

bool is_suffix(const Word& needle, const Word& hay) {
    if (needle.size() > hay.size())
        return false;
    return std::equal(needle.rbegin(), needle.rend(), hay.rbegin());
}

Rational word_degree(const Word& w, const DegreeFunction& d) {
    Rational sum(0);
    for (uint32_t g : w)
        sum += d.weight(g);
    return sum;
}

NcPolynomial NcPolynomial::monomial(Word w, Rational c) {
    NcPolynomial p;
    p.add_term(w, c);
    return p;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& other) const {
    NcPolynomial r = *this;
    for (const auto& [w, c] : other.terms_)
        r.add_term(w, c);
    return r;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& other) const {
    NcPolynomial r = *this;
    for (const auto& [w, c] : other.terms_)
        r.add_term(w, -c);
    return r;
}

NcPolynomial NcPolynomial::operator*(const NcPolynomial& other) const {
    NcPolynomial r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : other.terms_)
            r.add_term(concat(w1, w2), c1 * c2);
    return r;
}

NcPolynomial NcPolynomial::scaled(const Rational& c) const {
    NcPolynomial r;
    if (c == 0)
        return r;
    for (const auto& [w, co] : terms_)
        r.add_term(w, co * c);
    return r;
}

Rational NcPolynomial::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool NcPolynomial::mentions(uint32_t gen) const {
    for (const auto& [w, c] : terms_)
        for (uint32_t g : w)
            if (g == gen)
                return true;
    return false;
}

std::string NcPolynomial::str(const GeneratorSet& gens) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (w.empty()) {
            os << rational_str(a);
            continue;
        }
        if (a != 1)
            os << rational_str(a) << "*";
        // Run-length encode powers.
        size_t i = 0;
        bool first_factor = true;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i])
                ++j;
            if (!first_factor)
                os << "*";
            first_factor = false;
            os << gens.name(w[i]);
            if (j - i > 1)
                os << "^" << (j - i);
            i = j;
        }
    }
    return os.str();
}

std::optional<Rational> poly_degree(const NcPolynomial& p, const DegreeFunction& d) {
    if (p.is_zero())
        return std::nullopt;
    std::optional<Rational> best;
    for (const auto& [w, c] : p.terms()) {
        Rational deg = word_degree(w, d);
        if (!best || deg < *best)
            best = deg;
    }
    return best;
}

Presentation::Presentation(GeneratorSet gens, DegreeFunction deg,
                           std::vector<NcPolynomial> relations)
    : gens_(std::move(gens)), deg_(std::move(deg)), relations_(std::move(relations)) {
    if (deg_.size() != gens_.size())
        throw DomainError("degree function size does not match generator count");
    for (const auto& r : relations_) {
        if (r.is_zero())
            throw DomainError("zero relation");
        for (const auto& [w, c] : r.terms())
            for (uint32_t g : w)
                if (g >= gens_.size())
                    throw DomainError("relation mentions an unknown generator index");
        auto deg = poly_degree(r, deg_);
        if (*deg <= 0)
            throw DomainError("relation with nonpositive degree (constant term)");
    }
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            os << ",";
        os << gens_.name(static_cast<uint32_t>(i)) << "=" << rational_str(deg_.weight(static_cast<uint32_t>(i)));
    }
    os << " | ";
    for (size_t i = 0; i < relations_.size(); ++i) {
        if (i)
            os << ", ";
        os << relations_[i].str(gens_);
    }
    os << ">";
    return os.str();
}

Presentation drop_relations(const Presentation& p, const std::vector<size_t>& keep) {
    std::vector<NcPolynomial> rels;
    rels.reserve(keep.size());
    for (size_t i : keep)
        rels.push_back(p.relations().at(i));
    return Presentation(p.gens(), p.deg(), std::move(rels));
}

Presentation eliminate_generator(const Presentation& p, uint32_t gen, size_t relation_index) {
    if (gen >= p.gens().size())
        throw DomainError("eliminate_generator: no such generator");
    const NcPolynomial& r = p.relations().at(relation_index);

    // The relation must be c*x + (terms avoiding x); normalize to x - f_x.
    Word xword{gen};
    Rational c = r.coeff(xword);
    if (c == 0)
        throw DomainError("eliminate_generator: relation has no bare generator term");
    NcPolynomial rest = r - NcPolynomial::monomial(xword, c);
    if (rest.mentions(gen))
        throw DomainError("eliminate_generator: substituted part mentions the generator");
    for (size_t i = 0; i < p.relations().size(); ++i) {
        if (i == relation_index)
            continue;
        if (p.relations()[i].mentions(gen))
            throw DomainError("eliminate_generator: another relation mentions the generator");
    }

    // Re-index the remaining generators.
    std::vector<std::string> names;
    std::vector<Rational> weights;
    std::vector<uint32_t> remap(p.gens().size(), 0);
    for (uint32_t i = 0; i < p.gens().size(); ++i) {
        if (i == gen)
            continue;
        remap[i] = static_cast<uint32_t>(names.size());
        names.push_back(p.gens().name(i));
        weights.push_back(p.deg().weight(i));
    }
    std::vector<NcPolynomial> rels;
    for (size_t i = 0; i < p.relations().size(); ++i) {
        if (i == relation_index)
            continue;
        NcPolynomial q;
        for (const auto& [w, co] : p.relations()[i].terms()) {
            Word nw;
            nw.reserve(w.size());
            for (uint32_t g : w)
                nw.push_back(remap[g]);
            q.add_term(nw, co);
        }
        rels.push_back(std::move(q));
    }
    return Presentation(GeneratorSet(std::move(names)), DegreeFunction(std::move(weights)),
                        std::move(rels));
}

Word make_word(std::initializer_list<uint32_t> letters) {
    return Word(letters);
}

} // namespace gsforge
