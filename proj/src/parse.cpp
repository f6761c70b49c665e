#include "gsforge/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gsforge {

namespace {

struct Token {
    enum Kind { Name, Number, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    int col;
};

std::vector<Token> tokenize_line(const std::string& line, int lineno) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#')
            break;
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            toks.push_back({Token::Name, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
                ++j;
            if (j < line.size() && line[j] == '/' && j + 1 < line.size() &&
                std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
                ++j;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
                    ++j;
            }
            toks.push_back({Token::Number, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        switch (c) {
        case '+': toks.push_back({Token::Plus, "+", col}); break;
        case '-': toks.push_back({Token::Minus, "-", col}); break;
        case '*': toks.push_back({Token::Star, "*", col}); break;
        case '^': toks.push_back({Token::Caret, "^", col}); break;
        case '(': toks.push_back({Token::LParen, "(", col}); break;
        case ')': toks.push_back({Token::RParen, ")", col}); break;
        case '=': // only used in generator declarations; handled separately
            throw ParseError(lineno, col, "unexpected '='");
        default:
            throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    toks.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
    return toks;
}

// Symbolic value: a polynomial whose words may carry one t-repeated letter.
// Numeric expressions keep param_pos empty.
struct SymWord {
    Word before;
    bool has_param = false;
    uint32_t param_gen = 0;
    Word after;

    Word numeric() const {
        if (has_param)
            throw DomainError("family parameter in numeric context");
        return before;
    }
};

struct SymTerm {
    Rational coeff;
    SymWord word;
};

using SymPoly = std::vector<SymTerm>;

SymPoly sym_mul(const SymPoly& a, const SymPoly& b, int lineno, int col) {
    SymPoly r;
    for (const auto& x : a) {
        for (const auto& y : b) {
            SymTerm t;
            t.coeff = x.coeff * y.coeff;
            if (x.word.has_param && y.word.has_param)
                throw ParseError(lineno, col, "family parameter may appear only once");
            if (x.word.has_param) {
                t.word = x.word;
                t.word.after = concat(t.word.after, y.word.numeric());
            } else if (y.word.has_param) {
                t.word.has_param = true;
                t.word.param_gen = y.word.param_gen;
                t.word.before = concat(x.word.numeric(), y.word.before);
                t.word.after = y.word.after;
            } else {
                t.word.before = concat(x.word.before, y.word.before);
            }
            r.push_back(std::move(t));
        }
    }
    return r;
}

SymPoly sym_add(SymPoly a, const SymPoly& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

SymPoly sym_neg(SymPoly a) {
    for (auto& t : a)
        t.coeff = -t.coeff;
    return a;
}

class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, int lineno, const GeneratorSet& gens,
               const std::string& param)
        : toks_(toks), lineno_(lineno), gens_(gens), param_(param) {}

    SymPoly parse() {
        SymPoly r = expr();
        expect(Token::End, "end of expression");
        return r;
    }

private:
    const std::vector<Token>& toks_;
    int lineno_;
    const GeneratorSet& gens_;
    std::string param_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError(lineno_, peek().col, "expected " + what);
        ++pos_;
    }

    SymPoly expr() {
        SymPoly acc;
        bool neg = false;
        if (peek().kind == Token::Minus) {
            take();
            neg = true;
        } else if (peek().kind == Token::Plus) {
            take();
        }
        acc = term();
        if (neg)
            acc = sym_neg(std::move(acc));
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = take().kind == Token::Minus;
            SymPoly t = term();
            if (minus)
                t = sym_neg(std::move(t));
            acc = sym_add(std::move(acc), t);
        }
        return acc;
    }

    SymPoly term() {
        SymPoly acc = factor();
        while (peek().kind == Token::Star) {
            int col = take().col;
            SymPoly f = factor();
            acc = sym_mul(acc, f, lineno_, col);
        }
        return acc;
    }

    SymPoly factor() {
        SymPoly base = atom();
        if (peek().kind != Token::Caret)
            return base;
        int col = take().col;
        const Token& e = peek();
        if (e.kind == Token::Number) {
            take();
            if (e.text.find('/') != std::string::npos)
                throw ParseError(lineno_, e.col, "exponent must be a nonnegative integer");
            long k = std::stol(e.text);
            if (k > 64)
                throw ParseError(lineno_, e.col, "exponent too large");
            SymPoly acc{SymTerm{Rational(1), SymWord{}}};
            for (long i = 0; i < k; ++i)
                acc = sym_mul(acc, base, lineno_, col);
            return acc;
        }
        if (e.kind == Token::Name) {
            take();
            if (param_.empty() || e.text != param_)
                throw ParseError(lineno_, e.col,
                                 "unknown exponent '" + e.text + "' (family parameter expected)");
            // base must be a single generator word of length 1 with coeff 1
            if (base.size() != 1 || base[0].coeff != 1 || base[0].word.has_param ||
                base[0].word.before.size() != 1)
                throw ParseError(lineno_, e.col,
                                 "the family parameter may only exponentiate a single generator");
            SymTerm t;
            t.coeff = 1;
            t.word.has_param = true;
            t.word.param_gen = base[0].word.before[0];
            return SymPoly{std::move(t)};
        }
        throw ParseError(lineno_, e.col, "expected exponent");
    }

    SymPoly atom() {
        const Token& t = peek();
        if (t.kind == Token::Name) {
            take();
            auto idx = gens_.index_of(t.text);
            if (!idx)
                throw ParseError(lineno_, t.col, "unknown generator '" + t.text + "'");
            SymTerm s;
            s.coeff = 1;
            s.word.before = Word{*idx};
            return SymPoly{std::move(s)};
        }
        if (t.kind == Token::Number) {
            take();
            SymTerm s;
            s.coeff = parse_rational(t.text);
            return SymPoly{std::move(s)};
        }
        if (t.kind == Token::LParen) {
            take();
            SymPoly r = expr();
            expect(Token::RParen, "')'");
            return r;
        }
        throw ParseError(lineno_, t.col, "expected a generator, number, or '('");
    }
};

NcPolynomial to_numeric(const SymPoly& sp, int lineno) {
    NcPolynomial p;
    for (const auto& t : sp) {
        if (t.word.has_param)
            throw ParseError(lineno, 1, "family parameter outside a family block");
        p.add_term(t.word.before, t.coeff);
    }
    return p;
}

FamilyWordPattern to_template(const SymPoly& sp, int lineno, long from, std::optional<long> to) {
    if (sp.size() != 1)
        throw ParseError(lineno, 1, "family template must be a single word");
    const SymTerm& t = sp[0];
    if (t.coeff != 1)
        throw ParseError(lineno, 1, "family template must have coefficient 1");
    if (!t.word.has_param)
        throw ParseError(lineno, 1, "family template must use the parameter exponent");
    FamilyWordPattern pat;
    pat.prefix = t.word.before;
    pat.repeated_gen = t.word.param_gen;
    pat.suffix = t.word.after;
    pat.t_start = from;
    pat.t_end = to;
    if (pat.prefix.empty() && pat.suffix.empty() && from == 0)
        throw ParseError(lineno, 1, "family instantiates to the empty word at t = 0");
    return pat;
}

// Lines with '#'-comments removed; positions stay aligned with the input.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    lines.push_back(cur);
    for (auto& line : lines) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
    }
    return lines;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

std::string first_word(const std::string& line) {
    std::istringstream is(line);
    std::string w;
    is >> w;
    return w;
}

} // namespace

AlgebraFile parse_algebra(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    size_t li = 0;
    auto next_content = [&]() -> std::optional<size_t> {
        while (li < lines.size()) {
            if (!blank_or_comment(lines[li]))
                return li;
            ++li;
        }
        return std::nullopt;
    };

    AlgebraFile file;

    // header
    auto at = next_content();
    if (!at)
        throw ParseError(1, 1, "empty input; expected 'algebra NAME'");
    {
        std::istringstream is(lines[*at]);
        std::string kw;
        is >> kw;
        if (kw != "algebra")
            throw ParseError(static_cast<int>(*at) + 1, 1, "expected 'algebra NAME'");
        if (!(is >> file.name))
            throw ParseError(static_cast<int>(*at) + 1, 1, "missing algebra name");
        std::string extra;
        if (is >> extra)
            throw ParseError(static_cast<int>(*at) + 1, 1, "trailing text after algebra name");
        ++li;
    }

    // generators
    at = next_content();
    if (!at || first_word(lines[*at]) != "generators")
        throw ParseError(static_cast<int>(li) + 1, 1, "expected 'generators' line");
    {
        std::istringstream is(lines[*at]);
        std::string kw;
        is >> kw;
        std::vector<std::string> names;
        std::vector<Rational> ws;
        std::string item;
        while (is >> item) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
                throw ParseError(static_cast<int>(*at) + 1, 1,
                                 "generator declarations look like name=degree");
            std::string nm = item.substr(0, eq);
            Rational w;
            try {
                w = parse_rational(item.substr(eq + 1));
            } catch (const DomainError& e) {
                throw ParseError(static_cast<int>(*at) + 1, 1, e.what());
            }
            if (w <= 0)
                throw ParseError(static_cast<int>(*at) + 1, 1,
                                 "generator degree must be positive: " + item);
            names.push_back(nm);
            ws.push_back(w);
        }
        if (names.empty())
            throw ParseError(static_cast<int>(*at) + 1, 1, "no generators declared");
        try {
            file.gens = GeneratorSet(names);
            file.deg = DegreeFunction(ws);
        } catch (const DomainError& e) {
            throw ParseError(static_cast<int>(*at) + 1, 1, e.what());
        }
        ++li;
    }

    // relations
    at = next_content();
    if (!at || first_word(lines[*at]) != "relations")
        throw ParseError(static_cast<int>(li) + 1, 1, "expected 'relations' line");
    ++li;

    bool closed = false;
    while (true) {
        at = next_content();
        if (!at)
            throw ParseError(static_cast<int>(lines.size()), 1, "missing 'end'");
        std::string kw = first_word(lines[*at]);
        if (kw == "end") {
            ++li;
            closed = true;
            break;
        }
        if (kw == "family")
            break;
        int lineno = static_cast<int>(*at) + 1;
        auto toks = tokenize_line(lines[*at], lineno);
        ExprParser ep(toks, lineno, file.gens, "");
        NcPolynomial p = to_numeric(ep.parse(), lineno);
        if (p.is_zero())
            throw ParseError(lineno, 1, "relation expression expands to zero");
        auto d = poly_degree(p, file.deg);
        if (*d <= 0)
            throw ParseError(lineno, 1, "relation has a constant term (degree 0)");
        file.relations.push_back(std::move(p));
        ++li;
    }

    // family blocks
    while (!closed) {
        at = next_content();
        if (!at)
            throw ParseError(static_cast<int>(lines.size()), 1, "missing 'end'");
        std::string kw = first_word(lines[*at]);
        if (kw == "end") {
            ++li;
            closed = true;
            break;
        }
        if (kw != "family")
            throw ParseError(static_cast<int>(*at) + 1, 1, "expected 'family' or 'end'");
        int hline = static_cast<int>(*at) + 1;
        std::istringstream is(lines[*at]);
        std::string f, param, fromkw;
        long from = 0;
        is >> f >> param >> fromkw;
        if (param.empty() || fromkw != "from" || !(is >> from) || from < 0)
            throw ParseError(hline, 1, "family header looks like: family t from N [to M]");
        std::optional<long> to;
        std::string tokw;
        if (is >> tokw) {
            long m = 0;
            if (tokw != "to" || !(is >> m) || m < from)
                throw ParseError(hline, 1, "family header looks like: family t from N [to M]");
            to = m;
        }
        AlgebraFile::FamilyBlock block;
        block.param = param;
        block.pattern_head.t_start = from;
        block.pattern_head.t_end = to;
        ++li;
        while (true) {
            at = next_content();
            if (!at)
                throw ParseError(static_cast<int>(lines.size()), 1, "missing 'end'");
            std::string kw2 = first_word(lines[*at]);
            if (kw2 == "end" || kw2 == "family")
                break;
            int lineno = static_cast<int>(*at) + 1;
            auto toks = tokenize_line(lines[*at], lineno);
            ExprParser ep(toks, lineno, file.gens, param);
            block.templates.push_back(to_template(ep.parse(), lineno, from, to));
            ++li;
        }
        if (block.templates.empty())
            throw ParseError(hline, 1, "family block has no templates");
        file.families.push_back(std::move(block));
    }

    at = next_content();
    if (at)
        throw ParseError(static_cast<int>(*at) + 1, 1, "trailing content after 'end'");
    return file;
}

Presentation AlgebraFile::to_presentation() const {
    if (is_limit())
        throw DomainError("algebra file declares relation families; use the limit pipeline");
    return Presentation(gens, deg, relations);
}

LimitSpec AlgebraFile::to_limit_spec() const {
    std::vector<RelationFamily> fams;
    for (const auto& b : families)
        for (const auto& t : b.templates)
            fams.push_back(RelationFamily{t});
    return LimitSpec(gens, deg, relations, std::move(fams));
}

bool AlgebraFile::operator==(const AlgebraFile& other) const {
    if (name != other.name || !(gens == other.gens) || !(deg == other.deg) ||
        relations != other.relations || families.size() != other.families.size())
        return false;
    for (size_t i = 0; i < families.size(); ++i) {
        const auto& a = families[i];
        const auto& b = other.families[i];
        if (a.param != b.param || a.templates.size() != b.templates.size())
            return false;
        for (size_t j = 0; j < a.templates.size(); ++j) {
            const auto& x = a.templates[j];
            const auto& y = b.templates[j];
            if (x.prefix != y.prefix || x.repeated_gen != y.repeated_gen ||
                x.suffix != y.suffix || x.t_start != y.t_start || x.t_end != y.t_end)
                return false;
        }
    }
    return true;
}

namespace {

std::string word_str(const Word& w, const GeneratorSet& gens) {
    if (w.empty())
        return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!first)
            os << "*";
        first = false;
        os << gens.name(w[i]);
        if (j - i > 1)
            os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

} // namespace

std::string pretty_print(const AlgebraFile& file) {
    std::ostringstream os;
    os << "algebra " << file.name << "\n";
    os << "generators";
    for (uint32_t i = 0; i < file.gens.size(); ++i)
        os << " " << file.gens.name(i) << "=" << rational_str(file.deg.weight(i));
    os << "\n";
    os << "relations\n";
    for (const auto& r : file.relations)
        os << "  " << r.str(file.gens) << "\n";
    for (const auto& b : file.families) {
        os << "family " << b.param << " from " << b.pattern_head.t_start;
        if (b.pattern_head.t_end)
            os << " to " << *b.pattern_head.t_end;
        os << "\n";
        for (const auto& t : b.templates) {
            os << "  ";
            if (!t.prefix.empty())
                os << word_str(t.prefix, file.gens) << "*";
            os << file.gens.name(t.repeated_gen) << "^" << b.param;
            if (!t.suffix.empty())
                os << "*" << word_str(t.suffix, file.gens);
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

} // namespace gsforge
