#ifndef GSFORGE_PARSE_HPP
#define GSFORGE_PARSE_HPP

#include "gsforge/limits.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsforge {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/// Parsed algebra file: a named presentation, optionally with relation
/// families (then it describes a direct-limit sequence).
struct AlgebraFile {
    std::string name;
    GeneratorSet gens{std::vector<std::string>{"x"}};
    DegreeFunction deg;
    std::vector<NcPolynomial> relations;

    struct FamilyBlock {
        std::string param;
        FamilyWordPattern pattern_head; // shared t_start / t_end live here
        std::vector<FamilyWordPattern> templates;
    };
    std::vector<FamilyBlock> families;

    bool is_limit() const { return !families.empty(); }
    Presentation to_presentation() const;
    LimitSpec to_limit_spec() const;

    bool operator==(const AlgebraFile& other) const;
};

/// Parse the text format:
///   algebra NAME
///   generators x=1 y=2/3 ...
///   relations
///     <expression per line>
///   family t from 0 [to 5]
///     <word template per line, exactly one ^t block>
///   end
/// '#' starts a comment. Errors carry line:column positions.
AlgebraFile parse_algebra(const std::string& text);

std::string pretty_print(const AlgebraFile& file);

} // namespace gsforge

#endif
