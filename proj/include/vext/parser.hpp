#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vext/rational.hpp"

namespace vext {

// One statement of the expression language: either `name = expr` or a bare
// expression. Operator nodes keep the operator spelling in `name`; exponents
// are validated at parse time to be nonnegative integer literals.
struct Ast {
    enum class Kind { Number, Ident, Cyc, Neg, Binary, Compare, Call, Assign };

    Kind kind;
    Rat number;                                    // Number
    std::string name;                              // Ident, Call, Assign target, operator text
    std::vector<std::shared_ptr<const Ast>> kids;  // operands, call args, cyc items
    int line = 1;
    int col = 1;
};

using AstPtr = std::shared_ptr<const Ast>;

// Parses one statement. Returns nullptr when the line is blank or only a
// `#` comment. Grammar, loosest to tightest: comparison (non-associative),
// additive, multiplicative, unary minus, `^`, atom. `cyc[a, b]` and
// `cyc{a; b}` are interchangeable, so printed values re-parse.
// Throws SyntaxError with 1-based position and the expected-token set.
AstPtr parse_line(const std::string& text, int line_no = 1);

}  // namespace vext
