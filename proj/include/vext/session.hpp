#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "vext/config.hpp"
#include "vext/lazy.hpp"
#include "vext/parser.hpp"
#include "vext/value.hpp"
#include "vext/vreal.hpp"

namespace vext {

// Result of one evaluated statement, structured enough for plain-text and
// JSON rendering. Diagnostics are outcomes, never exceptions to the caller.
struct EvalOutcome {
    enum class Kind { Empty, Exact, Lazy, Truth, Text, Error };

    Kind kind = Kind::Empty;
    std::string text;                   // printed form; the message for Error
    std::optional<VirtualValue> exact;  // Exact only
    std::string error_type;             // Error only
    int line = 0;                       // Error only, 0 when positionless
    int col = 0;

    bool is_error() const { return kind == Kind::Error; }
};

// Interpreter state: name bindings plus the arithmetic and sampling knobs.
// `n`, `inf` and `eps` are built-in values; call names are reserved.
// Exact values and sampled sequences coexist; any transcendental call or
// mixed-tier arithmetic lands on the sampled tier.
class Session {
public:
    explicit Session(const Caps& caps = default_caps(),
                     const LazyConfig& lazy = default_lazy_config());

    EvalOutcome eval_line(const std::string& text, int line_no = 1);

    const Caps& caps() const { return caps_; }
    const LazyConfig& lazy_config() const { return lazy_; }

private:
    using Value = std::variant<VirtualReal, LazySeq>;

    EvalOutcome eval_statement(const AstPtr& ast);
    Value eval_value(const AstPtr& ast);
    Value eval_call(const Ast& call);
    Value eval_binary(const Ast& op);
    VirtualReal expect_exact(const AstPtr& ast, const char* what);
    EvalOutcome compare_outcome(const Ast& cmp);
    EvalOutcome derivative_outcome(const Ast& call);
    std::string render_standard_part(const StandardPart& sp) const;
    std::string render_st_numeric(const StNumericResult& r) const;
    EvalOutcome render_value(Value v) const;

    Caps caps_;
    LazyConfig lazy_;
    std::map<std::string, Value> bindings_;
};

}  // namespace vext
