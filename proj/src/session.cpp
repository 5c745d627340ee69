#include "vext/session.hpp"

#include <sstream>
#include <utility>

#include "vext/errors.hpp"
#include "vext/serialize.hpp"

namespace vext {

namespace {

const char* kValueCalls[] = {"st", "sign", "ln", "sin", "cos", "exp"};
const char* kReportCalls[] = {"st~", "classify", "deriv"};
const char* kBuiltins[] = {"n", "inf", "eps", "cyc"};

bool is_reserved(const std::string& name) {
    for (const char* s : kValueCalls)
        if (name == s) return true;
    for (const char* s : kReportCalls)
        if (name == s) return true;
    for (const char* s : kBuiltins)
        if (name == s) return true;
    return false;
}

// Maps a library diagnostic to its user-facing kind label.
std::string error_kind(const Error& e) {
    if (dynamic_cast<const SyntaxError*>(&e)) return "syntax error";
    if (dynamic_cast<const PeriodLimitExceeded*>(&e)) return "period limit exceeded";
    if (dynamic_cast<const DegreeLimitExceeded*>(&e)) return "degree limit exceeded";
    if (dynamic_cast<const UndecidableMembership*>(&e)) return "undecidable membership";
    if (dynamic_cast<const UndecidableBranch*>(&e)) return "undecidable branch";
    if (dynamic_cast<const ArityMismatch*>(&e)) return "arity mismatch";
    if (dynamic_cast<const NonEnumerableDomain*>(&e)) return "non-enumerable domain";
    if (dynamic_cast<const NonEnumerableCarrier*>(&e)) return "non-enumerable carrier";
    if (dynamic_cast<const DomainViolation*>(&e)) return "domain violation";
    if (dynamic_cast<const NotAChain*>(&e)) return "not a chain";
    if (dynamic_cast<const DomainMismatch*>(&e)) return "domain mismatch";
    if (dynamic_cast<const ZeroBranchDivisor*>(&e)) return "zero-branch divisor";
    if (dynamic_cast<const SizeLimit*>(&e)) return "size limit";
    if (dynamic_cast<const TypeError*>(&e)) return "type error";
    return "error";
}

int exponent_of(const Ast& pow_node) {
    const Rat& k = pow_node.kids[1]->number;
    if (k < 0 || k > Rat(1 << 20)) throw TypeError("exponent out of range");
    return static_cast<int>(numerator(k).convert_to<long long>());
}

}  // namespace

Session::Session(const Caps& caps, const LazyConfig& lazy) : caps_(caps), lazy_(lazy) {}

EvalOutcome Session::eval_line(const std::string& text, int line_no) {
    try {
        AstPtr ast = parse_line(text, line_no);
        if (!ast) return {};
        return eval_statement(ast);
    } catch (const SyntaxError& e) {
        EvalOutcome out;
        out.kind = EvalOutcome::Kind::Error;
        out.text = e.what();
        out.error_type = "syntax error";
        out.line = e.line();
        out.col = e.col();
        return out;
    } catch (const Error& e) {
        EvalOutcome out;
        out.kind = EvalOutcome::Kind::Error;
        out.text = e.what();
        out.error_type = error_kind(e);
        out.line = line_no;
        return out;
    }
}

EvalOutcome Session::eval_statement(const AstPtr& ast) {
    switch (ast->kind) {
        case Ast::Kind::Assign: {
            if (is_reserved(ast->name))
                throw TypeError("'" + ast->name + "' is reserved and cannot be assigned");
            Value v = eval_value(ast->kids[0]);
            bindings_.insert_or_assign(ast->name, v);
            return render_value(std::move(v));
        }
        case Ast::Kind::Compare:
            return compare_outcome(*ast);
        case Ast::Kind::Call:
            if (ast->name == "st~") {
                if (ast->kids.size() != 1) throw ArityMismatch("st~ takes one argument");
                Value v = eval_value(ast->kids[0]);
                EvalOutcome out;
                out.kind = EvalOutcome::Kind::Text;
                if (const auto* lazy = std::get_if<LazySeq>(&v)) {
                    out.text = render_st_numeric(st_numeric(*lazy, lazy_));
                } else {
                    // Exact arguments take the exact route; nothing is sampled.
                    out.text = render_standard_part(standard_part(std::get<VirtualReal>(v)));
                }
                return out;
            }
            if (ast->name == "classify") {
                if (ast->kids.size() != 1) throw ArityMismatch("classify takes one argument");
                VirtualReal v = expect_exact(ast->kids[0], "classify");
                EvalOutcome out;
                out.kind = EvalOutcome::Kind::Text;
                out.text = num_class_name(classify(v));
                return out;
            }
            if (ast->name == "deriv") return derivative_outcome(*ast);
            return render_value(eval_value(ast));
        default:
            return render_value(eval_value(ast));
    }
}

EvalOutcome Session::render_value(Value v) const {
    EvalOutcome out;
    if (const auto* exact = std::get_if<VirtualReal>(&v)) {
        out.kind = EvalOutcome::Kind::Exact;
        out.text = exact->to_text();
        out.exact = exact->value();
    } else {
        const LazySeq& seq = std::get<LazySeq>(v);
        out.kind = EvalOutcome::Kind::Lazy;
        out.text = seq.provenance + " (sampled sequence; compare with == or apply st~)";
    }
    return out;
}

VirtualReal Session::expect_exact(const AstPtr& ast, const char* what) {
    Value v = eval_value(ast);
    if (const auto* exact = std::get_if<VirtualReal>(&v)) return *exact;
    throw TypeError(std::string(what) + " needs an exact value, not a sampled sequence");
}

Session::Value Session::eval_value(const AstPtr& ast) {
    switch (ast->kind) {
        case Ast::Kind::Number:
            return VirtualReal::constant(ast->number);
        case Ast::Kind::Ident: {
            if (ast->name == "n" || ast->name == "inf") return VirtualReal::infinity();
            if (ast->name == "eps") return VirtualReal::epsilon();
            auto it = bindings_.find(ast->name);
            if (it == bindings_.end()) throw TypeError("unbound name '" + ast->name + "'");
            return it->second;
        }
        case Ast::Kind::Cyc: {
            std::vector<RatFunc> branches;
            branches.reserve(ast->kids.size());
            for (const AstPtr& item : ast->kids) {
                VirtualReal v = expect_exact(item, "a cyc item");
                if (v.period() != 1)
                    throw TypeError("cyc items must be single-branch exact values");
                branches.push_back(v.branch_func(0));
            }
            return VirtualReal::cyclic(branches, caps_);
        }
        case Ast::Kind::Neg: {
            Value v = eval_value(ast->kids[0]);
            if (const auto* exact = std::get_if<VirtualReal>(&v))
                return vr_neg(*exact, caps_);
            return lazy_neg(std::get<LazySeq>(v));
        }
        case Ast::Kind::Binary:
            return eval_binary(*ast);
        case Ast::Kind::Call:
            return eval_call(*ast);
        case Ast::Kind::Compare:
            throw TypeError("a comparison is a verdict, not a value");
        case Ast::Kind::Assign:
            throw TypeError("assignment cannot nest inside an expression");
    }
    throw TypeError("unrecognized expression");
}

Session::Value Session::eval_binary(const Ast& op) {
    if (op.name == "^") {
        Value base = eval_value(op.kids[0]);
        int k = exponent_of(op);
        if (const auto* exact = std::get_if<VirtualReal>(&base))
            return vr_pow(*exact, k, caps_);
        return lazy_pow(std::get<LazySeq>(base), k);
    }
    Value a = eval_value(op.kids[0]);
    Value b = eval_value(op.kids[1]);
    const auto* ea = std::get_if<VirtualReal>(&a);
    const auto* eb = std::get_if<VirtualReal>(&b);
    if (ea && eb) {
        if (op.name == "+") return vr_add(*ea, *eb, caps_);
        if (op.name == "-") return vr_sub(*ea, *eb, caps_);
        if (op.name == "*") return vr_mul(*ea, *eb, caps_);
        if (op.name == "/") return vr_div(*ea, *eb, caps_);
    } else {
        LazySeq la = ea ? lazy_view(*ea) : std::get<LazySeq>(a);
        LazySeq lb = eb ? lazy_view(*eb) : std::get<LazySeq>(b);
        if (op.name == "+") return lazy_add(la, lb);
        if (op.name == "-") return lazy_sub(la, lb);
        if (op.name == "*") return lazy_mul(la, lb);
        if (op.name == "/") return lazy_div(la, lb);
    }
    throw TypeError("unrecognized operator '" + op.name + "'");
}

Session::Value Session::eval_call(const Ast& call) {
    const std::string& name = call.name;
    if (name == "ln" || name == "sin" || name == "cos" || name == "exp") {
        if (call.kids.size() != 1) throw ArityMismatch(name + " takes one argument");
        Value v = eval_value(call.kids[0]);
        if (const auto* exact = std::get_if<VirtualReal>(&v))
            return lift_value_fn(name, *exact);
        return lift_value_fn(name, std::get<LazySeq>(v));
    }
    if (name == "st") {
        if (call.kids.size() != 1) throw ArityMismatch("st takes one argument");
        Value v = eval_value(call.kids[0]);
        if (std::holds_alternative<LazySeq>(v))
            throw TypeError("st is exact-only; use st~ to sample the limit numerically");
        StandardPart sp = standard_part(std::get<VirtualReal>(v));
        if (sp.status != StStatus::Defined) throw TypeError("st " + sp.describe());
        return VirtualReal::constant(*sp.value);
    }
    if (name == "sign") {
        if (call.kids.size() != 1) throw ArityMismatch("sign takes one argument");
        return vr_sign(expect_exact(call.kids[0], "sign"), caps_);
    }
    if (name == "st~" || name == "classify" || name == "deriv")
        throw TypeError(name + " produces a report, not a value; use it as a whole statement");
    throw TypeError("unknown function '" + name + "'");
}

EvalOutcome Session::compare_outcome(const Ast& cmp) {
    Value a = eval_value(cmp.kids[0]);
    Value b = eval_value(cmp.kids[1]);
    const auto* ea = std::get_if<VirtualReal>(&a);
    const auto* eb = std::get_if<VirtualReal>(&b);
    EvalOutcome out;
    out.kind = EvalOutcome::Kind::Truth;
    if (ea && eb) {
        EventualTruth t;
        if (cmp.name == "<") t = vr_lt(*ea, *eb, caps_);
        else if (cmp.name == "<=") t = vr_le(*ea, *eb, caps_);
        else if (cmp.name == "==") t = vr_eq(*ea, *eb, caps_);
        else if (cmp.name == "!=") t = vr_ne(*ea, *eb, caps_);
        else if (cmp.name == ">=") t = vr_ge(*ea, *eb, caps_);
        else t = vr_gt(*ea, *eb, caps_);
        out.text = eventual_truth_text(t);
        return out;
    }
    // Sampled operands support equality checks only; order would need a
    // tolerance convention with no principled choice.
    if (cmp.name != "==" && cmp.name != "!=")
        throw TypeError("order comparisons need exact operands; sampled sequences support == and !=");
    LazySeq la = ea ? lazy_view(*ea) : std::get<LazySeq>(a);
    LazySeq lb = eb ? lazy_view(*eb) : std::get<LazySeq>(b);
    Truth3 t = check_identity(la, lb, lazy_);
    if (cmp.name == "==") {
        out.text = t.describe();
        return out;
    }
    std::ostringstream s;
    switch (t.kind) {
        case Truth3::Kind::TrueUpTo:
            s << "false (agree up to H=" << t.horizon << ", tol=" << format_compact(t.tol) << ")";
            break;
        case Truth3::Kind::FalseWithWitness:
            s << "true (witness at i=" << t.witness << ")";
            break;
        case Truth3::Kind::Inconclusive:
            s << "inconclusive (H=" << t.horizon << ")";
            break;
    }
    out.text = s.str();
    return out;
}

EvalOutcome Session::derivative_outcome(const Ast& call) {
    if (call.kids.size() != 3)
        throw ArityMismatch("deriv takes (expression, variable, point)");
    const AstPtr& body = call.kids[0];
    const AstPtr& var = call.kids[1];
    if (var->kind != Ast::Kind::Ident)
        throw TypeError("the second argument of deriv names the variable");
    const std::string& x = var->name;
    if (is_reserved(x)) throw TypeError("'" + x + "' is reserved and cannot be the variable");
    VirtualReal at = expect_exact(call.kids[2], "the deriv point");
    StandardPart at_sp = standard_part(at);
    if (!at.is_constant_value() || at_sp.status != StStatus::Defined)
        throw TypeError("the deriv point must be an exact rational");
    const Rat x0 = *at_sp.value;

    // Difference quotient against the canonical infinitesimal. The body is
    // re-evaluated with the variable bound to x0 + eps and to x0; whichever
    // tier the body lands on decides between the exact and sampled routes.
    std::optional<Value> saved;
    auto prev = bindings_.find(x);
    if (prev != bindings_.end()) saved = prev->second;
    std::optional<Value> at_shifted, at_point;
    try {
        bindings_.insert_or_assign(
            x, vr_add(VirtualReal::constant(x0), VirtualReal::epsilon(), caps_));
        at_shifted = eval_value(body);
        bindings_.insert_or_assign(x, VirtualReal::constant(x0));
        at_point = eval_value(body);
    } catch (...) {
        if (saved) bindings_.insert_or_assign(x, *saved);
        else bindings_.erase(x);
        throw;
    }
    if (saved) bindings_.insert_or_assign(x, *saved);
    else bindings_.erase(x);

    EvalOutcome out;
    out.kind = EvalOutcome::Kind::Text;
    const auto* fe = std::get_if<VirtualReal>(&*at_shifted);
    const auto* f0 = std::get_if<VirtualReal>(&*at_point);
    if (fe && f0) {
        VirtualReal q = vr_div(vr_sub(*fe, *f0, caps_), VirtualReal::epsilon(), caps_);
        out.text = render_standard_part(standard_part(q));
        return out;
    }
    LazySeq le = fe ? lazy_view(*fe) : std::get<LazySeq>(*at_shifted);
    LazySeq l0 = f0 ? lazy_view(*f0) : std::get<LazySeq>(*at_point);
    LazySeq q = lazy_div(lazy_sub(le, l0), lazy_view(VirtualReal::epsilon()));
    out.text = render_st_numeric(st_numeric(q, lazy_));
    return out;
}

std::string Session::render_standard_part(const StandardPart& sp) const {
    return sp.describe();
}

std::string Session::render_st_numeric(const StNumericResult& r) const {
    std::ostringstream s;
    if (r.status == StNumericStatus::Converged) {
        s << format_compact(r.value) << " (numeric, H=" << r.horizon
          << ", tol=" << format_compact(r.tol) << ")";
    } else {
        s << st_numeric_status_name(r.status) << " (H=" << r.horizon
          << ", tol=" << format_compact(r.tol) << ")";
    }
    return s.str();
}

}  // namespace vext
