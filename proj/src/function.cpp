#include "vext/function.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "vext/errors.hpp"
#include "vext/ratfunc.hpp"

namespace vext {

namespace {

std::int64_t lcm_periods(const std::vector<VirtualValue>& args, const Caps& caps) {
    std::int64_t m = 1;
    for (const VirtualValue& a : args) {
        m = lcm_i64(m, a.period());
        if (m > caps.max_period) {
            throw PeriodLimitExceeded("aligned period " + std::to_string(m) +
                                      " exceeds cap " + std::to_string(caps.max_period));
        }
    }
    return m;
}

BranchTerm join_args(const std::vector<BranchTerm>& terms) {
    if (terms.size() == 1) return terms[0];
    return BranchTerm::tuple(terms);
}

const RatFunc& term_func(const BranchTerm& t, const std::string& op_name) {
    if (!t.is_func()) {
        throw TypeError(op_name + " needs plain numeric branches, got " + t.to_string());
    }
    return t.func();
}

}  // namespace

LiftableFunction LiftableFunction::make(std::string name, int arity, int out_arity,
                                        SubsetSpec domain, SubsetSpec codomain,
                                        ValueRule rule) {
    if (arity < 1) throw ArityMismatch("function arity must be at least 1");
    if (out_arity < 1) throw ArityMismatch("function output arity must be at least 1");
    LiftableFunction f(std::move(name), arity, out_arity, std::move(domain), std::move(codomain));
    f.value_rule_ = std::move(rule);
    return f;
}

LiftableFunction LiftableFunction::from_table(std::string name, int arity,
                                              std::vector<TableEntry> entries,
                                              SubsetSpec domain, SubsetSpec codomain) {
    for (const TableEntry& e : entries) {
        if (static_cast<int>(e.first.size()) != arity) {
            throw ArityMismatch("table row arity does not match declared arity");
        }
    }
    auto table = std::make_shared<std::map<std::vector<UniverseElement>, UniverseElement>>();
    for (TableEntry& e : entries) table->emplace(std::move(e.first), std::move(e.second));
    ValueRule rule = [table, name](const std::vector<UniverseElement>& args) {
        auto it = table->find(args);
        if (it == table->end()) {
            throw DomainViolation(name + " has no table row for the given input");
        }
        return it->second;
    };
    return make(std::move(name), arity, 1, std::move(domain), std::move(codomain),
                std::move(rule));
}

LiftableFunction LiftableFunction::with_branch_rule(BranchRule rule) const {
    LiftableFunction f = *this;
    f.branch_rule_ = std::move(rule);
    return f;
}

UniverseElement LiftableFunction::apply_values(const std::vector<UniverseElement>& args) const {
    if (static_cast<int>(args.size()) != arity_) {
        throw ArityMismatch(name_ + " expects " + std::to_string(arity_) + " arguments, got " +
                            std::to_string(args.size()));
    }
    UniverseElement probe = args.size() == 1 ? args[0] : UniverseElement::tuple(args);
    if (!domain_.contains(probe)) {
        throw DomainViolation(name_ + " is not defined at " + probe.to_string());
    }
    return value_rule_(args);
}

BranchTerm LiftableFunction::apply_class(const std::vector<BranchTerm>& terms) const {
    if (static_cast<int>(terms.size()) != arity_) {
        throw ArityMismatch(name_ + " expects " + std::to_string(arity_) + " arguments, got " +
                            std::to_string(terms.size()));
    }
    if (branch_rule_) return branch_rule_(terms);
    bool fixed = std::all_of(terms.begin(), terms.end(),
                             [](const BranchTerm& t) { return t.is_fixed(); });
    if (!fixed) {
        throw TypeError(name_ + " has no branch rule for moving inputs; "
                        "use the sampling tier for this expression");
    }
    std::vector<UniverseElement> args;
    args.reserve(terms.size());
    for (const BranchTerm& t : terms) args.push_back(*t.value_at(1));
    return BranchTerm(value_rule_(args));
}

VirtualValue ExtendedFunction::apply(const std::vector<VirtualValue>& args,
                                     const Caps& caps) const {
    if (static_cast<int>(args.size()) != base_.arity()) {
        throw ArityMismatch(base_.name() + " expects " + std::to_string(base_.arity()) +
                            " arguments, got " + std::to_string(args.size()));
    }
    std::int64_t m = lcm_periods(args, caps);
    std::vector<BranchTerm> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        std::vector<BranchTerm> terms;
        terms.reserve(args.size());
        for (const VirtualValue& a : args) {
            terms.push_back(a.branch(static_cast<int>(j % a.period())));
        }
        if (!branch_eventually_in(join_args(terms), base_.domain())) {
            throw DomainViolation(base_.name() + " is not defined along branch " +
                                  std::to_string(j) + ": " + join_args(terms).to_string() +
                                  " leaves " + base_.domain().to_string());
        }
        out.push_back(base_.apply_class(terms));
    }
    return VirtualValue::cyclic(out, caps);
}

ExtendedFunction extend_function(const LiftableFunction& f) { return ExtendedFunction(f); }

LiftableFunction compose_fn(const LiftableFunction& g, const LiftableFunction& f) {
    if (f.out_arity() != g.arity()) {
        throw NotAChain("output arity " + std::to_string(f.out_arity()) + " of " + f.name() +
                        " does not match input arity " + std::to_string(g.arity()) + " of " +
                        g.name());
    }
    bool chained = false;
    try {
        chained = f.codomain().subset_of(g.domain());
    } catch (const UndecidableMembership&) {
        throw NotAChain("cannot decide whether " + f.name() + " lands inside the domain of " +
                        g.name());
    }
    if (!chained) {
        throw NotAChain(f.name() + " does not land inside the domain of " + g.name());
    }
    LiftableFunction fc = f;
    LiftableFunction gc = g;
    auto unpack_values = [gc](const UniverseElement& mid) {
        if (gc.arity() == 1) return std::vector<UniverseElement>{mid};
        if (!mid.is_tuple() || static_cast<int>(mid.tuple_value().size()) != gc.arity()) {
            throw TypeError("intermediate value " + mid.to_string() +
                            " does not split into " + std::to_string(gc.arity()) + " inputs");
        }
        return mid.tuple_value();
    };
    LiftableFunction::ValueRule rule =
        [fc, gc, unpack_values](const std::vector<UniverseElement>& args) {
            return gc.apply_values(unpack_values(fc.apply_values(args)));
        };
    LiftableFunction::BranchRule branch =
        [fc, gc](const std::vector<BranchTerm>& terms) {
            BranchTerm mid = fc.apply_class(terms);
            if (gc.arity() == 1) return gc.apply_class({mid});
            if (!mid.is_tuple() || static_cast<int>(mid.tuple_parts().size()) != gc.arity()) {
                throw TypeError("intermediate branch " + mid.to_string() +
                                " does not split into " + std::to_string(gc.arity()) + " inputs");
            }
            return gc.apply_class(mid.tuple_parts());
        };
    return LiftableFunction::make(g.name() + " o " + f.name(), f.arity(), g.out_arity(),
                                  f.domain(), g.codomain(), std::move(rule))
        .with_branch_rule(std::move(branch));
}

LiftableFunction aggregate_fn(const std::vector<LiftableFunction>& parts) {
    if (parts.empty()) throw ArityMismatch("aggregate needs at least one component");
    const LiftableFunction& first = parts[0];
    for (const LiftableFunction& p : parts) {
        if (p.arity() != first.arity()) {
            throw DomainMismatch("aggregate components disagree on arity");
        }
        bool same = false;
        try {
            same = p.domain().subset_of(first.domain()) && first.domain().subset_of(p.domain());
        } catch (const UndecidableMembership&) {
            throw DomainMismatch("cannot decide whether aggregate components share a domain");
        }
        if (!same) throw DomainMismatch("aggregate components must share one domain");
    }
    std::vector<SubsetSpec> codomains;
    std::string name = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        codomains.push_back(parts[i].codomain());
        if (i) name += ", ";
        name += parts[i].name();
    }
    name += ")";
    std::vector<LiftableFunction> comps = parts;
    LiftableFunction::ValueRule rule = [comps](const std::vector<UniverseElement>& args) {
        std::vector<UniverseElement> outs;
        outs.reserve(comps.size());
        for (const LiftableFunction& f : comps) outs.push_back(f.apply_values(args));
        return UniverseElement::tuple(outs);
    };
    LiftableFunction::BranchRule branch = [comps](const std::vector<BranchTerm>& terms) {
        std::vector<BranchTerm> outs;
        outs.reserve(comps.size());
        for (const LiftableFunction& f : comps) outs.push_back(f.apply_class(terms));
        return BranchTerm::tuple(outs);
    };
    return LiftableFunction::make(std::move(name), first.arity(),
                                  static_cast<int>(parts.size()), first.domain(),
                                  SubsetSpec::product(codomains), std::move(rule))
        .with_branch_rule(std::move(branch));
}

LiftableFunction project_fn(const SubsetSpec& domain, int index) {
    const std::vector<SubsetSpec>& comps = domain.components();
    int n = static_cast<int>(comps.size());
    if (index < 1 || index > n) {
        throw ArityMismatch("projection index " + std::to_string(index) +
                            " is outside 1.." + std::to_string(n));
    }
    std::size_t at = static_cast<std::size_t>(index - 1);
    LiftableFunction::ValueRule rule = [at](const std::vector<UniverseElement>& args) {
        const UniverseElement& v = args[0];
        if (!v.is_tuple() || v.tuple_value().size() <= at) {
            throw TypeError("projection applied to non-tuple value " + v.to_string());
        }
        return v.tuple_value()[at];
    };
    LiftableFunction::BranchRule branch = [at](const std::vector<BranchTerm>& terms) {
        const BranchTerm& t = terms[0];
        if (t.is_tuple()) {
            if (t.tuple_parts().size() <= at) {
                throw TypeError("projection index is outside the tuple branch " + t.to_string());
            }
            return t.tuple_parts()[at];
        }
        std::optional<UniverseElement> v = t.is_fixed() ? t.value_at(1) : std::nullopt;
        if (!v || !v->is_tuple() || v->tuple_value().size() <= at) {
            throw TypeError("projection applied to non-tuple branch " + t.to_string());
        }
        return BranchTerm((*v).tuple_value()[at]);
    };
    return LiftableFunction::make("pi_" + std::to_string(index), 1, 1, domain, comps[at],
                                  std::move(rule))
        .with_branch_rule(std::move(branch));
}

LiftableFunction identity_fn(const SubsetSpec& domain) {
    LiftableFunction::ValueRule rule = [](const std::vector<UniverseElement>& args) {
        return args[0];
    };
    LiftableFunction::BranchRule branch = [](const std::vector<BranchTerm>& terms) {
        return terms[0];
    };
    return LiftableFunction::make("id", 1, 1, domain, domain, std::move(rule))
        .with_branch_rule(std::move(branch));
}

namespace {

LiftableFunction rational_binary(const std::string& name,
                                 std::function<Rat(const Rat&, const Rat&)> on_values,
                                 std::function<RatFunc(const RatFunc&, const RatFunc&)> on_funcs) {
    SubsetSpec q = SubsetSpec::all_rationals();
    SubsetSpec dom = SubsetSpec::product({q, q});
    LiftableFunction::ValueRule rule =
        [on_values, name](const std::vector<UniverseElement>& args) {
            std::optional<Rat> a = args[0].numeric();
            std::optional<Rat> b = args[1].numeric();
            if (!a || !b) throw TypeError(name + " needs plain numeric inputs");
            return UniverseElement::rational(on_values(*a, *b));
        };
    LiftableFunction::BranchRule branch =
        [on_funcs, name](const std::vector<BranchTerm>& terms) {
            return BranchTerm(on_funcs(term_func(terms[0], name), term_func(terms[1], name)));
        };
    return LiftableFunction::make(name, 2, 1, dom, q, std::move(rule))
        .with_branch_rule(std::move(branch));
}

}  // namespace

LiftableFunction rational_add() {
    return rational_binary(
        "plus", [](const Rat& a, const Rat& b) { return a + b; },
        [](const RatFunc& a, const RatFunc& b) { return add(a, b); });
}

LiftableFunction rational_mul() {
    return rational_binary(
        "times", [](const Rat& a, const Rat& b) { return a * b; },
        [](const RatFunc& a, const RatFunc& b) { return mul(a, b); });
}

}  // namespace vext
