#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vext/config.hpp"
#include "vext/universe.hpp"
#include "vext/value.hpp"

namespace vext {

// A function on ground values together with the data needed to lift it:
// a declared domain and codomain, a value rule for fixed inputs, and an
// optional branch rule that acts directly on rational-function branches.
class LiftableFunction {
public:
    using ValueRule = std::function<UniverseElement(const std::vector<UniverseElement>&)>;
    using BranchRule = std::function<BranchTerm(const std::vector<BranchTerm>&)>;
    using TableEntry = std::pair<std::vector<UniverseElement>, UniverseElement>;

    static LiftableFunction make(std::string name, int arity, int out_arity,
                                 SubsetSpec domain, SubsetSpec codomain, ValueRule rule);
    // Finite function given by explicit input/output rows.
    static LiftableFunction from_table(std::string name, int arity,
                                       std::vector<TableEntry> entries,
                                       SubsetSpec domain, SubsetSpec codomain);
    LiftableFunction with_branch_rule(BranchRule rule) const;

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    int out_arity() const { return out_arity_; }
    const SubsetSpec& domain() const { return domain_; }
    const SubsetSpec& codomain() const { return codomain_; }
    bool has_branch_rule() const { return static_cast<bool>(branch_rule_); }

    // Evaluate on ground values. Throws DomainViolation outside the domain.
    UniverseElement apply_values(const std::vector<UniverseElement>& args) const;

    // Evaluate on one residue class. Moving branches require a branch rule;
    // without one this throws TypeError pointing at the sampling tier.
    BranchTerm apply_class(const std::vector<BranchTerm>& terms) const;

private:
    LiftableFunction(std::string name, int arity, int out_arity,
                     SubsetSpec domain, SubsetSpec codomain)
        : name_(std::move(name)), arity_(arity), out_arity_(out_arity),
          domain_(std::move(domain)), codomain_(std::move(codomain)) {}

    std::string name_;
    int arity_;
    int out_arity_;
    SubsetSpec domain_;
    SubsetSpec codomain_;
    ValueRule value_rule_;
    BranchRule branch_rule_;
};

// The lift of a function to virtual values: branchwise application after
// aligning all arguments on a common period.
class ExtendedFunction {
public:
    explicit ExtendedFunction(LiftableFunction base) : base_(std::move(base)) {}

    const LiftableFunction& base() const { return base_; }
    int arity() const { return base_.arity(); }

    VirtualValue apply(const std::vector<VirtualValue>& args,
                       const Caps& caps = default_caps()) const;

private:
    LiftableFunction base_;
};

ExtendedFunction extend_function(const LiftableFunction& f);

// g after f. Throws NotAChain when f's outputs do not fit g's inputs.
LiftableFunction compose_fn(const LiftableFunction& g, const LiftableFunction& f);

// x -> (f1(x), ..., fn(x)). All parts must share arity and domain;
// otherwise DomainMismatch.
LiftableFunction aggregate_fn(const std::vector<LiftableFunction>& parts);

// Coordinate projection out of a product domain (1-based index).
LiftableFunction project_fn(const SubsetSpec& domain, int index);

LiftableFunction identity_fn(const SubsetSpec& domain);

// Exact rational arithmetic as liftable binary operations on the plain
// numeric sort; branch rules keep moving branches exact.
LiftableFunction rational_add();
LiftableFunction rational_mul();

}  // namespace vext
