#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vext/universe.hpp"
#include "vext/value.hpp"

namespace vext {

enum class Quantifier { ForAll, Exists, Unique };

// A relation over a universe: either an explicit set of tuples over a finite
// ground set, or a total decidable predicate. A relation may also carry an
// eventual decision rule that settles its truth along a residue class whose
// terms move with the index (used by the numeric built-ins); without one,
// moving branches are rejected rather than guessed.
class Relation {
public:
    using Tuple = std::vector<UniverseElement>;
    using Predicate = std::function<bool(const Tuple&)>;
    using EventualHook = std::function<bool(const std::vector<BranchTerm>&)>;

    static Relation extensional(std::vector<UniverseElement> universe, int arity,
                                std::vector<Tuple> tuples, std::string name = "");
    static Relation predicate(int arity, Predicate pred, std::string name = "");
    static Relation predicate_with_hook(int arity, Predicate pred, EventualHook hook,
                                        std::string name = "");

    int arity() const { return arity_; }
    const std::string& name() const { return name_; }
    bool is_extensional() const { return extensional_.has_value(); }
    const std::vector<Tuple>& tuples() const { return extensional_->tuples; }
    const std::vector<UniverseElement>& universe() const { return extensional_->universe; }

    // Pointwise truth at a concrete tuple.
    bool holds(const Tuple& args) const;

    // Truth of the relation at all sufficiently large indices of one residue
    // class. Fixed terms reduce to a single pointwise test; moving terms use
    // the eventual rule or throw UndecidableBranch.
    bool eventually_on_class(const std::vector<BranchTerm>& terms) const;

    std::string describe() const;

private:
    struct ExtBody {
        std::vector<UniverseElement> universe;
        std::vector<Tuple> tuples;  // sorted, unique
    };
    Relation(int arity, std::string name) : arity_(arity), name_(std::move(name)) {}
    int arity_;
    std::string name_;
    std::optional<ExtBody> extensional_;
    Predicate pred_;
    EventualHook hook_;
};

// All arity-length tuples over a ground set, in lexicographic order.
std::vector<Relation::Tuple> tuples_over(const std::vector<UniverseElement>& universe, int arity);

// Built-in relations.
Relation rel_equality(std::vector<UniverseElement> universe);  // extensional diagonal
Relation rel_eq_numeric();                                     // a = b eventually
Relation rel_lt_numeric();                                     // a < b eventually
Relation rel_le_numeric();                                     // a <= b eventually
Relation rel_member(SubsetSpec set);                           // arity 1, eventual membership

// Connective algebra; on two explicit-set bodies over the same ground set the
// result is the corresponding explicit set operation.
Relation rel_not(const Relation& p);
Relation rel_and(const Relation& p, const Relation& q);
Relation rel_or(const Relation& p, const Relation& q);
Relation rel_implies(const Relation& p, const Relation& q);
Relation rel_iff(const Relation& p, const Relation& q);

// P with its first prefix.size() entries fixed.
Relation fix_prefix_args(const Relation& p, const Relation::Tuple& prefix);

// Enumerable elements of a domain spec; throws NonEnumerableDomain otherwise.
std::vector<UniverseElement> enumerate_domain(const SubsetSpec& domain);

// Quantification of the first entry over an enumerable domain.
Relation quantify(Quantifier q, const SubsetSpec& domain, const Relation& p);

std::string quantifier_name(Quantifier q);

}  // namespace vext
