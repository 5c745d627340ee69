#pragma once

#include <map>
#include <string>
#include <vector>

#include "vext/config.hpp"
#include "vext/function.hpp"
#include "vext/relation.hpp"
#include "vext/universe.hpp"
#include "vext/value.hpp"

namespace vext {

// A carrier set with named operations, relations, and distinguished elements.
// `elements` enumerates the carrier when it is finite; infinite carriers keep
// the list empty and support only the documented built-in checks.
struct StructureSpec {
    std::string name;
    SubsetSpec carrier = SubsetSpec::all_rationals();
    std::vector<UniverseElement> elements;
    std::map<std::string, LiftableFunction> operations;
    std::map<std::string, Relation> relations;
    std::map<std::string, UniverseElement> distinguished;

    bool enumerable() const { return !elements.empty(); }
};

// Integers modulo k with + and *, distinguished zero and one.
StructureSpec zmod(int k);
// The rational numbers with + , * and <=; carrier is not enumerable.
StructureSpec rational_field_fragment();
// Two sorts: rational scalars and a two-element vector sort with vector
// addition and scalar multiplication (zero scalar kills, others keep).
StructureSpec toy_vector_space();

enum class Attribute {
    Reflexive,
    Symmetric,
    Transitive,
    Antisymmetric,
    Trichotomy,
    OneToOne,
    Onto,
    Associative,
    Commutative,
    Distributive,
    RightNeutral,
    LeftNeutral,
    Opposites,
    RestrictedOpposites,
};

std::string attribute_name(Attribute a);

// Paired outcome: the attribute on the ground structure next to the same
// attribute on the extension. Disagreement is a reportable result, not an
// error; witnesses record the first counterexample found on each side.
struct AttributeVerdict {
    Attribute attr = Attribute::Reflexive;
    bool base = false;
    bool extended = false;
    std::string base_witness;
    std::string extended_witness;

    bool agrees() const { return base == extended; }
};

// Evaluates attr by enumeration on the ground structure and over the cyclic
// fragment (periods up to fragment_period) on the extension. `target` names
// the operation or relation to inspect; empty picks "order" for relation
// attributes, "*" for restricted opposites and distributivity, "+" otherwise.
// Formula conventions: a right neutral e satisfies e(+)a = a for all a, a
// left neutral satisfies a(+)e = a; opposites means every a has b with
// a(+)b = c; restricted opposites quantifies over a distinct from d, and on
// the extension "distinct" means distinct as classes.
AttributeVerdict attribute_check(Attribute attr, const StructureSpec& s,
                                 const std::string& target = std::string(),
                                 int fragment_period = 2,
                                 const Caps& caps = default_caps());

// One-to-one / onto for a standalone function with finite domain and codomain.
AttributeVerdict check_one_to_one(const LiftableFunction& f, int fragment_period = 2,
                                  const Caps& caps = default_caps());
AttributeVerdict check_onto(const LiftableFunction& f, int fragment_period = 2,
                            const Caps& caps = default_caps());

struct StructureVerdict {
    bool base = true;
    bool extended = true;
    std::vector<AttributeVerdict> details;
};

// Group axioms for one named operation: associativity, two-sided neutral,
// opposites with respect to the neutral element.
StructureVerdict group_check(const StructureSpec& s, const std::string& op = "+",
                             const std::string& neutral = "zero",
                             int fragment_period = 2, const Caps& caps = default_caps());

// Ring axioms: "+" a commutative group, "*" associative with two-sided
// neutral "one", "*" distributive over "+".
StructureVerdict ring_check(const StructureSpec& s, int fragment_period = 2,
                            const Caps& caps = default_caps());

// Order axioms for a named relation.
StructureVerdict partial_order_check(const StructureSpec& s,
                                     const std::string& rel = "order",
                                     int fragment_period = 2,
                                     const Caps& caps = default_caps());
StructureVerdict total_order_check(const StructureSpec& s,
                                   const std::string& rel = "order",
                                   int fragment_period = 2,
                                   const Caps& caps = default_caps());

}  // namespace vext
