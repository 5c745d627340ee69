#pragma once

#include <vector>

#include "vext/config.hpp"
#include "vext/relation.hpp"
#include "vext/value.hpp"

namespace vext {

// Virtual extension of a relation: holds on classes exactly when the base
// relation holds on representatives at all sufficiently large indices. On
// canonical values this reduces to an eventual test on every residue class of
// the aligned period.
class ExtendedRelation {
public:
    explicit ExtendedRelation(Relation base) : base_(std::move(base)) {}

    const Relation& base() const { return base_; }
    int arity() const { return base_.arity(); }

    bool holds(const std::vector<VirtualValue>& args, const Caps& caps = default_caps()) const;

    // Eventual truth per aligned residue class; holds() is their conjunction.
    std::vector<bool> branch_truths(const std::vector<VirtualValue>& args,
                                    const Caps& caps = default_caps()) const;

private:
    Relation base_;
};

ExtendedRelation extend_relation(const Relation& p);

}  // namespace vext
