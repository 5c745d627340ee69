#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vext/relation.hpp"
#include "vext/value.hpp"

namespace vext {

// The thirteen commutation rules between extension and the relation/function
// operations, plus the three quantifier-transfer clauses.
enum class VetItem {
    I,     // extended equality is equality of classes
    II,    // ext(not P) included in not ext(P)
    III,   // ext(P and Q) equals ext(P) and ext(Q)
    IV,    // ext(P or Q) contains ext(P) or ext(Q)
    V,     // ext(P => Q) included in ext(P) => ext(Q)
    VI,    // ext(P <=> Q) included in ext(P) <=> ext(Q)
    VII,   // fixing prefix arguments commutes with extension
    VIII,  // forall-quantification commutes with extension
    IX,    // exists-quantification commutes with extension
    X,     // unique-existence quantification commutes with extension
    XI,    // ext(P o f) equals ext(P) o ext(f)
    XII,   // ext(g o f) equals ext(g) o ext(f); ext(id) is the identity
    XIII,  // extension of an aggregate is the aggregate of extensions
    ClauseA,  // forall statements transfer
    ClauseB,  // exists statements transfer
    ClauseC,  // unique-existence statements transfer
};

std::string vet_item_label(VetItem item);

enum class VetVerdict {
    Equal,         // both sides agree on every checked instance
    StrictSubset,  // inclusion verified everywhere and strict somewhere
    Fails,         // a checked instance violates the stated rule
};

std::string vet_verdict_label(VetVerdict v);

// A concrete, re-checkable instance: the relations involved and the argument
// classes at which the two sides differ (or would have to agree).
struct VetWitness {
    std::vector<Relation> relations;
    std::vector<VirtualValue> args;
    std::string note;
};

struct VetReport {
    VetItem item;
    VetVerdict verdict;
    std::string model;           // universe and period bound of the run
    std::string instances;       // what was enumerated
    long long checked = 0;       // instance count actually evaluated
    std::uint64_t seed = 0;      // nonzero when relation sampling was seeded
    std::vector<VetWitness> witnesses;
};

}  // namespace vext
