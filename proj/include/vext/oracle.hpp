#pragma once

#include <cstdint>
#include <vector>

#include "vext/config.hpp"
#include "vext/function.hpp"
#include "vext/relation.hpp"
#include "vext/value.hpp"
#include "vext/vet_report.hpp"

namespace vext {

// The finite stage for machine verification: every canonical class with
// constant branches drawn from a small ground set, period bounded by m.
struct FragmentModel {
    std::vector<UniverseElement> universe;
    int max_period = 2;
    std::vector<VirtualValue> elements;
};

FragmentModel enumerate_fragment(std::vector<UniverseElement> universe, int max_period);

// Direct reading of the eventual semantics, independent of the per-class
// evaluation path: with M the aligned period of the arguments, truth of the
// base relation at index i is periodic in i, so the tuple satisfies the
// extension exactly when the relation holds at every index in (M, 2M].
bool eventually_holds_expanded(const Relation& base, const std::vector<VirtualValue>& args);

// The exact satisfying set over the model, as index tuples into
// model.elements, computed with eventually_holds_expanded.
std::vector<std::vector<std::size_t>> brute_force_extend(const Relation& p,
                                                         const FragmentModel& model);

struct VetOptions {
    int arity_cap = 2;
    bool exhaustive = true;  // enumerate every relation; otherwise sample masks
    int sample_count = 200;
    std::uint64_t seed = 0;
};

// Machine-checks every commutation rule and transfer clause over the model.
// Equality rules must report Equal on every instance; the four inclusion
// rules must never violate their stated direction and carry replayable
// witnesses where the inclusion is strict.
std::vector<VetReport> vet_exhaustive(const FragmentModel& model,
                                      const VetOptions& opts = VetOptions());

// Re-evaluates a stored witness independently: for the inclusion rules it
// confirms that the larger side holds and the smaller side fails at the
// witness; for equality rules it confirms the recorded disagreement.
bool replay_witness(VetItem item, const VetWitness& w, const Caps& caps = default_caps());

// One quantifier-transfer clause on a specific finite domain and unary
// relation: base-side enumeration against the fragment side.
VetReport transfer_quantifier_check(Quantifier q, const std::vector<UniverseElement>& domain,
                                    const Relation& p, int max_period = 2);

}  // namespace vext
