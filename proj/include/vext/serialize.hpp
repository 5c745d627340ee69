#pragma once

#include <string>

#include "json.hpp"
#include "vext/config.hpp"
#include "vext/lazy.hpp"
#include "vext/relation.hpp"
#include "vext/structure.hpp"
#include "vext/universe.hpp"
#include "vext/value.hpp"
#include "vext/vet_report.hpp"
#include "vext/vreal.hpp"

namespace vext {

// All numeric payloads serialize as exact "num/den" strings; round-trips are
// bit-exact. Predicate-bodied relations serialize as metadata only and do not
// deserialize.

nlohmann::json element_to_json(const UniverseElement& e);
UniverseElement element_from_json(const nlohmann::json& j);

nlohmann::json value_to_json(const VirtualValue& v);
VirtualValue value_from_json(const nlohmann::json& j, const Caps& caps = default_caps());

nlohmann::json relation_to_json(const Relation& r);
Relation relation_from_json(const nlohmann::json& j);

nlohmann::json vet_witness_to_json(const VetWitness& w);
VetWitness vet_witness_from_json(const nlohmann::json& j, const Caps& caps = default_caps());

nlohmann::json vet_report_to_json(const VetReport& r);

nlohmann::json attribute_verdict_to_json(const AttributeVerdict& v);
nlohmann::json structure_verdict_to_json(const StructureVerdict& v);

std::string eventual_truth_text(EventualTruth t);
nlohmann::json truth3_to_json(const Truth3& t);
nlohmann::json st_numeric_to_json(const StNumericResult& r);

}  // namespace vext
