#include "vext/serialize.hpp"

#include "vext/errors.hpp"
#include "vext/poly.hpp"
#include "vext/ratfunc.hpp"

namespace vext {

using nlohmann::json;

namespace {

Rat parse_rat(const std::string& text) {
    std::optional<Rat> q = rat_from_string(text);
    if (!q) throw TypeError("malformed rational \"" + text + "\"");
    return *q;
}

}  // namespace

json element_to_json(const UniverseElement& e) {
    json j;
    j["tag"] = e.tag();
    if (e.is_numeric()) {
        j["kind"] = "rational";
        j["value"] = rat_to_string(*e.numeric());
    } else if (e.is_atom()) {
        j["kind"] = "atom";
        j["value"] = e.atom_value().name;
    } else {
        j["kind"] = "tuple";
        json parts = json::array();
        for (const UniverseElement& p : e.tuple_value()) parts.push_back(element_to_json(p));
        j["value"] = std::move(parts);
    }
    return j;
}

UniverseElement element_from_json(const json& j) {
    std::string tag = j.at("tag").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") {
        return UniverseElement::rational(parse_rat(j.at("value").get<std::string>()), tag);
    }
    if (kind == "atom") {
        return UniverseElement::atom(j.at("value").get<std::string>(), tag);
    }
    if (kind == "tuple") {
        UniverseElement::Tuple parts;
        for (const json& p : j.at("value")) parts.push_back(element_from_json(p));
        return UniverseElement::tuple(std::move(parts), tag);
    }
    throw TypeError("unknown element kind \"" + kind + "\"");
}

namespace {

json coeffs_to_json(const Poly& p) {
    json out = json::array();
    for (const Rat& c : p.coeffs()) out.push_back(rat_to_string(c));
    return out;
}

Poly coeffs_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const json& c : j) coeffs.push_back(parse_rat(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

json branch_to_json(const BranchTerm& t) {
    json j;
    if (t.is_func()) {
        j["kind"] = "rat";
        j["num_coeffs"] = coeffs_to_json(t.func().num());
        j["den_coeffs"] = coeffs_to_json(t.func().den());
    } else if (t.is_element()) {
        j["kind"] = "const";
        j["value"] = element_to_json(t.element());
    } else {
        j["kind"] = "tuple";
        json parts = json::array();
        for (const BranchTerm& p : t.tuple_parts()) parts.push_back(branch_to_json(p));
        j["parts"] = std::move(parts);
    }
    return j;
}

BranchTerm branch_from_json(const json& j, const Caps& caps) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rat") {
        return BranchTerm(
            RatFunc(coeffs_from_json(j.at("num_coeffs")), coeffs_from_json(j.at("den_coeffs")),
                    caps));
    }
    if (kind == "const") {
        return BranchTerm(element_from_json(j.at("value")));
    }
    if (kind == "tuple") {
        BranchTerm::TupleBody parts;
        for (const json& p : j.at("parts")) parts.push_back(branch_from_json(p, caps));
        return BranchTerm::tuple(std::move(parts));
    }
    throw TypeError("unknown branch kind \"" + kind + "\"");
}

}  // namespace

json value_to_json(const VirtualValue& v) {
    json j;
    j["period"] = v.period();
    json branches = json::array();
    for (int k = 0; k < v.period(); ++k) branches.push_back(branch_to_json(v.branch(k)));
    j["branches"] = std::move(branches);
    return j;
}

VirtualValue value_from_json(const json& j, const Caps& caps) {
    std::vector<BranchTerm> branches;
    for (const json& b : j.at("branches")) branches.push_back(branch_from_json(b, caps));
    if (branches.empty()) throw TypeError("a value needs at least one branch");
    return VirtualValue::cyclic(branches, caps);
}

json relation_to_json(const Relation& r) {
    json j;
    j["arity"] = r.arity();
    if (r.is_extensional()) {
        j["kind"] = "extensional";
        json universe = json::array();
        for (const UniverseElement& e : r.universe()) universe.push_back(element_to_json(e));
        j["universe"] = std::move(universe);
        json tuples = json::array();
        for (const Relation::Tuple& t : r.tuples()) {
            json row = json::array();
            for (const UniverseElement& e : t) row.push_back(element_to_json(e));
            tuples.push_back(std::move(row));
        }
        j["tuples"] = std::move(tuples);
    } else {
        j["kind"] = "predicate";
        j["name"] = r.describe();
    }
    return j;
}

Relation relation_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "extensional") {
        throw TypeError("only explicit tuple-set relations deserialize");
    }
    std::vector<UniverseElement> universe;
    for (const json& e : j.at("universe")) universe.push_back(element_from_json(e));
    std::vector<Relation::Tuple> tuples;
    for (const json& row : j.at("tuples")) {
        Relation::Tuple t;
        for (const json& e : row) t.push_back(element_from_json(e));
        tuples.push_back(std::move(t));
    }
    return Relation::extensional(std::move(universe), j.at("arity").get<int>(),
                                 std::move(tuples));
}

json vet_witness_to_json(const VetWitness& w) {
    json j;
    json rels = json::array();
    for (const Relation& r : w.relations) rels.push_back(relation_to_json(r));
    j["relations"] = std::move(rels);
    json args = json::array();
    json args_text = json::array();
    for (const VirtualValue& v : w.args) {
        args.push_back(value_to_json(v));
        args_text.push_back(v.to_text());
    }
    j["args"] = std::move(args);
    j["args_text"] = std::move(args_text);
    j["note"] = w.note;
    return j;
}

VetWitness vet_witness_from_json(const json& j, const Caps& caps) {
    VetWitness w;
    for (const json& r : j.at("relations")) w.relations.push_back(relation_from_json(r));
    for (const json& v : j.at("args")) w.args.push_back(value_from_json(v, caps));
    w.note = j.at("note").get<std::string>();
    return w;
}

json vet_report_to_json(const VetReport& r) {
    json j;
    j["item"] = vet_item_label(r.item);
    j["verdict"] = vet_verdict_label(r.verdict);
    j["model"] = r.model;
    j["instances"] = r.instances;
    j["checked"] = r.checked;
    j["seed"] = r.seed;
    json ws = json::array();
    for (const VetWitness& w : r.witnesses) ws.push_back(vet_witness_to_json(w));
    j["witnesses"] = std::move(ws);
    return j;
}

json attribute_verdict_to_json(const AttributeVerdict& v) {
    json j;
    j["attribute"] = attribute_name(v.attr);
    j["base"] = v.base;
    j["extended"] = v.extended;
    j["base_witness"] = v.base_witness;
    j["extended_witness"] = v.extended_witness;
    return j;
}

json structure_verdict_to_json(const StructureVerdict& v) {
    json j;
    j["base"] = v.base;
    j["extended"] = v.extended;
    json details = json::array();
    for (const AttributeVerdict& d : v.details) details.push_back(attribute_verdict_to_json(d));
    j["details"] = std::move(details);
    return j;
}

std::string eventual_truth_text(EventualTruth t) {
    switch (t) {
        case EventualTruth::EventuallyTrue: return "true";
        case EventualTruth::EventuallyFalse: return "false";
        case EventualTruth::Mixed: return "mixed (not comparable)";
    }
    return "?";
}

json truth3_to_json(const Truth3& t) {
    json j;
    switch (t.kind) {
        case Truth3::Kind::TrueUpTo:
            j["verdict"] = "true";
            j["horizon"] = t.horizon;
            j["tol"] = t.tol;
            break;
        case Truth3::Kind::FalseWithWitness:
            j["verdict"] = "false";
            j["witness"] = t.witness;
            j["lhs"] = t.lhs;
            j["rhs"] = t.rhs;
            break;
        case Truth3::Kind::Inconclusive:
            j["verdict"] = "inconclusive";
            j["horizon"] = t.horizon;
            break;
    }
    return j;
}

json st_numeric_to_json(const StNumericResult& r) {
    json j;
    j["status"] = st_numeric_status_name(r.status);
    if (r.status == StNumericStatus::Converged) j["value"] = r.value;
    j["horizon"] = r.horizon;
    j["tol"] = r.tol;
    return j;
}

}  // namespace vext
