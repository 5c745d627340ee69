#include "vext/structure.hpp"

#include <algorithm>
#include <sstream>

#include "vext/errors.hpp"
#include "vext/extension.hpp"
#include "vext/ratfunc.hpp"

namespace vext {

namespace {

UniverseElement mod_int(std::int64_t v, std::int64_t k) {
    std::int64_t r = v % k;
    if (r < 0) r += k;
    return UniverseElement::integer(r);
}

std::int64_t as_int(const UniverseElement& e) {
    std::optional<Rat> q = e.numeric();
    if (!q || !is_integer(*q)) throw TypeError("expected an integer element, got " + e.to_string());
    return static_cast<std::int64_t>(numerator(*q).convert_to<long long>());
}

std::string pair_text(const VirtualValue& a, const VirtualValue& b) {
    return "(" + a.to_text() + ", " + b.to_text() + ")";
}

std::string pair_text(const UniverseElement& a, const UniverseElement& b) {
    return "(" + a.to_string() + ", " + b.to_string() + ")";
}

const LiftableFunction& op_named(const StructureSpec& s, const std::string& name) {
    auto it = s.operations.find(name);
    if (it == s.operations.end()) {
        throw TypeError("structure " + s.name + " has no operation \"" + name + "\"");
    }
    return it->second;
}

const Relation& rel_named(const StructureSpec& s, const std::string& name) {
    auto it = s.relations.find(name);
    if (it == s.relations.end()) {
        throw TypeError("structure " + s.name + " has no relation \"" + name + "\"");
    }
    return it->second;
}

const UniverseElement& distinguished_named(const StructureSpec& s, const std::string& name) {
    auto it = s.distinguished.find(name);
    if (it == s.distinguished.end()) {
        throw TypeError("structure " + s.name + " has no distinguished element \"" + name + "\"");
    }
    return it->second;
}

// Neutral / unit conventions: additive ops distinguish "zero", multiplicative
// ops distinguish "one"; anything else must provide "e".
std::string neutral_name_for(const std::string& op_name) {
    if (op_name == "+") return "zero";
    if (op_name == "*") return "one";
    return "e";
}

VirtualValue embed(const UniverseElement& e) { return VirtualValue::constant(BranchTerm(e)); }

}  // namespace

StructureSpec zmod(int k) {
    if (k < 1) throw TypeError("zmod needs a positive modulus");
    StructureSpec s;
    s.name = "zmod(" + std::to_string(k) + ")";
    for (int i = 0; i < k; ++i) s.elements.push_back(UniverseElement::integer(i));
    s.carrier = SubsetSpec::finite(s.elements);
    SubsetSpec dom = SubsetSpec::product({s.carrier, s.carrier});
    std::int64_t m = k;
    s.operations.emplace("+", LiftableFunction::make(
        "+ mod " + std::to_string(k), 2, 1, dom, s.carrier,
        [m](const std::vector<UniverseElement>& a) {
            return mod_int(as_int(a[0]) + as_int(a[1]), m);
        }));
    s.operations.emplace("*", LiftableFunction::make(
        "* mod " + std::to_string(k), 2, 1, dom, s.carrier,
        [m](const std::vector<UniverseElement>& a) {
            return mod_int(as_int(a[0]) * as_int(a[1]), m);
        }));
    s.distinguished.emplace("zero", UniverseElement::integer(0));
    s.distinguished.emplace("one", UniverseElement::integer(k > 1 ? 1 : 0));
    return s;
}

StructureSpec rational_field_fragment() {
    StructureSpec s;
    s.name = "rationals";
    s.carrier = SubsetSpec::all_rationals();
    s.operations.emplace("+", rational_add());
    s.operations.emplace("*", rational_mul());
    s.relations.emplace("order", rel_le_numeric());
    s.distinguished.emplace("zero", UniverseElement::integer(0));
    s.distinguished.emplace("one", UniverseElement::integer(1));
    return s;
}

StructureSpec toy_vector_space() {
    UniverseElement v0 = UniverseElement::atom("v0", "v");
    UniverseElement v1 = UniverseElement::atom("v1", "v");
    StructureSpec s;
    s.name = "toy vectors";
    s.elements = {v0, v1};
    s.carrier = SubsetSpec::finite(s.elements);
    SubsetSpec vv = SubsetSpec::product({s.carrier, s.carrier});
    s.operations.emplace("vadd", LiftableFunction::from_table(
        "vadd", 2,
        {{{v0, v0}, v0}, {{v0, v1}, v1}, {{v1, v0}, v1}, {{v1, v1}, v0}},
        vv, s.carrier));
    SubsetSpec sv = SubsetSpec::product({SubsetSpec::all_rationals(), s.carrier});
    s.operations.emplace("smul", LiftableFunction::make(
        "smul", 2, 1, sv, s.carrier,
        [v0](const std::vector<UniverseElement>& a) {
            std::optional<Rat> q = a[0].numeric();
            if (!q) throw TypeError("smul needs a scalar first argument");
            return *q == 0 ? v0 : a[1];
        }));
    s.distinguished.emplace("zero", v0);
    return s;
}

std::string attribute_name(Attribute a) {
    switch (a) {
        case Attribute::Reflexive: return "reflexive";
        case Attribute::Symmetric: return "symmetric";
        case Attribute::Transitive: return "transitive";
        case Attribute::Antisymmetric: return "antisymmetric";
        case Attribute::Trichotomy: return "trichotomy";
        case Attribute::OneToOne: return "one_to_one";
        case Attribute::Onto: return "onto";
        case Attribute::Associative: return "associative";
        case Attribute::Commutative: return "commutative";
        case Attribute::Distributive: return "distributive";
        case Attribute::RightNeutral: return "right_neutral";
        case Attribute::LeftNeutral: return "left_neutral";
        case Attribute::Opposites: return "opposites";
        case Attribute::RestrictedOpposites: return "restricted_opposites";
    }
    return "?";
}

namespace {

bool relation_attribute(Attribute a) {
    switch (a) {
        case Attribute::Reflexive:
        case Attribute::Symmetric:
        case Attribute::Transitive:
        case Attribute::Antisymmetric:
        case Attribute::Trichotomy:
            return true;
        default:
            return false;
    }
}

AttributeVerdict check_relation_attribute(Attribute attr, const StructureSpec& s,
                                          const std::string& target, int fragment_period,
                                          const Caps& caps) {
    if (!s.enumerable()) {
        throw NonEnumerableCarrier("relation attributes need an enumerated carrier");
    }
    const Relation& r = rel_named(s, target.empty() ? "order" : target);
    if (r.arity() != 2) throw ArityMismatch("relation attributes apply to binary relations");
    const std::vector<UniverseElement>& e = s.elements;
    std::vector<VirtualValue> frag = enumerate_cyclic(e, fragment_period);
    ExtendedRelation xr(r);

    AttributeVerdict v;
    v.attr = attr;
    v.base = true;
    v.extended = true;
    auto base_fail = [&](const std::string& w) {
        if (v.base) v.base_witness = w;
        v.base = false;
    };
    auto ext_fail = [&](const std::string& w) {
        if (v.extended) v.extended_witness = w;
        v.extended = false;
    };

    switch (attr) {
        case Attribute::Reflexive:
            for (const UniverseElement& a : e) {
                if (!r.holds({a, a})) { base_fail(a.to_string()); break; }
            }
            for (const VirtualValue& x : frag) {
                if (!xr.holds({x, x}, caps)) { ext_fail(x.to_text()); break; }
            }
            break;
        case Attribute::Symmetric:
            for (const UniverseElement& a : e) {
                for (const UniverseElement& b : e) {
                    if (r.holds({a, b}) && !r.holds({b, a})) base_fail(pair_text(a, b));
                }
            }
            for (const VirtualValue& x : frag) {
                for (const VirtualValue& y : frag) {
                    if (xr.holds({x, y}, caps) && !xr.holds({y, x}, caps)) {
                        ext_fail(pair_text(x, y));
                    }
                }
            }
            break;
        case Attribute::Transitive:
            for (const UniverseElement& a : e)
                for (const UniverseElement& b : e)
                    for (const UniverseElement& c : e) {
                        if (r.holds({a, b}) && r.holds({b, c}) && !r.holds({a, c})) {
                            base_fail("(" + a.to_string() + ", " + b.to_string() + ", " +
                                      c.to_string() + ")");
                        }
                    }
            for (const VirtualValue& x : frag)
                for (const VirtualValue& y : frag)
                    for (const VirtualValue& z : frag) {
                        if (xr.holds({x, y}, caps) && xr.holds({y, z}, caps) &&
                            !xr.holds({x, z}, caps)) {
                            ext_fail("(" + x.to_text() + ", " + y.to_text() + ", " + z.to_text() +
                                     ")");
                        }
                    }
            break;
        case Attribute::Antisymmetric:
            for (const UniverseElement& a : e) {
                for (const UniverseElement& b : e) {
                    if (r.holds({a, b}) && r.holds({b, a}) && !(a == b)) base_fail(pair_text(a, b));
                }
            }
            for (const VirtualValue& x : frag) {
                for (const VirtualValue& y : frag) {
                    if (xr.holds({x, y}, caps) && xr.holds({y, x}, caps) && !(x == y)) {
                        ext_fail(pair_text(x, y));
                    }
                }
            }
            break;
        case Attribute::Trichotomy:
            for (const UniverseElement& a : e) {
                for (const UniverseElement& b : e) {
                    if (!r.holds({a, b}) && !r.holds({b, a})) base_fail(pair_text(a, b));
                }
            }
            for (const VirtualValue& x : frag) {
                for (const VirtualValue& y : frag) {
                    if (!xr.holds({x, y}, caps) && !xr.holds({y, x}, caps)) {
                        ext_fail(pair_text(x, y));
                    }
                }
            }
            break;
        default:
            break;
    }
    return v;
}

// Multiplication on the full rational carrier: every branch that sits at the
// constant 0 annihilates, so a class with a zero branch and a nonzero branch
// is distinct from 0 as a class yet has no multiplicative opposite. The base
// side holds by the reciprocal construction b = 1/a.
AttributeVerdict rational_restricted_opposites(const StructureSpec& s, const Caps& caps) {
    AttributeVerdict v;
    v.attr = Attribute::RestrictedOpposites;
    v.base = true;
    v.extended = false;

    ExtendedFunction mulx(op_named(s, "*"));
    VirtualValue alpha = VirtualValue::cyclic(
        {BranchTerm(RatFunc(Rat(0))), BranchTerm(RatFunc(Rat(1)))}, caps);
    VirtualValue zero = embed(distinguished_named(s, "zero"));
    VirtualValue one = embed(distinguished_named(s, "one"));
    if (alpha == zero) throw TypeError("witness construction degenerated");
    std::vector<VirtualValue> probes = {
        one,
        embed(UniverseElement::integer(-1)),
        embed(UniverseElement::rational(Rat(1, 2))),
        VirtualValue::constant(BranchTerm(RatFunc::index())),
        VirtualValue::constant(BranchTerm(RatFunc::index_reciprocal())),
        VirtualValue::cyclic({BranchTerm(RatFunc(Rat(2))),
                              BranchTerm(RatFunc(Rat(3)))}, caps),
    };
    for (const VirtualValue& beta : probes) {
        if (mulx.apply({alpha, beta}, caps) == one) {
            v.extended = true;
            return v;
        }
    }
    v.extended_witness = alpha.to_text() + " (its zero branch annihilates every product)";
    return v;
}

AttributeVerdict check_operation_attribute(Attribute attr, const StructureSpec& s,
                                           const std::string& target, int fragment_period,
                                           const Caps& caps) {
    std::string op_name = target;
    if (op_name.empty()) {
        op_name = (attr == Attribute::RestrictedOpposites || attr == Attribute::Distributive)
                      ? "*"
                      : "+";
    }
    if (!s.enumerable()) {
        if (attr == Attribute::RestrictedOpposites && op_name == "*") {
            return rational_restricted_opposites(s, caps);
        }
        throw NonEnumerableCarrier("operation attributes need an enumerated carrier");
    }

    const LiftableFunction& op = op_named(s, op_name);
    ExtendedFunction xop(op);
    const std::vector<UniverseElement>& e = s.elements;
    std::vector<VirtualValue> frag = enumerate_cyclic(e, fragment_period);

    AttributeVerdict v;
    v.attr = attr;
    v.base = true;
    v.extended = true;
    auto base_fail = [&](const std::string& w) {
        if (v.base) v.base_witness = w;
        v.base = false;
    };
    auto ext_fail = [&](const std::string& w) {
        if (v.extended) v.extended_witness = w;
        v.extended = false;
    };
    auto ap = [&](const UniverseElement& a, const UniverseElement& b) {
        return op.apply_values({a, b});
    };
    auto xap = [&](const VirtualValue& a, const VirtualValue& b) {
        return xop.apply({a, b}, caps);
    };

    switch (attr) {
        case Attribute::Associative:
            for (const UniverseElement& a : e)
                for (const UniverseElement& b : e)
                    for (const UniverseElement& c : e) {
                        if (!(ap(ap(a, b), c) == ap(a, ap(b, c)))) {
                            base_fail("(" + a.to_string() + ", " + b.to_string() + ", " +
                                      c.to_string() + ")");
                        }
                    }
            for (const VirtualValue& x : frag)
                for (const VirtualValue& y : frag)
                    for (const VirtualValue& z : frag) {
                        if (!(xap(xap(x, y), z) == xap(x, xap(y, z)))) {
                            ext_fail("(" + x.to_text() + ", " + y.to_text() + ", " + z.to_text() +
                                     ")");
                        }
                    }
            break;
        case Attribute::Commutative:
            for (const UniverseElement& a : e)
                for (const UniverseElement& b : e) {
                    if (!(ap(a, b) == ap(b, a))) base_fail(pair_text(a, b));
                }
            for (const VirtualValue& x : frag)
                for (const VirtualValue& y : frag) {
                    if (!(xap(x, y) == xap(y, x))) ext_fail(pair_text(x, y));
                }
            break;
        case Attribute::RightNeutral: {
            const UniverseElement& n = distinguished_named(s, neutral_name_for(op_name));
            VirtualValue nx = embed(n);
            for (const UniverseElement& a : e) {
                if (!(ap(n, a) == a)) base_fail(a.to_string());
            }
            for (const VirtualValue& x : frag) {
                if (!(xap(nx, x) == x)) ext_fail(x.to_text());
            }
            break;
        }
        case Attribute::LeftNeutral: {
            const UniverseElement& n = distinguished_named(s, neutral_name_for(op_name));
            VirtualValue nx = embed(n);
            for (const UniverseElement& a : e) {
                if (!(ap(a, n) == a)) base_fail(a.to_string());
            }
            for (const VirtualValue& x : frag) {
                if (!(xap(x, nx) == x)) ext_fail(x.to_text());
            }
            break;
        }
        case Attribute::Opposites: {
            const UniverseElement& c = distinguished_named(s, neutral_name_for(op_name));
            VirtualValue cx = embed(c);
            for (const UniverseElement& a : e) {
                bool found = false;
                for (const UniverseElement& b : e) {
                    if (ap(a, b) == c) { found = true; break; }
                }
                if (!found) base_fail(a.to_string());
            }
            for (const VirtualValue& x : frag) {
                bool found = false;
                for (const VirtualValue& y : frag) {
                    if (xap(x, y) == cx) { found = true; break; }
                }
                if (!found) ext_fail(x.to_text());
            }
            break;
        }
        case Attribute::RestrictedOpposites: {
            const UniverseElement& c = distinguished_named(s, "one");
            const UniverseElement& d = distinguished_named(s, "zero");
            VirtualValue cx = embed(c);
            VirtualValue dx = embed(d);
            for (const UniverseElement& a : e) {
                if (a == d) continue;
                bool found = false;
                for (const UniverseElement& b : e) {
                    if (ap(a, b) == c) { found = true; break; }
                }
                if (!found) base_fail(a.to_string());
            }
            // "Distinct from d" on the extension means distinct as classes,
            // which admits values that still agree with d on some branch.
            for (const VirtualValue& x : frag) {
                if (x == dx) continue;
                bool found = false;
                for (const VirtualValue& y : frag) {
                    if (xap(x, y) == cx) { found = true; break; }
                }
                if (!found) ext_fail(x.to_text());
            }
            break;
        }
        case Attribute::Distributive: {
            const LiftableFunction& plus = op_named(s, "+");
            ExtendedFunction xplus(plus);
            auto pl = [&](const UniverseElement& a, const UniverseElement& b) {
                return plus.apply_values({a, b});
            };
            auto xpl = [&](const VirtualValue& a, const VirtualValue& b) {
                return xplus.apply({a, b}, caps);
            };
            for (const UniverseElement& a : e)
                for (const UniverseElement& b : e)
                    for (const UniverseElement& c : e) {
                        bool left = ap(a, pl(b, c)) == pl(ap(a, b), ap(a, c));
                        bool right = ap(pl(b, c), a) == pl(ap(b, a), ap(c, a));
                        if (!left || !right) {
                            base_fail("(" + a.to_string() + ", " + b.to_string() + ", " +
                                      c.to_string() + ")");
                        }
                    }
            for (const VirtualValue& x : frag)
                for (const VirtualValue& y : frag)
                    for (const VirtualValue& z : frag) {
                        bool left = xap(x, xpl(y, z)) == xpl(xap(x, y), xap(x, z));
                        bool right = xap(xpl(y, z), x) == xpl(xap(y, x), xap(z, x));
                        if (!left || !right) {
                            ext_fail("(" + x.to_text() + ", " + y.to_text() + ", " + z.to_text() +
                                     ")");
                        }
                    }
            break;
        }
        default:
            break;
    }
    return v;
}

}  // namespace

AttributeVerdict attribute_check(Attribute attr, const StructureSpec& s,
                                 const std::string& target, int fragment_period,
                                 const Caps& caps) {
    if (relation_attribute(attr)) {
        return check_relation_attribute(attr, s, target, fragment_period, caps);
    }
    if (attr == Attribute::OneToOne || attr == Attribute::Onto) {
        const LiftableFunction& op = op_named(s, target.empty() ? "+" : target);
        return attr == Attribute::OneToOne ? check_one_to_one(op, fragment_period, caps)
                                           : check_onto(op, fragment_period, caps);
    }
    return check_operation_attribute(attr, s, target, fragment_period, caps);
}

namespace {

std::vector<std::vector<UniverseElement>> domain_slots(const LiftableFunction& f) {
    const SubsetSpec& d = f.domain();
    if (f.arity() == 1) {
        if (!d.is_finite()) throw NonEnumerableCarrier(f.name() + " has no finite domain");
        return {d.finite_elements()};
    }
    if (!d.is_product()) throw NonEnumerableCarrier(f.name() + " has no finite domain");
    std::vector<std::vector<UniverseElement>> slots;
    for (const SubsetSpec& c : d.components()) {
        if (!c.is_finite()) throw NonEnumerableCarrier(f.name() + " has no finite domain");
        slots.push_back(c.finite_elements());
    }
    return slots;
}

template <typename T>
std::vector<std::vector<T>> all_combos(const std::vector<std::vector<T>>& slots) {
    std::vector<std::vector<T>> out;
    std::vector<std::size_t> idx(slots.size(), 0);
    while (true) {
        std::vector<T> row;
        row.reserve(slots.size());
        for (std::size_t k = 0; k < slots.size(); ++k) row.push_back(slots[k][idx[k]]);
        out.push_back(std::move(row));
        std::size_t pos = slots.size();
        while (pos > 0 && idx[pos - 1] + 1 == slots[pos - 1].size()) idx[--pos] = 0;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return out;
}

std::string tuple_text(const std::vector<UniverseElement>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += t[i].to_string();
    }
    return out + ")";
}

std::string tuple_text(const std::vector<VirtualValue>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += t[i].to_text();
    }
    return out + ")";
}

}  // namespace

AttributeVerdict check_one_to_one(const LiftableFunction& f, int fragment_period,
                                  const Caps& caps) {
    AttributeVerdict v;
    v.attr = Attribute::OneToOne;
    v.base = true;
    v.extended = true;

    std::vector<std::vector<UniverseElement>> slots = domain_slots(f);
    std::vector<std::vector<UniverseElement>> inputs = all_combos(slots);
    for (std::size_t i = 0; i < inputs.size() && v.base; ++i) {
        for (std::size_t j = i + 1; j < inputs.size(); ++j) {
            if (f.apply_values(inputs[i]) == f.apply_values(inputs[j])) {
                v.base = false;
                v.base_witness = tuple_text(inputs[i]) + " vs " + tuple_text(inputs[j]);
                break;
            }
        }
    }

    ExtendedFunction xf(f);
    std::vector<std::vector<VirtualValue>> xslots;
    for (const std::vector<UniverseElement>& s : slots) {
        xslots.push_back(enumerate_cyclic(s, fragment_period));
    }
    std::vector<std::vector<VirtualValue>> xinputs = all_combos(xslots);
    for (std::size_t i = 0; i < xinputs.size() && v.extended; ++i) {
        for (std::size_t j = i + 1; j < xinputs.size(); ++j) {
            if (xf.apply(xinputs[i], caps) == xf.apply(xinputs[j], caps)) {
                v.extended = false;
                v.extended_witness = tuple_text(xinputs[i]) + " vs " + tuple_text(xinputs[j]);
                break;
            }
        }
    }
    return v;
}

AttributeVerdict check_onto(const LiftableFunction& f, int fragment_period, const Caps& caps) {
    AttributeVerdict v;
    v.attr = Attribute::Onto;
    v.base = true;
    v.extended = true;

    if (!f.codomain().is_finite()) {
        throw NonEnumerableCarrier(f.name() + " has no finite codomain");
    }
    std::vector<std::vector<UniverseElement>> slots = domain_slots(f);
    std::vector<std::vector<UniverseElement>> inputs = all_combos(slots);
    for (const UniverseElement& y : f.codomain().finite_elements()) {
        bool hit = false;
        for (const std::vector<UniverseElement>& x : inputs) {
            if (f.apply_values(x) == y) { hit = true; break; }
        }
        if (!hit) {
            v.base = false;
            v.base_witness = y.to_string();
            break;
        }
    }

    ExtendedFunction xf(f);
    std::vector<std::vector<VirtualValue>> xslots;
    for (const std::vector<UniverseElement>& s : slots) {
        xslots.push_back(enumerate_cyclic(s, fragment_period));
    }
    std::vector<std::vector<VirtualValue>> xinputs = all_combos(xslots);
    for (const VirtualValue& eta : enumerate_cyclic(f.codomain().finite_elements(),
                                                    fragment_period)) {
        bool hit = false;
        for (const std::vector<VirtualValue>& xs : xinputs) {
            if (xf.apply(xs, caps) == eta) { hit = true; break; }
        }
        if (!hit) {
            v.extended = false;
            v.extended_witness = eta.to_text();
            break;
        }
    }
    return v;
}

namespace {

StructureVerdict collect(std::vector<AttributeVerdict> details) {
    StructureVerdict v;
    v.details = std::move(details);
    for (const AttributeVerdict& d : v.details) {
        v.base = v.base && d.base;
        v.extended = v.extended && d.extended;
    }
    return v;
}

}  // namespace

StructureVerdict group_check(const StructureSpec& s, const std::string& op,
                             const std::string& neutral, int fragment_period,
                             const Caps& caps) {
    // The neutral checks resolve the conventional name for the operation, so
    // alias the declared neutral element under that name.
    const UniverseElement n = distinguished_named(s, neutral);
    StructureSpec view = s;
    view.distinguished.insert_or_assign(neutral_name_for(op), n);
    return collect({
        attribute_check(Attribute::Associative, view, op, fragment_period, caps),
        attribute_check(Attribute::RightNeutral, view, op, fragment_period, caps),
        attribute_check(Attribute::LeftNeutral, view, op, fragment_period, caps),
        attribute_check(Attribute::Opposites, view, op, fragment_period, caps),
    });
}

StructureVerdict ring_check(const StructureSpec& s, int fragment_period, const Caps& caps) {
    StructureVerdict additive = group_check(s, "+", "zero", fragment_period, caps);
    std::vector<AttributeVerdict> details = std::move(additive.details);
    details.push_back(attribute_check(Attribute::Commutative, s, "+", fragment_period, caps));
    details.push_back(attribute_check(Attribute::Associative, s, "*", fragment_period, caps));
    details.push_back(attribute_check(Attribute::RightNeutral, s, "*", fragment_period, caps));
    details.push_back(attribute_check(Attribute::LeftNeutral, s, "*", fragment_period, caps));
    details.push_back(attribute_check(Attribute::Distributive, s, "*", fragment_period, caps));
    return collect(std::move(details));
}

StructureVerdict partial_order_check(const StructureSpec& s, const std::string& rel,
                                     int fragment_period, const Caps& caps) {
    return collect({
        attribute_check(Attribute::Reflexive, s, rel, fragment_period, caps),
        attribute_check(Attribute::Antisymmetric, s, rel, fragment_period, caps),
        attribute_check(Attribute::Transitive, s, rel, fragment_period, caps),
    });
}

StructureVerdict total_order_check(const StructureSpec& s, const std::string& rel,
                                   int fragment_period, const Caps& caps) {
    StructureVerdict partial = partial_order_check(s, rel, fragment_period, caps);
    std::vector<AttributeVerdict> details = std::move(partial.details);
    details.push_back(attribute_check(Attribute::Trichotomy, s, rel, fragment_period, caps));
    return collect(std::move(details));
}

}  // namespace vext
