// Release gate for the virtual-extension library. Each criterion prints one
// PASS/FAIL line; the process exits nonzero when any criterion fails.
//
// Criteria:
//   1  every equality-form transfer rule verified exhaustively over |U|=2,
//      periods <= 2, arities <= 2, within 60 seconds
//   2  each of the four inclusion-form rules is strict somewhere, with stored
//      witnesses that replay after a serialization round trip
//   3  an alternating-sign class is order-incomparable with zero both ways
//   4  commutative-ring laws hold exactly; zero divisors exist; division by a
//      zero-branch value is rejected
//   5  eps lies strictly between zero and every positive rational, every
//      rational sits below inf, and <= is a partial order without trichotomy
//   6  attribute verdicts agree between ground structures and their
//      extensions for every small relation and operation, and modular
//      group/ring axioms transfer
//   7  exact infinitesimal arithmetic: eps*inf, standard parts, derivatives
//   8  sampled identities and numeric derivatives at the documented horizon
//      and tolerances
//   9  the expanded-window oracle agrees with per-class evaluation on every
//      small relation and on seeded random samples, within 120 seconds

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "json.hpp"
#include "vext/errors.hpp"
#include "vext/extension.hpp"
#include "vext/function.hpp"
#include "vext/lazy.hpp"
#include "vext/oracle.hpp"
#include "vext/relation.hpp"
#include "vext/serialize.hpp"
#include "vext/structure.hpp"
#include "vext/vet_report.hpp"
#include "vext/vreal.hpp"

using namespace vext;

namespace {

UniverseElement ue(std::int64_t k) { return UniverseElement::integer(k); }

std::vector<UniverseElement> ground(int k) {
    std::vector<UniverseElement> u;
    for (int i = 0; i < k; ++i) u.push_back(ue(i));
    return u;
}

// Extensional relation selected by a bitmask over the lexicographically
// ordered tuples of the given arity.
Relation masked_rel(std::uint64_t mask, int universe_size, int arity) {
    std::vector<UniverseElement> u = ground(universe_size);
    std::vector<Relation::Tuple> all = tuples_over(u, arity);
    std::vector<Relation::Tuple> chosen;
    for (std::size_t t = 0; t < all.size(); ++t) {
        if (mask & (std::uint64_t{1} << t)) chosen.push_back(all[t]);
    }
    return Relation::extensional(u, arity, std::move(chosen),
                                 "mask" + std::to_string(mask));
}

VirtualReal cyc2(std::int64_t a, std::int64_t b) {
    return VirtualReal::cyclic({RatFunc(Rat(a)), RatFunc(Rat(b))});
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

// Collects sub-checks for one criterion; keeps the first failure for the line.
struct Gate {
    bool ok = true;
    int failures = 0;
    std::string first;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ++failures;
        if (ok) {
            ok = false;
            first = what;
        }
    }
};

bool emit(int n, const Gate& g, const std::string& pass_text) {
    if (g.ok) {
        std::cout << "PASS criterion " << n << ": " << pass_text << "\n";
    } else {
        std::cout << "FAIL criterion " << n << ": " << g.first << " ("
                  << g.failures << " failed checks)\n";
    }
    return g.ok;
}

bool inclusion_item(VetItem item) {
    return item == VetItem::II || item == VetItem::IV || item == VetItem::V ||
           item == VetItem::VI;
}

// Criterion 1: run the full machine verification over the two-point universe
// with periods up to 2 and arities up to 2. Every equality-form rule must be
// Equal on every instance, nothing may record a violation, and the run must
// finish within 60 seconds. The reports are shared with criterion 2.
bool criterion1(std::vector<VetReport>& reports) {
    Gate g;
    auto t0 = std::chrono::steady_clock::now();
    FragmentModel model = enumerate_fragment(ground(2), 2);
    reports = vet_exhaustive(model, VetOptions{});
    double dt = seconds_since(t0);

    g.require(reports.size() == 16, "expected 16 rule reports, got " +
                                        std::to_string(reports.size()));
    long long instances = 0;
    int equality_rules = 0;
    for (const VetReport& r : reports) {
        const std::string label = vet_item_label(r.item);
        g.require(r.checked > 0, "rule " + label + " checked no instances");
        instances += r.checked;
        g.require(r.verdict != VetVerdict::Fails,
                  "rule " + label + " recorded a violation");
        if (!inclusion_item(r.item)) {
            ++equality_rules;
            g.require(r.verdict == VetVerdict::Equal,
                      "rule " + label + " is not exact: " +
                          vet_verdict_label(r.verdict));
            g.require(r.witnesses.empty(),
                      "rule " + label + " stored unexpected witnesses");
        }
    }
    g.require(equality_rules == 12, "expected 12 equality-form rules");
    g.require(dt < 60.0, "verification took " + fmt_seconds(dt) + ", budget 60s");

    return emit(1, g,
                "all 12 equality-form transfer rules exact over |U|=2, period<=2 (" +
                    std::to_string(instances) + " instances, " + fmt_seconds(dt) + ")");
}

// Independent reading of a strict-inclusion witness using only extension
// evaluation: the large side must hold at the witness and the small side must
// fail. The relations come from the stored witness itself.
bool witness_shows_strictness(VetItem item, const VetWitness& w, Gate& g) {
    if (item == VetItem::II) {
        if (w.relations.size() < 1) return false;
        ExtendedRelation xp(w.relations[0]);
        ExtendedRelation xnot(rel_not(w.relations[0]));
        return !xp.holds(w.args) && !xnot.holds(w.args);
    }
    if (w.relations.size() < 2) return false;
    ExtendedRelation xp(w.relations[0]);
    ExtendedRelation xq(w.relations[1]);
    bool p = xp.holds(w.args);
    bool q = xq.holds(w.args);
    switch (item) {
        case VetItem::IV:
            return ExtendedRelation(rel_or(w.relations[0], w.relations[1])).holds(w.args) &&
                   !p && !q;
        case VetItem::V:
            return !ExtendedRelation(rel_implies(w.relations[0], w.relations[1]))
                        .holds(w.args) &&
                   (!p || q);
        case VetItem::VI:
            return !ExtendedRelation(rel_iff(w.relations[0], w.relations[1]))
                        .holds(w.args) &&
                   (p == q);
        default:
            g.require(false, "unexpected inclusion rule");
            return false;
    }
}

// Criterion 2: in the same run, each inclusion-form rule (not, or, implies,
// iff) must be strict somewhere, with at least one stored witness that still
// replays after a JSON round trip: the large side holds, the small side fails.
bool criterion2(const std::vector<VetReport>& reports) {
    Gate g;
    int replayed = 0;
    int strict_rules = 0;
    for (const VetReport& r : reports) {
        if (!inclusion_item(r.item)) continue;
        ++strict_rules;
        const std::string label = vet_item_label(r.item);
        g.require(r.verdict == VetVerdict::StrictSubset,
                  "rule " + label + " expected a strict inclusion, got " +
                      vet_verdict_label(r.verdict));
        g.require(!r.witnesses.empty(), "rule " + label + " stored no witnesses");
        for (const VetWitness& w : r.witnesses) {
            nlohmann::json j = vet_witness_to_json(w);
            VetWitness back = vet_witness_from_json(j);
            g.require(back.note == w.note,
                      "rule " + label + " witness note lost in round trip");
            g.require(replay_witness(r.item, back),
                      "rule " + label + " witness does not replay");
            g.require(witness_shows_strictness(r.item, back, g),
                      "rule " + label +
                          " witness fails the direct large-holds/small-fails check");
            ++replayed;
        }
    }
    g.require(strict_rules == 4, "expected 4 inclusion-form rules");

    return emit(2, g,
                "strict inclusions for not/or/implies/iff confirmed; " +
                    std::to_string(replayed) +
                    " stored witnesses replay after a JSON round trip");
}

// Criterion 3: the alternating class cyc[-1, 1] compares as mixed against 0
// in both directions, so neither <= direction holds eventually.
bool criterion3() {
    Gate g;
    VirtualReal alpha = cyc2(-1, 1);
    VirtualReal zero = VirtualReal::constant(0);
    g.require(vr_le(alpha, zero) == EventualTruth::Mixed,
              "cyc[-1, 1] <= 0 should be mixed, not decided");
    g.require(vr_le(zero, alpha) == EventualTruth::Mixed,
              "0 <= cyc[-1, 1] should be mixed, not decided");

    return emit(3, g,
                "cyc{-1; 1} is order-incomparable with 0 in both directions");
}

// Criterion 4: the extension is a commutative ring but not a field or an
// integral domain: cyc[0,1] * cyc[1,0] = 0 with both factors nonzero classes,
// dividing by a zero-branch value throws, and the ring laws hold exactly on
// 10000 random triples with periods up to 4 and degrees up to 4.
bool criterion4() {
    Gate g;
    VirtualReal zero = VirtualReal::constant(0);
    VirtualReal one = VirtualReal::constant(1);
    VirtualReal a = cyc2(0, 1);
    VirtualReal b = cyc2(1, 0);

    g.require(vr_mul(a, b) == zero, "cyc{0; 1} * cyc{1; 0} should be 0");
    g.require(!(a == zero), "cyc{0; 1} must differ from 0 as a class");
    g.require(!(b == zero), "cyc{1; 0} must differ from 0 as a class");

    bool rejected = false;
    try {
        vr_div(one, a);
    } catch (const ZeroBranchDivisor&) {
        rejected = true;
    }
    g.require(rejected, "1 / cyc{0; 1} must be rejected as a zero-branch division");

    gen::Rng rng(40001);
    int trials = 0;
    for (int t = 0; t < 10000 && g.ok; ++t) {
        VirtualReal x = rng.vreal(4, 4);
        VirtualReal y = rng.vreal(4, 4);
        VirtualReal z = rng.vreal(4, 4);
        const std::string at = " at trial " + std::to_string(t);
        g.require(vr_add(x, y) == vr_add(y, x), "addition not commutative" + at);
        g.require(vr_mul(x, y) == vr_mul(y, x), "multiplication not commutative" + at);
        g.require(vr_add(vr_add(x, y), z) == vr_add(x, vr_add(y, z)),
                  "addition not associative" + at);
        g.require(vr_mul(vr_mul(x, y), z) == vr_mul(x, vr_mul(y, z)),
                  "multiplication not associative" + at);
        g.require(vr_mul(x, vr_add(y, z)) == vr_add(vr_mul(x, y), vr_mul(x, z)),
                  "left distributivity fails" + at);
        g.require(vr_mul(vr_add(y, z), x) == vr_add(vr_mul(y, x), vr_mul(z, x)),
                  "right distributivity fails" + at);
        g.require(vr_add(x, zero) == x, "0 is not additively neutral" + at);
        g.require(vr_mul(x, one) == x, "1 is not multiplicatively neutral" + at);
        g.require(vr_add(x, vr_neg(x)) == zero, "additive opposite fails" + at);
        ++trials;
    }

    return emit(4, g,
                "zero divisors exhibited, zero-branch division rejected, ring laws "
                "exact on " + std::to_string(trials) + " random triples");
}

// Criterion 5: eps is strictly between 0 and every sampled positive rational,
// every sampled rational (magnitudes up to 10^12) sits below inf, and <= is
// reflexive, transitive, and antisymmetric on random values while trichotomy
// fails at a stored witness pair.
bool criterion5() {
    Gate g;
    VirtualReal eps = VirtualReal::epsilon();
    VirtualReal inf = VirtualReal::infinity();
    VirtualReal zero = VirtualReal::constant(0);

    g.require(vr_gt(eps, zero) == EventualTruth::EventuallyTrue, "eps > 0 must hold");

    gen::Rng rng(50001);
    for (int t = 0; t < 100; ++t) {
        Rat x = rng.positive_rat(1000000, 1000000);
        g.require(vr_lt(eps, VirtualReal::constant(x)) == EventualTruth::EventuallyTrue,
                  "eps < " + x.str() + " must hold");
    }
    for (int t = 0; t < 100; ++t) {
        Rat x(rng.pick(-1000000000000LL, 1000000000000LL), rng.pick(1, 1000000));
        g.require(vr_lt(VirtualReal::constant(x), inf) == EventualTruth::EventuallyTrue,
                  x.str() + " < inf must hold");
    }

    int antisym_hits = 0;
    gen::Rng rng2(50002);
    for (int t = 0; t < 10000 && g.ok; ++t) {
        const std::string at = " at trial " + std::to_string(t);
        VirtualReal v = rng2.vreal(4, 3);
        g.require(vr_le(v, v) == EventualTruth::EventuallyTrue, "reflexivity fails" + at);

        // v <= v + s1^2 <= v + s1^2 + s2^2 by construction; the chain must close.
        VirtualReal s1 = rng2.vreal(2, 2);
        VirtualReal s2 = rng2.vreal(2, 2);
        VirtualReal mid = vr_add(v, vr_mul(s1, s1));
        VirtualReal top = vr_add(mid, vr_mul(s2, s2));
        bool lo = vr_le(v, mid) == EventualTruth::EventuallyTrue;
        bool hi = vr_le(mid, top) == EventualTruth::EventuallyTrue;
        g.require(lo && hi, "squares should be eventually nonnegative" + at);
        if (lo && hi) {
            g.require(vr_le(v, top) == EventualTruth::EventuallyTrue,
                      "transitivity fails" + at);
        }

        VirtualReal w = (t % 4 == 0) ? v : rng2.vreal(4, 3);
        if (vr_le(v, w) == EventualTruth::EventuallyTrue &&
            vr_le(w, v) == EventualTruth::EventuallyTrue) {
            ++antisym_hits;
            g.require(v == w, "antisymmetry fails" + at);
        }
    }
    g.require(antisym_hits >= 100, "antisymmetry premise was rarely exercised: " +
                                       std::to_string(antisym_hits) + " hits");

    // Trichotomy fails: store the witness pair, reload it, and re-decide.
    VirtualReal p = cyc2(0, 1);
    VirtualReal q = cyc2(1, 0);
    EventualTruth lt = vr_lt(p, q);
    EventualTruth eq = vr_eq(p, q);
    EventualTruth gt = vr_gt(p, q);
    g.require(lt != EventualTruth::EventuallyTrue &&
                  eq != EventualTruth::EventuallyTrue &&
                  gt != EventualTruth::EventuallyTrue,
              "trichotomy unexpectedly holds at the witness pair");
    nlohmann::json stored = {{"a", value_to_json(p.value())},
                             {"b", value_to_json(q.value())}};
    VirtualReal pa(value_from_json(stored["a"]));
    VirtualReal qb(value_from_json(stored["b"]));
    g.require(vr_lt(pa, qb) == lt && vr_eq(pa, qb) == eq && vr_gt(pa, qb) == gt,
              "stored trichotomy witness does not replay");

    return emit(5, g,
                "eps strictly between 0 and 100 positive rationals, 100 rationals "
                "below inf, <= is a partial order on 10000 trials, trichotomy fails "
                "at " + p.to_text() + " vs " + q.to_text());
}

// Direct readings of relation attributes from the 4-bit mask, used as an
// independent check on the base side of each verdict.
bool mask_bit(unsigned mask, int a, int b) { return (mask >> (a * 2 + b)) & 1u; }

bool mask_attr(unsigned mask, Attribute attr) {
    switch (attr) {
        case Attribute::Reflexive:
            return mask_bit(mask, 0, 0) && mask_bit(mask, 1, 1);
        case Attribute::Symmetric:
            return mask_bit(mask, 0, 1) == mask_bit(mask, 1, 0);
        case Attribute::Transitive:
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c)
                        if (mask_bit(mask, a, b) && mask_bit(mask, b, c) &&
                            !mask_bit(mask, a, c))
                            return false;
            return true;
        case Attribute::Antisymmetric:
            return !(mask_bit(mask, 0, 1) && mask_bit(mask, 1, 0));
        default:
            return false;
    }
}

// Output table of a binary operation on {0, 1} from a 4-bit mask.
int op_out(unsigned mask, int a, int b) { return (mask >> (a * 2 + b)) & 1u; }

// Criterion 6: for every binary relation and operation on a two-point set,
// the attribute verdicts agree between the ground structure and its
// extension, with the base side cross-checked against the mask directly;
// (Z/4, +) passes the group check and (Z/6, +, *) passes the ring check on
// both tiers.
bool criterion6() {
    Gate g;

    const Attribute rel_attrs[] = {Attribute::Reflexive, Attribute::Symmetric,
                                   Attribute::Transitive, Attribute::Antisymmetric};
    for (unsigned mask = 0; mask < 16; ++mask) {
        StructureSpec s;
        s.name = "rel-mask" + std::to_string(mask);
        s.elements = ground(2);
        s.carrier = SubsetSpec::finite(s.elements);
        s.relations.emplace("order", masked_rel(mask, 2, 2));
        for (Attribute attr : rel_attrs) {
            AttributeVerdict v = attribute_check(attr, s);
            const std::string where =
                attribute_name(attr) + " on relation mask " + std::to_string(mask);
            g.require(v.base == mask_attr(mask, attr),
                      where + ": base verdict contradicts the mask");
            g.require(v.agrees(), where + ": ground and extension disagree");
        }
    }

    std::vector<Relation::Tuple> pairs = tuples_over(ground(2), 2);
    SubsetSpec two = SubsetSpec::finite(ground(2));
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<LiftableFunction::TableEntry> rows;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            rows.push_back({pairs[t], ue((mask >> t) & 1u)});
        }
        StructureSpec s;
        s.name = "op-mask" + std::to_string(mask);
        s.elements = ground(2);
        s.carrier = two;
        s.operations.emplace(
            "+", LiftableFunction::from_table("op" + std::to_string(mask), 2,
                                              std::move(rows),
                                              SubsetSpec::product({two, two}), two));
        const std::string where = " on operation mask " + std::to_string(mask);

        bool assoc = true;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    if (op_out(mask, op_out(mask, a, b), c) !=
                        op_out(mask, a, op_out(mask, b, c)))
                        assoc = false;
        AttributeVerdict va = attribute_check(Attribute::Associative, s, "+");
        g.require(va.base == assoc, "associativity base verdict contradicts the mask" + where);
        g.require(va.agrees(), "associativity disagrees" + where);

        bool comm = op_out(mask, 0, 1) == op_out(mask, 1, 0);
        AttributeVerdict vc = attribute_check(Attribute::Commutative, s, "+");
        g.require(vc.base == comm, "commutativity base verdict contradicts the mask" + where);
        g.require(vc.agrees(), "commutativity disagrees" + where);

        for (int e = 0; e < 2; ++e) {
            StructureSpec se = s;
            se.distinguished.emplace("zero", ue(e));
            bool right = op_out(mask, e, 0) == 0 && op_out(mask, e, 1) == 1;
            bool left = op_out(mask, 0, e) == 0 && op_out(mask, 1, e) == 1;
            AttributeVerdict vr = attribute_check(Attribute::RightNeutral, se, "+");
            AttributeVerdict vl = attribute_check(Attribute::LeftNeutral, se, "+");
            const std::string cand = ", candidate " + std::to_string(e) + where;
            g.require(vr.base == right, "right-neutral base verdict contradicts the mask" + cand);
            g.require(vl.base == left, "left-neutral base verdict contradicts the mask" + cand);
            g.require(vr.agrees(), "right-neutral disagrees" + cand);
            g.require(vl.agrees(), "left-neutral disagrees" + cand);
        }
    }

    StructureVerdict g4 = group_check(zmod(4));
    g.require(g4.base, "(Z/4, +) fails the group laws on the ground tier");
    g.require(g4.extended, "(Z/4, +) fails the group laws on the extension");
    for (const AttributeVerdict& d : g4.details) {
        g.require(d.agrees(), "(Z/4, +) " + attribute_name(d.attr) + " disagrees");
    }

    StructureVerdict r6 = ring_check(zmod(6));
    g.require(r6.base, "(Z/6, +, *) fails the ring laws on the ground tier");
    g.require(r6.extended, "(Z/6, +, *) fails the ring laws on the extension");
    for (const AttributeVerdict& d : r6.details) {
        g.require(d.agrees(), "(Z/6, +, *) " + attribute_name(d.attr) + " disagrees");
    }

    return emit(6, g,
                "ground/extension verdicts agree for all 16 binary relations and "
                "16 binary operations on {0, 1}; (Z/4, +) and (Z/6, +, *) transfer");
}

// Criterion 7: exact arithmetic with infinite and infinitesimal quantities:
// eps*inf = 1, st(1 + eps + eps^2) = 1, and the infinitesimal-quotient
// derivative is exact at rational points.
bool criterion7() {
    Gate g;
    VirtualReal eps = VirtualReal::epsilon();
    VirtualReal inf = VirtualReal::infinity();
    VirtualReal one = VirtualReal::constant(1);

    g.require(vr_mul(eps, inf) == one, "eps * inf should be exactly 1");

    StandardPart st = standard_part(vr_add(one, vr_add(eps, vr_mul(eps, eps))));
    g.require(st.status == StStatus::Defined && st.value && *st.value == Rat(1),
              "st(1 + eps + eps^2) should be exactly 1, got " + st.describe());

    StandardPart d1 = derivative_exact(
        [](const VirtualReal& x) { return vr_mul(x, x); }, Rat(3));
    g.require(d1.status == StStatus::Defined && d1.value && *d1.value == Rat(6),
              "d/dx x^2 at 3 should be 6, got " + d1.describe());
    g.require(d1.describe() == "6 (exact)",
              "derivative report should read \"6 (exact)\", got " + d1.describe());

    StandardPart d2 = derivative_exact(
        [](const VirtualReal& x) { return vr_sub(vr_mul(x, vr_mul(x, x)), x); },
        Rat(2));
    g.require(d2.status == StStatus::Defined && d2.value && *d2.value == Rat(11),
              "d/dx (x^3 - x) at 2 should be 11, got " + d2.describe());

    return emit(7, g,
                "eps*inf = 1, st(1 + eps + eps^2) = 1, d/dx x^2 at 3 = 6 and "
                "d/dx (x^3 - x) at 2 = 11, all exact");
}

// Criterion 8: the sampling tier verifies sin^2 + cos^2 = 1 to the default
// horizon 10000 at tolerance 1e-9 on an infinite, a cyclic, and a convergent
// class, and numeric derivatives agree with a central-difference oracle and
// the closed-form values within 1e-6.
bool criterion8() {
    Gate g;
    VirtualReal one = VirtualReal::constant(1);
    std::vector<VirtualReal> alphas = {
        VirtualReal::infinity(),
        VirtualReal::cyclic({RatFunc(Rat(1)), RatFunc(Rat(2))}),
        VirtualReal::cyclic(
            {RatFunc(gen::poly_of({1, 1}), gen::poly_of({0, 1}))}),  // (n+1)/n
    };
    for (const VirtualReal& alpha : alphas) {
        LazySeq s = lift_value_fn("sin", alpha);
        LazySeq c = lift_value_fn("cos", alpha);
        Truth3 t = check_identity(lazy_add(lazy_mul(s, s), lazy_mul(c, c)),
                                  lazy_view(one));
        g.require(t.kind == Truth3::Kind::TrueUpTo && t.horizon == 10000,
                  "sin^2 + cos^2 = 1 not confirmed on " + alpha.to_text() + ": " +
                      t.describe());
        g.require(t.describe() == "true (checked to H=10000, tol=1e-9)",
                  "unexpected verdict wording on " + alpha.to_text() + ": " +
                      t.describe());
    }

    const double h = 1e-5;
    auto central = [&](const std::function<double(double)>& f, double x0) {
        return (f(x0 + h) - f(x0 - h)) / (2 * h);
    };

    auto fsin = [](double x) { return std::sin(x); };
    StNumericResult ds = derivative_numeric(fsin, 0.0);
    g.require(ds.status == StNumericStatus::Converged,
              "numeric derivative of sin at 0 did not converge");
    g.require(std::fabs(ds.value - 1.0) <= 1e-6,
              "numeric derivative of sin at 0 misses 1 by more than 1e-6");
    g.require(std::fabs(ds.value - central(fsin, 0.0)) <= 1e-6,
              "numeric derivative of sin at 0 disagrees with central differences");

    auto flog = [](double x) { return std::log(x); };
    StNumericResult dl = derivative_numeric(flog, 2.0);
    g.require(dl.status == StNumericStatus::Converged,
              "numeric derivative of ln at 2 did not converge");
    g.require(std::fabs(dl.value - 0.5) <= 1e-6,
              "numeric derivative of ln at 2 misses 0.5 by more than 1e-6");
    g.require(std::fabs(dl.value - central(flog, 2.0)) <= 1e-6,
              "numeric derivative of ln at 2 disagrees with central differences");

    return emit(8, g,
                "sin^2 + cos^2 = 1 on three classes to H=10000 at tol 1e-9; "
                "numeric derivatives of sin at 0 and ln at 2 within 1e-6");
}

// Satisfying set of the extension over the model by per-class evaluation, in
// lexicographic index order: the path brute_force_extend must reproduce.
std::vector<std::vector<std::size_t>> per_class_extend(const Relation& p,
                                                       const FragmentModel& model) {
    ExtendedRelation xp(p);
    const std::size_t n = model.elements.size();
    const int arity = p.arity();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    while (true) {
        std::vector<VirtualValue> args;
        args.reserve(idx.size());
        for (std::size_t i : idx) args.push_back(model.elements[i]);
        if (xp.holds(args)) out.push_back(idx);
        int pos = arity - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// Criterion 9: the expanded-window oracle agrees with per-class evaluation on
// every binary relation over two and three points (16 and 512 masks), plus
// 200 seeded random ternary relations over three points, within 120 seconds.
bool criterion9() {
    Gate g;
    auto t0 = std::chrono::steady_clock::now();
    long long tuples = 0;

    FragmentModel m2 = enumerate_fragment(ground(2), 2);
    for (std::uint64_t mask = 0; mask < 16 && g.ok; ++mask) {
        Relation p = masked_rel(mask, 2, 2);
        auto brute = brute_force_extend(p, m2);
        auto expected = per_class_extend(p, m2);
        tuples += 16;
        g.require(brute == expected,
                  "oracle mismatch on |U|=2 mask " + std::to_string(mask));
    }

    FragmentModel m3 = enumerate_fragment(ground(3), 2);
    for (std::uint64_t mask = 0; mask < 512 && g.ok; ++mask) {
        Relation p = masked_rel(mask, 3, 2);
        auto brute = brute_force_extend(p, m3);
        auto expected = per_class_extend(p, m3);
        tuples += 81;
        g.require(brute == expected,
                  "oracle mismatch on |U|=3 mask " + std::to_string(mask));
    }

    std::mt19937_64 engine(2026);
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << 27) - 1);
    for (int t = 0; t < 200 && g.ok; ++t) {
        std::uint64_t mask = dist(engine);
        Relation p = masked_rel(mask, 3, 3);
        auto brute = brute_force_extend(p, m3);
        auto expected = per_class_extend(p, m3);
        tuples += 729;
        g.require(brute == expected, "oracle mismatch on seeded ternary mask " +
                                         std::to_string(mask));
    }

    double dt = seconds_since(t0);
    g.require(dt < 120.0, "oracle comparison took " + fmt_seconds(dt) + ", budget 120s");

    return emit(9, g,
                "expanded-window oracle matches per-class evaluation on 16 + 512 "
                "exhaustive and 200 seeded relations (" + std::to_string(tuples) +
                    " tuples, " + fmt_seconds(dt) + ")");
}

}  // namespace

int main() {
    int passed = 0;

    std::vector<VetReport> reports;
    passed += criterion1(reports) ? 1 : 0;
    passed += criterion2(reports) ? 1 : 0;
    passed += criterion3() ? 1 : 0;
    passed += criterion4() ? 1 : 0;
    passed += criterion5() ? 1 : 0;
    passed += criterion6() ? 1 : 0;
    passed += criterion7() ? 1 : 0;
    passed += criterion8() ? 1 : 0;
    passed += criterion9() ? 1 : 0;

    std::cout << "acceptance: " << passed << "/9 criteria passed" << std::endl;
    return passed == 9 ? 0 : 1;
}
