#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "vext/errors.hpp"
#include "vext/extension.hpp"
#include "vext/oracle.hpp"
#include "vext/relation.hpp"
#include "vext/vet_report.hpp"

using namespace vext;

namespace {

UniverseElement ue(std::int64_t k) { return UniverseElement::integer(k); }

std::vector<UniverseElement> ground(int k) {
    std::vector<UniverseElement> u;
    for (int i = 0; i < k; ++i) u.push_back(ue(i));
    return u;
}

// Binary relation over ground(2) selected by a 4-bit mask over (a, b) pairs
// in lexicographic order.
Relation masked_rel(unsigned mask, int universe_size, int arity) {
    std::vector<UniverseElement> u = ground(universe_size);
    std::vector<Relation::Tuple> all = tuples_over(u, arity);
    std::vector<Relation::Tuple> chosen;
    for (std::size_t t = 0; t < all.size(); ++t) {
        if (mask & (1u << t)) chosen.push_back(all[t]);
    }
    return Relation::extensional(u, arity, std::move(chosen),
                                 "mask" + std::to_string(mask));
}

bool is_equality_item(VetItem item) {
    switch (item) {
        case VetItem::II:
        case VetItem::IV:
        case VetItem::V:
        case VetItem::VI:
            return false;
        default:
            return true;
    }
}

}  // namespace

TEST_CASE("fragment enumeration counts canonical classes") {
    FragmentModel m22 = enumerate_fragment(ground(2), 2);
    CHECK(m22.elements.size() == 4);
    CHECK(m22.max_period == 2);
    CHECK(m22.universe.size() == 2);

    CHECK(enumerate_fragment(ground(3), 2).elements.size() == 9);
    CHECK(enumerate_fragment(ground(2), 3).elements.size() == 10);
    CHECK(enumerate_fragment(ground(3), 1).elements.size() == 3);

    // Canonical classes are pairwise distinct.
    std::set<VirtualValue> uniq(m22.elements.begin(), m22.elements.end());
    CHECK(uniq.size() == m22.elements.size());
}

TEST_CASE("expanded-window evaluation matches per-class evaluation") {
    FragmentModel model = enumerate_fragment(ground(2), 2);
    for (unsigned mask = 0; mask < 16; ++mask) {
        Relation p = masked_rel(mask, 2, 2);
        ExtendedRelation xp(p);
        for (const VirtualValue& a : model.elements) {
            for (const VirtualValue& b : model.elements) {
                CHECK(eventually_holds_expanded(p, {a, b}) == xp.holds({a, b}));
            }
        }
    }

    // Numeric comparisons agree along constant-branch classes too.
    for (const VirtualValue& a : model.elements) {
        for (const VirtualValue& b : model.elements) {
            CHECK(eventually_holds_expanded(rel_le_numeric(), {a, b}) ==
                  ExtendedRelation(rel_le_numeric()).holds({a, b}));
            CHECK(eventually_holds_expanded(rel_eq_numeric(), {a, b}) ==
                  ExtendedRelation(rel_eq_numeric()).holds({a, b}));
        }
    }

    gen::Rng rng(55001);
    FragmentModel m3 = enumerate_fragment(ground(3), 2);
    for (int trial = 0; trial < 100; ++trial) {
        Relation p = masked_rel(static_cast<unsigned>(rng.pick(0, (1 << 9) - 1)), 3, 2);
        const VirtualValue& a =
            m3.elements[static_cast<std::size_t>(rng.pick(0, 8))];
        const VirtualValue& b =
            m3.elements[static_cast<std::size_t>(rng.pick(0, 8))];
        CHECK(eventually_holds_expanded(p, {a, b}) == ExtendedRelation(p).holds({a, b}));
    }
}

TEST_CASE("brute force satisfying sets equal the per-class extension") {
    FragmentModel model = enumerate_fragment(ground(2), 2);
    const std::size_t n = model.elements.size();

    for (unsigned mask = 0; mask < 16; ++mask) {
        Relation p = masked_rel(mask, 2, 2);
        ExtendedRelation xp(p);
        std::vector<std::vector<std::size_t>> expected;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (xp.holds({model.elements[i], model.elements[j]})) expected.push_back({i, j});
            }
        }
        CHECK(brute_force_extend(p, model) == expected);
    }

    for (unsigned mask = 0; mask < 4; ++mask) {
        Relation p = masked_rel(mask, 2, 1);
        ExtendedRelation xp(p);
        std::vector<std::vector<std::size_t>> expected;
        for (std::size_t i = 0; i < n; ++i) {
            if (xp.holds({model.elements[i]})) expected.push_back({i});
        }
        CHECK(brute_force_extend(p, model) == expected);
    }
}

TEST_CASE("every commutation rule verifies over the two point model") {
    FragmentModel model = enumerate_fragment(ground(2), 2);
    std::vector<VetReport> reports = vet_exhaustive(model);
    REQUIRE(reports.size() == 16);

    for (const VetReport& r : reports) {
        CHECK(r.checked > 0);
        CHECK(r.seed == 0);
        if (is_equality_item(r.item)) {
            CHECK(r.verdict == VetVerdict::Equal);
            CHECK(r.witnesses.empty());
        } else {
            CHECK(r.verdict == VetVerdict::StrictSubset);
            CHECK(r.witnesses.size() >= 1);
            for (const VetWitness& w : r.witnesses) {
                CHECK(replay_witness(r.item, w));
            }
        }
    }

    CHECK(vet_item_label(VetItem::I) == "(i)");
    CHECK(vet_item_label(VetItem::XIII) == "(xiii)");
    CHECK(vet_item_label(VetItem::ClauseA) == "(a)");
    CHECK(vet_verdict_label(VetVerdict::Equal) == "equal");
    CHECK(vet_verdict_label(VetVerdict::StrictSubset) == "strict-subset");
    CHECK(vet_verdict_label(VetVerdict::Fails) == "fails");
}

TEST_CASE("sampled verification is deterministic for a fixed seed") {
    FragmentModel model = enumerate_fragment(ground(3), 2);
    VetOptions opts;
    opts.exhaustive = false;
    opts.sample_count = 30;
    opts.seed = 99;

    std::vector<VetReport> first = vet_exhaustive(model, opts);
    std::vector<VetReport> second = vet_exhaustive(model, opts);
    REQUIRE(first.size() == second.size());

    bool recorded_seed = false;
    for (std::size_t k = 0; k < first.size(); ++k) {
        const VetReport& a = first[k];
        const VetReport& b = second[k];
        CHECK(a.item == b.item);
        CHECK(a.verdict == b.verdict);
        CHECK(a.checked == b.checked);
        CHECK(a.seed == b.seed);
        REQUIRE(a.witnesses.size() == b.witnesses.size());
        for (std::size_t w = 0; w < a.witnesses.size(); ++w) {
            CHECK(a.witnesses[w].note == b.witnesses[w].note);
            CHECK(a.witnesses[w].args == b.witnesses[w].args);
        }
        CHECK(a.verdict != VetVerdict::Fails);
        recorded_seed = recorded_seed || a.seed == 99;
    }
    CHECK(recorded_seed);
}

TEST_CASE("quantified statements transfer on finite domains") {
    std::vector<UniverseElement> dom = ground(2);

    Relation self_eq = Relation::extensional(dom, 1, {{ue(0)}, {ue(1)}}, "x=x");
    VetReport all_true = transfer_quantifier_check(Quantifier::ForAll, dom, self_eq);
    CHECK(all_true.item == VetItem::ClauseA);
    CHECK(all_true.verdict == VetVerdict::Equal);
    CHECK(all_true.checked > 0);

    Relation is_two = Relation::extensional(dom, 1, {}, "x=2");
    VetReport none = transfer_quantifier_check(Quantifier::Exists, dom, is_two);
    CHECK(none.item == VetItem::ClauseB);
    CHECK(none.verdict == VetVerdict::Equal);

    for (unsigned mask = 0; mask < 4; ++mask) {
        Relation p = masked_rel(mask, 2, 1);
        CHECK(transfer_quantifier_check(Quantifier::Unique, dom, p).verdict ==
              VetVerdict::Equal);
        CHECK(transfer_quantifier_check(Quantifier::ForAll, dom, p).verdict ==
              VetVerdict::Equal);
        CHECK(transfer_quantifier_check(Quantifier::Exists, dom, p).verdict ==
              VetVerdict::Equal);
    }

    CHECK_THROWS_AS(
        transfer_quantifier_check(Quantifier::Exists, dom, masked_rel(0, 2, 2)),
        ArityMismatch);
}
