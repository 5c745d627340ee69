#include "vext/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vext/errors.hpp"
#include "vext/extension.hpp"

namespace vext {

std::string vet_item_label(VetItem item) {
    switch (item) {
        case VetItem::I: return "(i)";
        case VetItem::II: return "(ii)";
        case VetItem::III: return "(iii)";
        case VetItem::IV: return "(iv)";
        case VetItem::V: return "(v)";
        case VetItem::VI: return "(vi)";
        case VetItem::VII: return "(vii)";
        case VetItem::VIII: return "(viii)";
        case VetItem::IX: return "(ix)";
        case VetItem::X: return "(x)";
        case VetItem::XI: return "(xi)";
        case VetItem::XII: return "(xii)";
        case VetItem::XIII: return "(xiii)";
        case VetItem::ClauseA: return "(a)";
        case VetItem::ClauseB: return "(b)";
        case VetItem::ClauseC: return "(c)";
    }
    return "?";
}

std::string vet_verdict_label(VetVerdict v) {
    switch (v) {
        case VetVerdict::Equal: return "equal";
        case VetVerdict::StrictSubset: return "strict-subset";
        case VetVerdict::Fails: return "fails";
    }
    return "?";
}

FragmentModel enumerate_fragment(std::vector<UniverseElement> universe, int max_period) {
    if (universe.empty() || max_period < 1) {
        throw SizeLimit("fragment model needs a nonempty universe and positive period bound");
    }
    FragmentModel m;
    m.universe = std::move(universe);
    m.max_period = max_period;
    m.elements = enumerate_cyclic(m.universe, max_period);
    return m;
}

bool eventually_holds_expanded(const Relation& base, const std::vector<VirtualValue>& args) {
    if (static_cast<int>(args.size()) != base.arity()) {
        throw ArityMismatch(base.describe() + " expects " + std::to_string(base.arity()) +
                            " arguments");
    }
    std::int64_t m = 1;
    for (const VirtualValue& a : args) m = lcm_i64(m, a.period());
    for (std::int64_t i = m + 1; i <= 2 * m; ++i) {
        Relation::Tuple row;
        row.reserve(args.size());
        bool defined = true;
        for (const VirtualValue& a : args) {
            std::optional<UniverseElement> v = a.term_at(i).value_at(i);
            if (!v) { defined = false; break; }
            row.push_back(std::move(*v));
        }
        if (!defined || !base.holds(row)) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> brute_force_extend(const Relation& p,
                                                         const FragmentModel& model) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = model.elements.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(p.arity()), 0);
    if (n == 0) return out;
    while (true) {
        std::vector<VirtualValue> args;
        args.reserve(idx.size());
        for (std::size_t i : idx) args.push_back(model.elements[i]);
        if (eventually_holds_expanded(p, args)) out.push_back(idx);
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] + 1 == n) idx[--pos] = 0;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return out;
}

namespace {

constexpr int kMaxWitnesses = 4;

VirtualValue embed(const UniverseElement& e) { return VirtualValue::constant(BranchTerm(e)); }

// Relation enumeration by tuple-set bitmask; exhaustive when the count is
// small enough, seeded samples otherwise.
std::vector<Relation> relation_pool(const std::vector<UniverseElement>& universe, int arity,
                                    const VetOptions& opts, std::mt19937_64& rng) {
    std::vector<Relation::Tuple> all = tuples_over(universe, arity);
    if (all.size() >= 60) throw SizeLimit("too many tuples for relation enumeration");
    std::uint64_t count = std::uint64_t{1} << all.size();
    auto from_mask = [&](std::uint64_t mask) {
        std::vector<Relation::Tuple> sel;
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (mask >> b & 1) sel.push_back(all[b]);
        }
        return Relation::extensional(universe, arity, std::move(sel));
    };
    std::vector<Relation> out;
    if (opts.exhaustive || count <= static_cast<std::uint64_t>(opts.sample_count)) {
        if (count > 100000) throw SizeLimit("too many relations for exhaustive enumeration");
        for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(from_mask(mask));
    } else {
        std::uniform_int_distribution<std::uint64_t> dist(0, count - 1);
        for (int i = 0; i < opts.sample_count; ++i) out.push_back(from_mask(dist(rng)));
    }
    return out;
}

std::vector<std::vector<VirtualValue>> arg_tuples(const std::vector<VirtualValue>& elements,
                                                  int arity) {
    std::vector<std::vector<VirtualValue>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    if (elements.empty()) return out;
    while (true) {
        std::vector<VirtualValue> row;
        row.reserve(idx.size());
        for (std::size_t i : idx) row.push_back(elements[i]);
        out.push_back(std::move(row));
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] + 1 == elements.size()) idx[--pos] = 0;
        if (pos == 0) break;
        ++idx[pos - 1];
    }
    return out;
}

struct ItemRun {
    VetReport rep;
    bool violated = false;
    bool strict_seen = false;

    explicit ItemRun(VetItem item, const std::string& model_desc, std::string instances,
                     std::uint64_t seed) {
        rep.item = item;
        rep.verdict = VetVerdict::Equal;
        rep.model = model_desc;
        rep.instances = std::move(instances);
        rep.seed = seed;
    }

    void record(std::vector<Relation> rels, std::vector<VirtualValue> args, std::string note) {
        if (static_cast<int>(rep.witnesses.size()) < kMaxWitnesses) {
            rep.witnesses.push_back({std::move(rels), std::move(args), std::move(note)});
        }
    }

    void violation(std::vector<Relation> rels, std::vector<VirtualValue> args,
                   std::string note) {
        violated = true;
        record(std::move(rels), std::move(args), std::move(note));
    }

    void strict(std::vector<Relation> rels, std::vector<VirtualValue> args, std::string note) {
        strict_seen = true;
        record(std::move(rels), std::move(args), std::move(note));
    }

    VetReport finish() {
        if (violated) {
            rep.verdict = VetVerdict::Fails;
        } else if (strict_seen) {
            rep.verdict = VetVerdict::StrictSubset;
        }
        return std::move(rep);
    }
};

enum class InclusionKind { Complement, Disjunction, Implication, Biconditional };

// Smaller and larger side of the four one-directional rules at one argument
// tuple; the rule asserts small -> large, strictness is large without small.
std::pair<bool, bool> inclusion_sides(InclusionKind kind, const Relation& p, const Relation& q,
                                      const std::vector<VirtualValue>& args, const Caps& caps) {
    switch (kind) {
        case InclusionKind::Complement: {
            bool small = ExtendedRelation(rel_not(p)).holds(args, caps);
            bool large = !ExtendedRelation(p).holds(args, caps);
            return {small, large};
        }
        case InclusionKind::Disjunction: {
            bool small = ExtendedRelation(p).holds(args, caps) ||
                         ExtendedRelation(q).holds(args, caps);
            bool large = ExtendedRelation(rel_or(p, q)).holds(args, caps);
            return {small, large};
        }
        case InclusionKind::Implication: {
            bool small = ExtendedRelation(rel_implies(p, q)).holds(args, caps);
            bool large = !ExtendedRelation(p).holds(args, caps) ||
                         ExtendedRelation(q).holds(args, caps);
            return {small, large};
        }
        case InclusionKind::Biconditional: {
            bool small = ExtendedRelation(rel_iff(p, q)).holds(args, caps);
            bool large = ExtendedRelation(p).holds(args, caps) ==
                         ExtendedRelation(q).holds(args, caps);
            return {small, large};
        }
    }
    return {false, false};
}

bool quantifier_truth(Quantifier q, long long hits, long long total) {
    switch (q) {
        case Quantifier::ForAll: return hits == total;
        case Quantifier::Exists: return hits >= 1;
        case Quantifier::Unique: return hits == 1;
    }
    return false;
}

}  // namespace

std::vector<VetReport> vet_exhaustive(const FragmentModel& model, const VetOptions& opts) {
    const std::vector<UniverseElement>& u = model.universe;
    const std::vector<VirtualValue>& e = model.elements;
    const Caps caps = default_caps();
    std::mt19937_64 rng(opts.seed);
    std::uint64_t recorded_seed = opts.exhaustive ? 0 : opts.seed;

    std::ostringstream md;
    md << "|U|=" << u.size() << ", m=" << model.max_period;
    const std::string model_desc = md.str();

    std::vector<std::vector<Relation>> rels(static_cast<std::size_t>(opts.arity_cap) + 1);
    std::vector<std::vector<std::vector<VirtualValue>>> args(
        static_cast<std::size_t>(opts.arity_cap) + 1);
    for (int a = 1; a <= opts.arity_cap; ++a) {
        rels[static_cast<std::size_t>(a)] = relation_pool(u, a, opts, rng);
        args[static_cast<std::size_t>(a)] = arg_tuples(e, a);
    }
    auto pair_indices = [&](std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        if (opts.exhaustive || n * n <= static_cast<std::size_t>(opts.sample_count)) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
        } else {
            std::uniform_int_distribution<std::size_t> dist(0, n - 1);
            for (int k = 0; k < opts.sample_count; ++k) out.emplace_back(dist(rng), dist(rng));
        }
        return out;
    };

    std::vector<UniverseElement> sorted_u = u;
    std::sort(sorted_u.begin(), sorted_u.end());
    std::vector<std::vector<UniverseElement>> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sorted_u.size()); ++mask) {
        std::vector<UniverseElement> d;
        for (std::size_t b = 0; b < sorted_u.size(); ++b) {
            if (mask >> b & 1) d.push_back(sorted_u[b]);
        }
        subsets.push_back(std::move(d));
    }

    SubsetSpec uspec = SubsetSpec::finite(u);
    std::vector<LiftableFunction> funcs;
    {
        std::vector<std::size_t> img(u.size(), 0);
        while (true) {
            std::vector<LiftableFunction::TableEntry> entries;
            for (std::size_t i = 0; i < u.size(); ++i) entries.push_back({{u[i]}, u[img[i]]});
            funcs.push_back(LiftableFunction::from_table("f" + std::to_string(funcs.size()), 1,
                                                         std::move(entries), uspec, uspec));
            std::size_t pos = img.size();
            while (pos > 0 && img[pos - 1] + 1 == u.size()) img[--pos] = 0;
            if (pos == 0) break;
            ++img[pos - 1];
        }
    }
    auto table_of = [&](const LiftableFunction& f) {
        std::vector<UniverseElement> out;
        out.reserve(u.size());
        for (const UniverseElement& a : u) out.push_back(f.apply_values({a}));
        return out;
    };

    std::vector<VetReport> reports;

    {  // (i) extended equality against equality of classes
        ItemRun run(VetItem::I, model_desc, "equality relation over all model element pairs",
                    recorded_seed);
        Relation eq = rel_equality(u);
        ExtendedRelation xeq(eq);
        for (const VirtualValue& x : e) {
            for (const VirtualValue& y : e) {
                ++run.rep.checked;
                bool lhs = xeq.holds({x, y}, caps);
                bool rhs = x == y;
                if (lhs != rhs) {
                    run.violation({eq}, {x, y},
                                  lhs ? "extended equality holds on distinct classes"
                                      : "extended equality fails on equal classes");
                }
            }
        }
        reports.push_back(run.finish());
    }

    struct IncSpec {
        VetItem item;
        InclusionKind kind;
        bool pairs;
        const char* strict_note;
    };
    const IncSpec inc_items[] = {
        {VetItem::II, InclusionKind::Complement, false,
         "complement of the extension holds here, extension of the complement does not"},
        {VetItem::IV, InclusionKind::Disjunction, true,
         "extension of the disjunction holds here, disjunction of extensions does not"},
        {VetItem::V, InclusionKind::Implication, true,
         "pointwise implication of extensions holds here, extension of the implication does "
         "not"},
        {VetItem::VI, InclusionKind::Biconditional, true,
         "pointwise agreement of extensions holds here, extension of the biconditional does "
         "not"},
    };
    for (const IncSpec& spec : inc_items) {
        std::ostringstream inst;
        inst << (opts.exhaustive ? "all " : "sampled ")
             << (spec.pairs ? "relation pairs" : "relations") << " of arity 1.."
             << opts.arity_cap << " over all argument tuples";
        ItemRun run(spec.item, model_desc, inst.str(), recorded_seed);
        for (int a = 1; a <= opts.arity_cap; ++a) {
            const std::vector<Relation>& pool = rels[static_cast<std::size_t>(a)];
            const auto& rows = args[static_cast<std::size_t>(a)];
            if (spec.pairs) {
                for (auto [i, j] : pair_indices(pool.size())) {
                    const Relation& p = pool[i];
                    const Relation& q = pool[j];
                    for (const auto& row : rows) {
                        ++run.rep.checked;
                        auto [small, large] = inclusion_sides(spec.kind, p, q, row, caps);
                        if (small && !large) {
                            run.violation({p, q}, row, "stated inclusion violated");
                        } else if (!small && large) {
                            run.strict({p, q}, row, spec.strict_note);
                        }
                    }
                }
            } else {
                for (const Relation& p : pool) {
                    for (const auto& row : rows) {
                        ++run.rep.checked;
                        auto [small, large] = inclusion_sides(spec.kind, p, p, row, caps);
                        if (small && !large) {
                            run.violation({p}, row, "stated inclusion violated");
                        } else if (!small && large) {
                            run.strict({p}, row, spec.strict_note);
                        }
                    }
                }
            }
        }
        reports.push_back(run.finish());
    }

    {  // (iii) conjunction commutes
        std::ostringstream inst;
        inst << (opts.exhaustive ? "all " : "sampled ") << "relation pairs of arity 1.."
             << opts.arity_cap << " over all argument tuples";
        ItemRun run(VetItem::III, model_desc, inst.str(), recorded_seed);
        for (int a = 1; a <= opts.arity_cap; ++a) {
            const std::vector<Relation>& pool = rels[static_cast<std::size_t>(a)];
            const auto& rows = args[static_cast<std::size_t>(a)];
            for (auto [i, j] : pair_indices(pool.size())) {
                const Relation& p = pool[i];
                const Relation& q = pool[j];
                Relation pq = rel_and(p, q);
                ExtendedRelation xpq(pq), xp(p), xq(q);
                for (const auto& row : rows) {
                    ++run.rep.checked;
                    bool lhs = xpq.holds(row, caps);
                    bool rhs = xp.holds(row, caps) && xq.holds(row, caps);
                    if (lhs != rhs) {
                        run.violation({p, q}, row,
                                      "extension of the conjunction disagrees with the "
                                      "conjunction of extensions");
                    }
                }
            }
        }
        reports.push_back(run.finish());
    }

    {  // (vii) prefix fixing commutes
        ItemRun run(VetItem::VII, model_desc,
                    "arity-2 relations with each first argument fixed, over all elements",
                    recorded_seed);
        if (opts.arity_cap >= 2) {
            for (const Relation& p : rels[2]) {
                ExtendedRelation xp(p);
                for (const UniverseElement& a : u) {
                    Relation fixed = fix_prefix_args(p, {a});
                    ExtendedRelation xfixed(fixed);
                    for (const VirtualValue& xi : e) {
                        ++run.rep.checked;
                        bool lhs = xfixed.holds({xi}, caps);
                        bool rhs = xp.holds({embed(a), xi}, caps);
                        if (lhs != rhs) {
                            run.violation({p}, {embed(a), xi},
                                          "fixing " + a.to_string() +
                                              " before and after extension disagree");
                        }
                    }
                }
            }
        }
        reports.push_back(run.finish());
    }

    {  // (viii)/(ix)/(x) quantifiers commute
        const std::pair<Quantifier, VetItem> quants[] = {
            {Quantifier::ForAll, VetItem::VIII},
            {Quantifier::Exists, VetItem::IX},
            {Quantifier::Unique, VetItem::X},
        };
        for (auto [q, item] : quants) {
            ItemRun run(item, model_desc,
                        "arity-2 relations quantified over every subset of the ground set",
                        recorded_seed);
            if (opts.arity_cap >= 2) {
                for (const std::vector<UniverseElement>& d : subsets) {
                    SubsetSpec dspec = SubsetSpec::finite(d);
                    std::vector<const VirtualValue*> frag_d;
                    for (const VirtualValue& x : e) {
                        if (ends_in(x, dspec)) frag_d.push_back(&x);
                    }
                    for (const Relation& p : rels[2]) {
                        Relation qd = quantify(q, dspec, p);
                        ExtendedRelation xqd(qd), xp(p);
                        for (const VirtualValue& xi : e) {
                            ++run.rep.checked;
                            bool lhs = xqd.holds({xi}, caps);
                            long long hits = 0;
                            for (const VirtualValue* eta : frag_d) {
                                if (xp.holds({*eta, xi}, caps)) ++hits;
                            }
                            bool rhs = quantifier_truth(
                                q, hits, static_cast<long long>(frag_d.size()));
                            if (lhs != rhs) {
                                run.violation(
                                    {p}, {xi},
                                    "extension of the quantified relation disagrees with "
                                    "quantification over the extended domain " +
                                        dspec.to_string());
                            }
                        }
                    }
                }
            }
            reports.push_back(run.finish());
        }
    }

    {  // (xi) relation precomposed with a function
        ItemRun run(VetItem::XI, model_desc,
                    "unary relations precomposed with every unary function", recorded_seed);
        for (const Relation& p : rels[1]) {
            ExtendedRelation xp(p);
            for (const LiftableFunction& f : funcs) {
                std::vector<Relation::Tuple> sel;
                for (const UniverseElement& a : u) {
                    if (p.holds({f.apply_values({a})})) sel.push_back({a});
                }
                Relation composed = Relation::extensional(u, 1, std::move(sel));
                ExtendedRelation xcomposed(composed);
                ExtendedFunction xf(f);
                for (const VirtualValue& xi : e) {
                    ++run.rep.checked;
                    bool lhs = xcomposed.holds({xi}, caps);
                    bool rhs = xp.holds({xf.apply({xi}, caps)}, caps);
                    if (lhs != rhs) {
                        run.violation({p, composed}, {xi},
                                      "precomposition with " + f.name() +
                                          " does not commute with extension");
                    }
                }
            }
        }
        reports.push_back(run.finish());
    }

    {  // (xii) composition and identity
        ItemRun run(VetItem::XII, model_desc,
                    "all unary function pairs, plus the identity, over all elements",
                    recorded_seed);
        for (const LiftableFunction& f : funcs) {
            std::vector<UniverseElement> ftab = table_of(f);
            ExtendedFunction xf(f);
            for (const LiftableFunction& g : funcs) {
                ExtendedFunction xg(g);
                std::vector<LiftableFunction::TableEntry> entries;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    entries.push_back({{u[i]}, g.apply_values({ftab[i]})});
                }
                ExtendedFunction xh(LiftableFunction::from_table(
                    "g o f", 1, std::move(entries), uspec, uspec));
                for (const VirtualValue& xi : e) {
                    ++run.rep.checked;
                    if (!(xh.apply({xi}, caps) == xg.apply({xf.apply({xi}, caps)}, caps))) {
                        run.violation({}, {xi},
                                      "extension of " + g.name() + " o " + f.name() +
                                          " disagrees with composed extensions");
                    }
                }
            }
        }
        {
            std::vector<LiftableFunction::TableEntry> entries;
            for (const UniverseElement& a : u) entries.push_back({{a}, a});
            ExtendedFunction xid(LiftableFunction::from_table("id", 1, std::move(entries),
                                                              uspec, uspec));
            for (const VirtualValue& xi : e) {
                ++run.rep.checked;
                if (!(xid.apply({xi}, caps) == xi)) {
                    run.violation({}, {xi}, "extension of the identity moved a class");
                }
            }
        }
        reports.push_back(run.finish());
    }

    {  // (xiii) aggregation
        ItemRun run(VetItem::XIII, model_desc,
                    "all unary function pairs aggregated, over all elements", recorded_seed);
        SubsetSpec pair_codomain = SubsetSpec::product({uspec, uspec});
        for (const LiftableFunction& f1 : funcs) {
            std::vector<UniverseElement> t1 = table_of(f1);
            ExtendedFunction xf1(f1);
            for (const LiftableFunction& f2 : funcs) {
                std::vector<UniverseElement> t2 = table_of(f2);
                ExtendedFunction xf2(f2);
                std::vector<LiftableFunction::TableEntry> entries;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    entries.push_back({{u[i]}, UniverseElement::tuple({t1[i], t2[i]})});
                }
                ExtendedFunction xh(LiftableFunction::from_table(
                    "(f1, f2)", 1, std::move(entries), uspec, pair_codomain));
                for (const VirtualValue& xi : e) {
                    ++run.rep.checked;
                    VirtualValue lhs = xh.apply({xi}, caps);
                    VirtualValue rhs = tuple_join(
                        {xf1.apply({xi}, caps), xf2.apply({xi}, caps)}, caps);
                    if (!(lhs == rhs)) {
                        run.violation({}, {xi},
                                      "extension of the aggregate disagrees with the "
                                      "aggregate of extensions");
                    }
                }
            }
        }
        reports.push_back(run.finish());
    }

    {  // clauses (a)/(b)/(c): closed statements transfer
        const std::pair<Quantifier, VetItem> quants[] = {
            {Quantifier::ForAll, VetItem::ClauseA},
            {Quantifier::Exists, VetItem::ClauseB},
            {Quantifier::Unique, VetItem::ClauseC},
        };
        for (auto [q, item] : quants) {
            ItemRun run(item, model_desc,
                        "unary relations quantified over every subset of the ground set",
                        recorded_seed);
            for (const std::vector<UniverseElement>& d : subsets) {
                SubsetSpec dspec = SubsetSpec::finite(d);
                std::vector<const VirtualValue*> frag_d;
                for (const VirtualValue& x : e) {
                    if (ends_in(x, dspec)) frag_d.push_back(&x);
                }
                for (const Relation& p : rels[1]) {
                    ++run.rep.checked;
                    long long base_hits = 0;
                    for (const UniverseElement& a : d) {
                        if (p.holds({a})) ++base_hits;
                    }
                    bool base_truth =
                        quantifier_truth(q, base_hits, static_cast<long long>(d.size()));
                    ExtendedRelation xp(p);
                    long long frag_hits = 0;
                    for (const VirtualValue* eta : frag_d) {
                        if (xp.holds({*eta}, caps)) ++frag_hits;
                    }
                    bool frag_truth =
                        quantifier_truth(q, frag_hits, static_cast<long long>(frag_d.size()));
                    if (base_truth != frag_truth) {
                        run.violation({p}, {},
                                      "statement over " + dspec.to_string() +
                                          " changes truth under extension");
                    }
                }
            }
            reports.push_back(run.finish());
        }
    }

    return reports;
}

bool replay_witness(VetItem item, const VetWitness& w, const Caps& caps) {
    auto rel = [&](std::size_t i) -> const Relation& {
        if (i >= w.relations.size()) {
            throw TypeError("witness does not store enough relations to replay");
        }
        return w.relations[i];
    };
    switch (item) {
        case VetItem::II: {
            auto [small, large] =
                inclusion_sides(InclusionKind::Complement, rel(0), rel(0), w.args, caps);
            return !small && large;
        }
        case VetItem::IV: {
            auto [small, large] =
                inclusion_sides(InclusionKind::Disjunction, rel(0), rel(1), w.args, caps);
            return !small && large;
        }
        case VetItem::V: {
            auto [small, large] =
                inclusion_sides(InclusionKind::Implication, rel(0), rel(1), w.args, caps);
            return !small && large;
        }
        case VetItem::VI: {
            auto [small, large] =
                inclusion_sides(InclusionKind::Biconditional, rel(0), rel(1), w.args, caps);
            return !small && large;
        }
        case VetItem::I: {
            bool lhs = ExtendedRelation(rel(0)).holds(w.args, caps);
            bool rhs = w.args.size() == 2 && w.args[0] == w.args[1];
            return lhs != rhs;
        }
        case VetItem::III: {
            bool lhs = ExtendedRelation(rel_and(rel(0), rel(1))).holds(w.args, caps);
            bool rhs = ExtendedRelation(rel(0)).holds(w.args, caps) &&
                       ExtendedRelation(rel(1)).holds(w.args, caps);
            return lhs != rhs;
        }
        default:
            throw TypeError("witnesses for " + vet_item_label(item) +
                            " are not replayable from stored data");
    }
}

VetReport transfer_quantifier_check(Quantifier q, const std::vector<UniverseElement>& domain,
                                    const Relation& p, int max_period) {
    if (p.arity() != 1) {
        throw ArityMismatch("quantifier transfer check needs a unary relation");
    }
    VetItem item = q == Quantifier::ForAll ? VetItem::ClauseA
                   : q == Quantifier::Exists ? VetItem::ClauseB
                                             : VetItem::ClauseC;
    FragmentModel model = enumerate_fragment(domain, max_period);
    std::ostringstream md;
    md << "|U|=" << domain.size() << ", m=" << max_period;
    ItemRun run(item, md.str(), quantifier_name(q) + " over " + p.describe(), 0);

    long long base_hits = 0;
    for (const UniverseElement& a : domain) {
        if (p.holds({a})) ++base_hits;
    }
    bool base_truth = quantifier_truth(q, base_hits, static_cast<long long>(domain.size()));
    ExtendedRelation xp(p);
    long long frag_hits = 0;
    for (const VirtualValue& eta : model.elements) {
        if (xp.holds({eta})) ++frag_hits;
    }
    bool frag_truth =
        quantifier_truth(q, frag_hits, static_cast<long long>(model.elements.size()));
    run.rep.checked = static_cast<long long>(domain.size() + model.elements.size());
    if (base_truth != frag_truth) {
        run.violation({p}, {}, "statement changes truth under extension");
    }
    return run.finish();
}

}  // namespace vext
