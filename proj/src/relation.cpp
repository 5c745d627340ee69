#include "vext/relation.hpp"

#include <algorithm>
#include <sstream>

#include "vext/errors.hpp"

namespace vext {

namespace {

bool tuple_less(const Relation::Tuple& a, const Relation::Tuple& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = a[i].compare(b[i]);
        if (c != 0) return c == std::strong_ordering::less;
    }
    return false;
}

bool tuple_equal(const Relation::Tuple& a, const Relation::Tuple& b) {
    return !tuple_less(a, b) && !tuple_less(b, a);
}

// Truth of one relation on one residue class, routing fixed terms through the
// pointwise test. Shared by the connective and quantifier combinators.
bool class_truth(const Relation& r, const std::vector<BranchTerm>& terms) {
    return r.eventually_on_class(terms);
}

}  // namespace

Relation Relation::extensional(std::vector<UniverseElement> universe, int arity,
                               std::vector<Tuple> tuples, std::string name) {
    if (arity < 1) throw ArityMismatch("relation arity must be at least 1");
    for (const auto& t : tuples)
        if (t.size() != static_cast<std::size_t>(arity))
            throw ArityMismatch("tuple length does not match relation arity");
    std::sort(tuples.begin(), tuples.end(), tuple_less);
    tuples.erase(std::unique(tuples.begin(), tuples.end(), tuple_equal), tuples.end());
    std::sort(universe.begin(), universe.end(),
              [](const UniverseElement& a, const UniverseElement& b) { return a < b; });
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    Relation r(arity, std::move(name));
    r.extensional_ = ExtBody{std::move(universe), std::move(tuples)};
    return r;
}

Relation Relation::predicate(int arity, Predicate pred, std::string name) {
    if (arity < 1) throw ArityMismatch("relation arity must be at least 1");
    if (!pred) throw Error("relation predicate must be a total test");
    Relation r(arity, std::move(name));
    r.pred_ = std::move(pred);
    return r;
}

Relation Relation::predicate_with_hook(int arity, Predicate pred, EventualHook hook,
                                       std::string name) {
    Relation r = predicate(arity, std::move(pred), std::move(name));
    r.hook_ = std::move(hook);
    return r;
}

bool Relation::holds(const Tuple& args) const {
    if (args.size() != static_cast<std::size_t>(arity_))
        throw ArityMismatch("relation " + describe() + " applied to " +
                            std::to_string(args.size()) + " arguments");
    if (extensional_) {
        return std::binary_search(extensional_->tuples.begin(), extensional_->tuples.end(), args,
                                  tuple_less);
    }
    return pred_(args);
}

bool Relation::eventually_on_class(const std::vector<BranchTerm>& terms) const {
    if (terms.size() != static_cast<std::size_t>(arity_))
        throw ArityMismatch("relation " + describe() + " applied to " +
                            std::to_string(terms.size()) + " branch terms");
    bool fixed = true;
    for (const auto& t : terms) fixed = fixed && t.is_fixed();
    if (fixed) {
        Tuple values;
        values.reserve(terms.size());
        for (const auto& t : terms) values.push_back(*t.value_at(1));
        return holds(values);
    }
    if (hook_) return hook_(terms);
    throw UndecidableBranch("relation " + describe() +
                            " cannot decide a moving branch eventually");
}

std::string Relation::describe() const {
    if (!name_.empty()) return name_;
    std::ostringstream out;
    if (extensional_) {
        out << "{";
        for (std::size_t i = 0; i < extensional_->tuples.size(); ++i) {
            if (i) out << ", ";
            const auto& t = extensional_->tuples[i];
            if (t.size() == 1) {
                out << t[0].to_string();
            } else {
                out << "(";
                for (std::size_t k = 0; k < t.size(); ++k) {
                    if (k) out << ",";
                    out << t[k].to_string();
                }
                out << ")";
            }
        }
        out << "}";
    } else {
        out << "<predicate/" << arity_ << ">";
    }
    return out.str();
}

std::vector<Relation::Tuple> tuples_over(const std::vector<UniverseElement>& universe,
                                         int arity) {
    std::vector<Relation::Tuple> out;
    if (arity < 1) return out;
    out.push_back({});
    for (int k = 0; k < arity; ++k) {
        std::vector<Relation::Tuple> next;
        next.reserve(out.size() * universe.size());
        for (const auto& partial : out) {
            for (const auto& e : universe) {
                Relation::Tuple t = partial;
                t.push_back(e);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

Relation rel_equality(std::vector<UniverseElement> universe) {
    std::vector<Relation::Tuple> diag;
    diag.reserve(universe.size());
    for (const auto& e : universe) diag.push_back({e, e});
    return Relation::extensional(std::move(universe), 2, std::move(diag), "eq");
}

namespace {

RatFunc term_as_func(const BranchTerm& t) {
    if (t.is_func()) return t.func();
    if (t.is_element()) {
        auto q = t.element().numeric();
        if (q) return RatFunc(*q);
    }
    throw UndecidableBranch("numeric relation applied to a non-numeric term " + t.to_string());
}

std::optional<Rat> tuple_numeric(const UniverseElement& e) { return e.numeric(); }

Relation numeric_comparison(std::string name, std::function<bool(Sign)> accept) {
    auto pred = [accept](const Relation::Tuple& t) {
        auto a = tuple_numeric(t[0]), b = tuple_numeric(t[1]);
        if (!a || !b) throw TypeError("numeric comparison applied to non-numeric elements");
        Sign s = *a < *b ? Sign::negative : (*b < *a ? Sign::positive : Sign::zero);
        return accept(s);
    };
    auto hook = [accept](const std::vector<BranchTerm>& terms) {
        const RatFunc diff = sub(term_as_func(terms[0]), term_as_func(terms[1]));
        return accept(diff.eventual_sign());
    };
    return Relation::predicate_with_hook(2, pred, hook, std::move(name));
}

}  // namespace

Relation rel_eq_numeric() {
    return numeric_comparison("=", [](Sign s) { return s == Sign::zero; });
}

Relation rel_lt_numeric() {
    return numeric_comparison("<", [](Sign s) { return s == Sign::negative; });
}

Relation rel_le_numeric() {
    return numeric_comparison("<=", [](Sign s) { return s != Sign::positive; });
}

Relation rel_member(SubsetSpec set) {
    auto pred = [set](const Relation::Tuple& t) { return set.contains(t[0]); };
    auto hook = [set](const std::vector<BranchTerm>& terms) {
        return branch_eventually_in(terms[0], set);
    };
    return Relation::predicate_with_hook(1, pred, hook, "member of " + set.to_string());
}

namespace {

template <typename Pointwise, typename Eventual>
Relation combined(int arity, std::string name, Pointwise pointwise, Eventual eventual) {
    return Relation::predicate_with_hook(
        arity, [pointwise](const Relation::Tuple& t) { return pointwise(t); },
        [eventual](const std::vector<BranchTerm>& terms) { return eventual(terms); },
        std::move(name));
}

void require_same_arity(const Relation& p, const Relation& q) {
    if (p.arity() != q.arity())
        throw ArityMismatch("connective over relations of arities " +
                            std::to_string(p.arity()) + " and " + std::to_string(q.arity()));
}

}  // namespace

Relation rel_not(const Relation& p) {
    if (p.is_extensional()) {
        std::vector<Relation::Tuple> rest;
        for (auto& t : tuples_over(p.universe(), p.arity()))
            if (!p.holds(t)) rest.push_back(std::move(t));
        return Relation::extensional(p.universe(), p.arity(), std::move(rest),
                                     "not " + p.describe());
    }
    // On each residue class the component truth is eventually constant, so
    // negation commutes with "eventually" there.
    return combined(
        p.arity(), "not " + p.describe(),
        [p](const Relation::Tuple& t) { return !p.holds(t); },
        [p](const std::vector<BranchTerm>& terms) { return !class_truth(p, terms); });
}

namespace {

template <typename Conn>
Relation connective(const Relation& p, const Relation& q, const std::string& word, Conn conn) {
    require_same_arity(p, q);
    if (p.is_extensional() && q.is_extensional() && p.universe() == q.universe()) {
        std::vector<Relation::Tuple> kept;
        for (auto& t : tuples_over(p.universe(), p.arity()))
            if (conn(p.holds(t), q.holds(t))) kept.push_back(std::move(t));
        return Relation::extensional(p.universe(), p.arity(), std::move(kept),
                                     "(" + p.describe() + " " + word + " " + q.describe() + ")");
    }
    return combined(
        p.arity(), "(" + p.describe() + " " + word + " " + q.describe() + ")",
        [p, q, conn](const Relation::Tuple& t) { return conn(p.holds(t), q.holds(t)); },
        [p, q, conn](const std::vector<BranchTerm>& terms) {
            return conn(class_truth(p, terms), class_truth(q, terms));
        });
}

}  // namespace

Relation rel_and(const Relation& p, const Relation& q) {
    return connective(p, q, "and", [](bool a, bool b) { return a && b; });
}

Relation rel_or(const Relation& p, const Relation& q) {
    return connective(p, q, "or", [](bool a, bool b) { return a || b; });
}

Relation rel_implies(const Relation& p, const Relation& q) {
    return connective(p, q, "=>", [](bool a, bool b) { return !a || b; });
}

Relation rel_iff(const Relation& p, const Relation& q) {
    return connective(p, q, "<=>", [](bool a, bool b) { return a == b; });
}

Relation fix_prefix_args(const Relation& p, const Relation::Tuple& prefix) {
    const int k = static_cast<int>(prefix.size());
    if (k < 1 || k >= p.arity())
        throw ArityMismatch("prefix of length " + std::to_string(k) +
                            " against relation arity " + std::to_string(p.arity()));
    const int rest = p.arity() - k;
    if (p.is_extensional()) {
        std::vector<Relation::Tuple> kept;
        for (const auto& t : p.tuples()) {
            bool match = true;
            for (int i = 0; i < k && match; ++i) match = t[static_cast<std::size_t>(i)] == prefix[static_cast<std::size_t>(i)];
            if (match) kept.emplace_back(t.begin() + k, t.end());
        }
        return Relation::extensional(p.universe(), rest, std::move(kept),
                                     p.describe() + " with fixed prefix");
    }
    return combined(
        rest, p.describe() + " with fixed prefix",
        [p, prefix](const Relation::Tuple& t) {
            Relation::Tuple full = prefix;
            full.insert(full.end(), t.begin(), t.end());
            return p.holds(full);
        },
        [p, prefix](const std::vector<BranchTerm>& terms) {
            std::vector<BranchTerm> full;
            full.reserve(prefix.size() + terms.size());
            for (const auto& e : prefix) full.emplace_back(e);
            full.insert(full.end(), terms.begin(), terms.end());
            return class_truth(p, full);
        });
}

std::vector<UniverseElement> enumerate_domain(const SubsetSpec& domain) {
    if (domain.is_finite()) return domain.finite_elements();
    if (domain.is_product()) {
        std::vector<UniverseElement> acc{UniverseElement::tuple({})};
        for (const auto& comp : domain.components()) {
            auto part = enumerate_domain(comp);
            std::vector<UniverseElement> next;
            next.reserve(acc.size() * part.size());
            for (const auto& base : acc) {
                for (const auto& e : part) {
                    auto parts = base.tuple_value();
                    parts.push_back(e);
                    next.push_back(UniverseElement::tuple(std::move(parts)));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }
    throw NonEnumerableDomain("cannot enumerate " + domain.to_string());
}

namespace {

bool count_matches(Quantifier q, int hits, int total) {
    switch (q) {
        case Quantifier::ForAll: return hits == total;
        case Quantifier::Exists: return hits >= 1;
        default: return hits == 1;
    }
}

}  // namespace

Relation quantify(Quantifier q, const SubsetSpec& domain, const Relation& p) {
    if (p.arity() < 2)
        throw ArityMismatch("quantifying the first entry needs relation arity >= 2");
    const auto elems = enumerate_domain(domain);
    const int rest = p.arity() - 1;
    const std::string name =
        quantifier_name(q) + " y in " + domain.to_string() + ": " + p.describe();
    if (p.is_extensional()) {
        std::vector<Relation::Tuple> kept;
        for (auto& t : tuples_over(p.universe(), rest)) {
            int hits = 0;
            for (const auto& y : elems) {
                Relation::Tuple full{y};
                full.insert(full.end(), t.begin(), t.end());
                if (p.holds(full)) ++hits;
            }
            if (count_matches(q, hits, static_cast<int>(elems.size())))
                kept.push_back(std::move(t));
        }
        return Relation::extensional(p.universe(), rest, std::move(kept), name);
    }
    return combined(
        rest, name,
        [p, elems, q](const Relation::Tuple& t) {
            int hits = 0;
            for (const auto& y : elems) {
                Relation::Tuple full{y};
                full.insert(full.end(), t.begin(), t.end());
                if (p.holds(full)) ++hits;
            }
            return count_matches(q, hits, static_cast<int>(elems.size()));
        },
        [p, elems, q](const std::vector<BranchTerm>& terms) {
            // Each y's truth is eventually constant on the class, so the
            // satisfying count is eventually constant and the quantifier over
            // the finite domain commutes with "eventually".
            int hits = 0;
            for (const auto& y : elems) {
                std::vector<BranchTerm> full;
                full.reserve(terms.size() + 1);
                full.emplace_back(y);
                full.insert(full.end(), terms.begin(), terms.end());
                if (class_truth(p, full)) ++hits;
            }
            return count_matches(q, hits, static_cast<int>(elems.size()));
        });
}

std::string quantifier_name(Quantifier q) {
    switch (q) {
        case Quantifier::ForAll: return "forall";
        case Quantifier::Exists: return "exists";
        default: return "exists!";
    }
}

}  // namespace vext
