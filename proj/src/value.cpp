#include "vext/value.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vext/errors.hpp"

namespace vext {

BranchTerm::BranchTerm(UniverseElement e)
    : body_(UniverseElement::atom("")) {
    // Untagged numeric elements collapse into the rational-function form and
    // untagged tuple elements expand into tuples of terms, so every
    // end-equality class of terms has a single structural shape.
    if (e.tag().empty() && e.is_numeric()) {
        body_ = RatFunc(e.rational_value());
    } else if (e.tag().empty() && e.is_tuple()) {
        TupleBody parts;
        parts.reserve(e.tuple_value().size());
        for (const UniverseElement& part : e.tuple_value()) parts.push_back(BranchTerm(part));
        body_ = std::move(parts);
    } else {
        body_ = std::move(e);
    }
}

BranchTerm::BranchTerm(RatFunc f) : body_(std::move(f)) {}

BranchTerm::BranchTerm(Rat constant) : body_(RatFunc(std::move(constant))) {}

BranchTerm BranchTerm::tuple(TupleBody parts) { return BranchTerm(Body(std::move(parts))); }

bool BranchTerm::is_fixed() const {
    if (is_element()) return true;
    if (is_func()) return func().is_constant();
    for (const auto& part : tuple_parts())
        if (!part.is_fixed()) return false;
    return true;
}

std::optional<UniverseElement> BranchTerm::value_at(std::int64_t i) const {
    if (is_element()) return element();
    if (is_func()) {
        auto v = func().eval_at(i);
        if (!v) return std::nullopt;
        return UniverseElement::rational(*v);
    }
    UniverseElement::Tuple vals;
    vals.reserve(tuple_parts().size());
    for (const auto& part : tuple_parts()) {
        auto v = part.value_at(i);
        if (!v) return std::nullopt;
        vals.push_back(std::move(*v));
    }
    return UniverseElement::tuple(std::move(vals));
}

std::optional<Rat> BranchTerm::numeric_at(std::int64_t i) const {
    if (is_func()) return func().eval_at(i);
    if (is_element()) return element().numeric();
    return std::nullopt;
}

bool BranchTerm::operator==(const BranchTerm& other) const {
    return compare(other) == std::strong_ordering::equal;
}

std::strong_ordering BranchTerm::compare(const BranchTerm& other) const {
    if (auto c = body_.index() <=> other.body_.index(); c != 0) return c;
    switch (body_.index()) {
        case 0:
            return element().compare(other.element());
        case 1:
            return func().compare(other.func());
        default: {
            const TupleBody& a = tuple_parts();
            const TupleBody& b = other.tuple_parts();
            if (auto c = a.size() <=> b.size(); c != 0) return c;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (auto c = a[i].compare(b[i]); c != 0) return c;
            return std::strong_ordering::equal;
        }
    }
}

std::string BranchTerm::to_string() const {
    if (is_element()) return element().to_string();
    if (is_func()) return func().to_string();
    std::ostringstream out;
    out << "(";
    const TupleBody& parts = tuple_parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ", ";
        out << parts[i].to_string();
    }
    out << ")";
    return out.str();
}

VirtualValue VirtualValue::canonical(const std::vector<BranchTerm>& prefix,
                                     const std::vector<BranchTerm>& tail, const Caps& caps) {
    if (tail.empty()) throw Error("virtual value needs at least one cyclic branch");
    const std::size_t m = tail.size();
    if (m > static_cast<std::size_t>(caps.max_period)) {
        std::ostringstream msg;
        msg << "cyclic period " << m << " exceeds cap " << caps.max_period;
        throw PeriodLimitExceeded(msg.str());
    }
    // Drop the prefix: index i > L takes tail[(i - L - 1) mod m], so the
    // residue-anchored branch j (covering (i - 1) mod m == j) is
    // tail[(j - L) mod m].
    const std::size_t L = prefix.size();
    const std::size_t shift = (m - L % m) % m;
    std::vector<BranchTerm> anchored;
    anchored.reserve(m);
    for (std::size_t j = 0; j < m; ++j) anchored.push_back(tail[(j + shift) % m]);
    // Reduce to the minimal period: the smallest divisor d of m on which the
    // anchored cycle repeats.
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool repeats = true;
        for (std::size_t j = d; j < m && repeats; ++j)
            repeats = anchored[j] == anchored[j % d];
        if (repeats) {
            anchored.erase(anchored.begin() + static_cast<std::ptrdiff_t>(d), anchored.end());
            break;
        }
    }
    return VirtualValue(std::move(anchored));
}

VirtualValue VirtualValue::cyclic(const std::vector<BranchTerm>& tail, const Caps& caps) {
    return canonical({}, tail, caps);
}

VirtualValue VirtualValue::constant(BranchTerm term) {
    return VirtualValue(std::vector<BranchTerm>{std::move(term)});
}

bool VirtualValue::operator==(const VirtualValue& other) const {
    return branches_ == other.branches_;
}

std::strong_ordering VirtualValue::compare(const VirtualValue& other) const {
    if (auto c = branches_.size() <=> other.branches_.size(); c != 0) return c;
    for (std::size_t i = 0; i < branches_.size(); ++i)
        if (auto c = branches_[i].compare(other.branches_[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string VirtualValue::to_text() const {
    if (is_constant()) return sole_branch().to_string();
    std::ostringstream out;
    out << "cyc{";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i) out << "; ";
        out << branches_[i].to_string();
    }
    out << "}";
    return out.str();
}

VirtualValue embed_const(const UniverseElement& e) {
    return VirtualValue::constant(BranchTerm(e));
}

VirtualValue embed_const(const Rat& q) { return VirtualValue::constant(BranchTerm(q)); }

bool end_equal(const VirtualValue& a, const VirtualValue& b) {
    const std::int64_t m = lcm_i64(a.period(), b.period());
    for (std::int64_t j = 0; j < m; ++j) {
        // Two branch terms agree at all large indices of a residue class only
        // if they are the same term: distinct rational functions differ at
        // all but finitely many integers, and fixed elements compare directly.
        if (!(a.branch(static_cast<int>(j % a.period())) ==
              b.branch(static_cast<int>(j % b.period()))))
            return false;
    }
    return true;
}

namespace {

bool func_eventually_in(const RatFunc& f, const SubsetSpec& set) {
    if (set.is_product()) return false;  // numeric values are never tuples
    if (set.is_finite()) {
        // Only exact identity is allowed against explicit sets: a moving
        // rational-function branch is outside the decidable contract here.
        if (!f.is_constant())
            throw UndecidableMembership(
                "cannot test a non-constant branch against an explicit finite set");
        return set.contains(UniverseElement::rational(*f.constant_value()));
    }
    const auto& pieces = set.interval_list();
    auto lim = f.limit();
    if (!lim) {
        // The branch runs off to an infinity; only an unbounded piece on that
        // side eventually captures it.
        const bool up = f.eventual_sign() == Sign::positive;
        for (const auto& iv : pieces) {
            if (up && !iv.hi) return true;
            if (!up && !iv.lo) return true;
        }
        return false;
    }
    const RatFunc gap = sub(f, RatFunc(*lim));
    const Sign side = gap.eventual_sign();
    if (side == Sign::zero) {
        // The branch is the constant *lim.
        for (const auto& iv : pieces)
            if (iv.contains(*lim)) return true;
        return false;
    }
    if (side == Sign::positive) {
        // Approaches the limit from above: need a piece covering (lim, lim+d).
        for (const auto& iv : pieces) {
            const bool lo_ok = !iv.lo || *iv.lo <= *lim;
            const bool hi_ok = !iv.hi || *lim < *iv.hi;
            if (lo_ok && hi_ok) return true;
        }
        return false;
    }
    // Approaches from below: need a piece covering (lim-d, lim).
    for (const auto& iv : pieces) {
        const bool hi_ok = !iv.hi || *lim <= *iv.hi;
        const bool lo_ok = !iv.lo || *iv.lo < *lim;
        if (lo_ok && hi_ok) return true;
    }
    return false;
}

}  // namespace

bool branch_eventually_in(const BranchTerm& term, const SubsetSpec& set) {
    if (term.is_element()) return set.contains(term.element());
    if (term.is_func()) return func_eventually_in(term.func(), set);
    // Tuple term.
    if (term.is_fixed()) return set.contains(*term.value_at(1));
    if (set.is_finite()) return false;  // a moving tuple escapes any finite set
    if (!set.is_product()) return false;
    const auto& comps = set.components();
    const auto& parts = term.tuple_parts();
    if (comps.size() != parts.size()) return false;
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (!branch_eventually_in(parts[k], comps[k])) return false;
    return true;
}

Membership membership_in(const VirtualValue& v, const SubsetSpec& set) {
    bool any_in = false, any_out = false;
    for (const auto& term : v.branches())
        (branch_eventually_in(term, set) ? any_in : any_out) = true;
    if (any_in && any_out) return Membership::Mixed;
    return any_in ? Membership::EventuallyIn : Membership::EventuallyOut;
}

VirtualValue tuple_join(const std::vector<VirtualValue>& parts, const Caps& caps) {
    if (parts.empty()) throw ArityMismatch("tuple join needs at least one component");
    std::int64_t m = 1;
    for (const auto& p : parts) {
        m = lcm_i64(m, p.period());
        if (m > caps.max_period) {
            std::ostringstream msg;
            msg << "aligned period " << m << " exceeds cap " << caps.max_period;
            throw PeriodLimitExceeded(msg.str());
        }
    }
    std::vector<BranchTerm> joined;
    joined.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        BranchTerm::TupleBody row;
        row.reserve(parts.size());
        for (const auto& p : parts) row.push_back(p.branch(static_cast<int>(j % p.period())));
        joined.push_back(BranchTerm::tuple(std::move(row)));
    }
    return VirtualValue::cyclic(joined, caps);
}

std::vector<VirtualValue> enumerate_cyclic(const std::vector<UniverseElement>& universe,
                                           int max_period, std::size_t size_cap) {
    if (universe.empty() || max_period < 1) return {};
    std::set<VirtualValue> seen;
    std::vector<VirtualValue> out;
    const std::size_t u = universe.size();
    for (int d = 1; d <= max_period; ++d) {
        std::size_t total = 1;
        for (int k = 0; k < d; ++k) {
            if (total > size_cap / u + 1) throw SizeLimit("cyclic fragment enumeration too large");
            total *= u;
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<BranchTerm> branches;
            branches.reserve(idx.size());
            for (std::size_t i : idx) branches.push_back(BranchTerm(universe[i]));
            VirtualValue v = VirtualValue::cyclic(branches);
            if (seen.insert(v).second) {
                out.push_back(std::move(v));
                if (out.size() > size_cap) throw SizeLimit("cyclic fragment enumeration too large");
            }
            std::size_t pos = idx.size();
            while (pos > 0 && idx[pos - 1] + 1 == u) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    return out;
}

std::vector<VirtualValue> tuple_split(const VirtualValue& v, int arity, const Caps& caps) {
    if (arity <= 0) throw ArityMismatch("tuple split needs positive arity");
    for (const auto& b : v.branches()) {
        if (!b.is_tuple() || b.tuple_parts().size() != static_cast<std::size_t>(arity))
            throw TypeError("value is not a cycle of tuples of arity " + std::to_string(arity));
    }
    std::vector<VirtualValue> out;
    out.reserve(static_cast<std::size_t>(arity));
    for (int k = 0; k < arity; ++k) {
        std::vector<BranchTerm> comp;
        comp.reserve(v.branches().size());
        for (const auto& b : v.branches())
            comp.push_back(b.tuple_parts()[static_cast<std::size_t>(k)]);
        out.push_back(VirtualValue::cyclic(comp, caps));
    }
    return out;
}

}  // namespace vext
