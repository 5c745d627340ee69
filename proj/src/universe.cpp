#include "vext/universe.hpp"

#include <algorithm>
#include <sstream>

#include "vext/errors.hpp"

namespace vext {

UniverseElement UniverseElement::rational(Rat v, std::string tag) {
    return UniverseElement(std::move(tag), Payload(std::move(v)));
}

UniverseElement UniverseElement::integer(std::int64_t v, std::string tag) {
    return UniverseElement(std::move(tag), Payload(Rat(v)));
}

UniverseElement UniverseElement::atom(std::string name, std::string tag) {
    return UniverseElement(std::move(tag), Payload(Atom{std::move(name)}));
}

UniverseElement UniverseElement::tuple(Tuple parts, std::string tag) {
    return UniverseElement(std::move(tag), Payload(std::move(parts)));
}

std::optional<Rat> UniverseElement::numeric() const {
    if (is_numeric()) return rational_value();
    return std::nullopt;
}

bool UniverseElement::operator==(const UniverseElement& other) const {
    return compare(other) == std::strong_ordering::equal;
}

std::strong_ordering UniverseElement::compare(const UniverseElement& other) const {
    if (auto c = tag_ <=> other.tag_; c != 0) return c;
    if (auto c = payload_.index() <=> other.payload_.index(); c != 0) return c;
    switch (payload_.index()) {
        case 0: {
            const Rat& a = std::get<Rat>(payload_);
            const Rat& b = std::get<Rat>(other.payload_);
            if (a < b) return std::strong_ordering::less;
            if (b < a) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        case 1:
            return std::get<Atom>(payload_) <=> std::get<Atom>(other.payload_);
        default: {
            const Tuple& a = std::get<Tuple>(payload_);
            const Tuple& b = std::get<Tuple>(other.payload_);
            if (auto c = a.size() <=> b.size(); c != 0) return c;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (auto c = a[i].compare(b[i]); c != 0) return c;
            return std::strong_ordering::equal;
        }
    }
}

std::string UniverseElement::to_string() const {
    std::ostringstream out;
    if (!tag_.empty()) out << tag_ << ":";
    if (is_numeric()) {
        out << rat_to_string(rational_value());
    } else if (is_atom()) {
        out << atom_value().name;
    } else {
        out << "(";
        const Tuple& t = tuple_value();
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out << ", ";
            out << t[i].to_string();
        }
        out << ")";
    }
    return out.str();
}

bool Interval::contains(const Rat& x) const {
    if (lo) {
        if (x < *lo) return false;
        if (x == *lo && !lo_closed) return false;
    }
    if (hi) {
        if (*hi < x) return false;
        if (x == *hi && !hi_closed) return false;
    }
    return true;
}

bool Interval::empty() const {
    if (!lo || !hi) return false;
    if (*hi < *lo) return true;
    if (*lo == *hi) return !(lo_closed && hi_closed);
    return false;
}

std::string Interval::to_string() const {
    std::ostringstream out;
    out << (lo_closed ? "[" : "(");
    out << (lo ? rat_to_string(*lo) : std::string("-oo"));
    out << ", ";
    out << (hi ? rat_to_string(*hi) : std::string("oo"));
    out << (hi_closed ? "]" : ")");
    return out.str();
}

SubsetSpec SubsetSpec::finite(std::vector<UniverseElement> elements) {
    std::sort(elements.begin(), elements.end(),
              [](const UniverseElement& a, const UniverseElement& b) { return a < b; });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return SubsetSpec(FiniteSet{std::move(elements)});
}

SubsetSpec SubsetSpec::intervals(std::vector<Interval> intervals) {
    std::vector<Interval> kept;
    for (auto& iv : intervals)
        if (!iv.empty()) kept.push_back(std::move(iv));
    // Sort by lower endpoint; unbounded-below first, closed before open at ties.
    std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
        if (!a.lo && !b.lo) return false;
        if (!a.lo) return true;
        if (!b.lo) return false;
        if (*a.lo != *b.lo) return *a.lo < *b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    // Merge overlapping or touching pieces so membership is a disjoint scan.
    std::vector<Interval> merged;
    for (auto& iv : kept) {
        if (merged.empty()) {
            merged.push_back(iv);
            continue;
        }
        Interval& last = merged.back();
        bool joins = false;
        if (!last.hi || !iv.lo) {
            joins = true;
        } else if (*iv.lo < *last.hi) {
            joins = true;
        } else if (*iv.lo == *last.hi) {
            joins = last.hi_closed || iv.lo_closed;
        }
        if (!joins) {
            merged.push_back(iv);
            continue;
        }
        if (!last.hi) continue;
        if (!iv.hi) {
            last.hi.reset();
            last.hi_closed = false;
        } else if (*last.hi < *iv.hi) {
            last.hi = iv.hi;
            last.hi_closed = iv.hi_closed;
        } else if (*last.hi == *iv.hi) {
            last.hi_closed = last.hi_closed || iv.hi_closed;
        }
    }
    return SubsetSpec(IntervalUnion{std::move(merged)});
}

SubsetSpec SubsetSpec::product(std::vector<SubsetSpec> components) {
    return SubsetSpec(Product{std::move(components)});
}

bool SubsetSpec::contains(const UniverseElement& e) const {
    if (is_finite()) {
        const auto& elems = finite_elements();
        return std::binary_search(
            elems.begin(), elems.end(), e,
            [](const UniverseElement& a, const UniverseElement& b) { return a < b; });
    }
    if (is_intervals()) {
        // Interval sets describe subsets of the untagged numeric sort only.
        if (!e.tag().empty()) return false;
        auto x = e.numeric();
        if (!x) return false;
        for (const auto& iv : interval_list())
            if (iv.contains(*x)) return true;
        return false;
    }
    if (!e.is_tuple()) return false;
    const auto& parts = e.tuple_value();
    const auto& comps = components();
    if (parts.size() != comps.size()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!comps[i].contains(parts[i])) return false;
    return true;
}

namespace {

// Is interval a contained in the union described by `ivs` (disjoint, sorted)?
bool interval_in_union(const Interval& a, const std::vector<Interval>& ivs) {
    // Because the union is merged/disjoint, a connected set fits only inside a
    // single piece.
    for (const auto& b : ivs) {
        bool lo_ok;
        if (!b.lo) {
            lo_ok = true;
        } else if (!a.lo) {
            lo_ok = false;
        } else if (*b.lo < *a.lo) {
            lo_ok = true;
        } else if (*b.lo == *a.lo) {
            lo_ok = b.lo_closed || !a.lo_closed;
        } else {
            lo_ok = false;
        }
        bool hi_ok;
        if (!b.hi) {
            hi_ok = true;
        } else if (!a.hi) {
            hi_ok = false;
        } else if (*a.hi < *b.hi) {
            hi_ok = true;
        } else if (*a.hi == *b.hi) {
            hi_ok = b.hi_closed || !a.hi_closed;
        } else {
            hi_ok = false;
        }
        if (lo_ok && hi_ok) return true;
    }
    return false;
}

}  // namespace

bool SubsetSpec::subset_of(const SubsetSpec& other) const {
    if (is_finite()) {
        for (const auto& e : finite_elements())
            if (!other.contains(e)) return false;
        return true;
    }
    if (is_intervals()) {
        if (!other.is_intervals())
            throw UndecidableMembership("cannot decide interval inclusion in a non-interval set");
        for (const auto& iv : interval_list())
            if (!interval_in_union(iv, other.interval_list())) return false;
        return true;
    }
    if (!other.is_product())
        throw UndecidableMembership("cannot decide product inclusion in a non-product set");
    const auto& a = components();
    const auto& b = other.components();
    if (a.size() != b.size())
        throw UndecidableMembership("product arity mismatch in inclusion test");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].subset_of(b[i])) return false;
    return true;
}

std::string SubsetSpec::to_string() const {
    std::ostringstream out;
    if (is_finite()) {
        out << "{";
        const auto& elems = finite_elements();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) out << ", ";
            out << elems[i].to_string();
        }
        out << "}";
    } else if (is_intervals()) {
        const auto& ivs = interval_list();
        if (ivs.empty()) {
            out << "{}";
        } else {
            for (std::size_t i = 0; i < ivs.size(); ++i) {
                if (i) out << " u ";
                out << ivs[i].to_string();
            }
        }
    } else {
        const auto& comps = components();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i) out << " x ";
            out << comps[i].to_string();
        }
    }
    return out.str();
}

}  // namespace vext
