#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vext/rational.hpp"

namespace vext {

// Element of a (possibly disjoint-union) universe. The tag is the sort label;
// payloads under different tags never compare equal. Numeric payloads are
// exact rationals regardless of how they were constructed, so 3 and 3/1 are
// the same element. Tuple payloads have fixed finite arity and nest.
class UniverseElement {
public:
    struct Atom {
        std::string name;
        bool operator==(const Atom&) const = default;
        auto operator<=>(const Atom&) const = default;
    };
    using Tuple = std::vector<UniverseElement>;
    using Payload = std::variant<Rat, Atom, Tuple>;

    static UniverseElement rational(Rat v, std::string tag = "");
    static UniverseElement integer(std::int64_t v, std::string tag = "");
    static UniverseElement atom(std::string name, std::string tag = "");
    static UniverseElement tuple(Tuple parts, std::string tag = "");

    const std::string& tag() const { return tag_; }
    const Payload& payload() const { return payload_; }

    bool is_numeric() const { return std::holds_alternative<Rat>(payload_); }
    bool is_atom() const { return std::holds_alternative<Atom>(payload_); }
    bool is_tuple() const { return std::holds_alternative<Tuple>(payload_); }

    const Rat& rational_value() const { return std::get<Rat>(payload_); }
    const Atom& atom_value() const { return std::get<Atom>(payload_); }
    const Tuple& tuple_value() const { return std::get<Tuple>(payload_); }

    // The payload as an exact rational when numeric and untagged or tagged.
    std::optional<Rat> numeric() const;

    bool operator==(const UniverseElement& other) const;
    std::strong_ordering compare(const UniverseElement& other) const;
    bool operator<(const UniverseElement& other) const {
        return compare(other) == std::strong_ordering::less;
    }

    std::string to_string() const;

private:
    UniverseElement(std::string tag, Payload payload)
        : tag_(std::move(tag)), payload_(std::move(payload)) {}
    std::string tag_;
    Payload payload_;
};

// Half-line/segment with exact rational endpoints; an absent endpoint is
// unbounded on that side.
struct Interval {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval open(Rat a, Rat b) { return {std::move(a), std::move(b), false, false}; }
    static Interval closed(Rat a, Rat b) { return {std::move(a), std::move(b), true, true}; }
    static Interval greater_than(Rat a) { return {std::move(a), std::nullopt, false, false}; }
    static Interval at_least(Rat a) { return {std::move(a), std::nullopt, true, false}; }
    static Interval less_than(Rat b) { return {std::nullopt, std::move(b), false, false}; }
    static Interval at_most(Rat b) { return {std::nullopt, std::move(b), false, true}; }
    static Interval point(Rat a) { return {a, a, true, true}; }
    static Interval all() { return {std::nullopt, std::nullopt, false, false}; }

    bool contains(const Rat& x) const;
    bool empty() const;
    std::string to_string() const;
};

// Decidable description of a subset B of the universe: an explicit finite set,
// a finite union of rational-endpoint intervals, or a finite product.
class SubsetSpec {
public:
    struct FiniteSet {
        std::vector<UniverseElement> elements;  // sorted, unique
    };
    struct IntervalUnion {
        std::vector<Interval> intervals;  // pairwise disjoint, sorted
    };
    struct Product {
        std::vector<SubsetSpec> components;
    };

    static SubsetSpec finite(std::vector<UniverseElement> elements);
    static SubsetSpec intervals(std::vector<Interval> intervals);
    static SubsetSpec product(std::vector<SubsetSpec> components);
    static SubsetSpec all_rationals() { return intervals({Interval::all()}); }
    static SubsetSpec positive_rationals() { return intervals({Interval::greater_than(Rat(0))}); }

    bool is_finite() const { return std::holds_alternative<FiniteSet>(body_); }
    bool is_intervals() const { return std::holds_alternative<IntervalUnion>(body_); }
    bool is_product() const { return std::holds_alternative<Product>(body_); }

    const std::vector<UniverseElement>& finite_elements() const {
        return std::get<FiniteSet>(body_).elements;
    }
    const std::vector<Interval>& interval_list() const {
        return std::get<IntervalUnion>(body_).intervals;
    }
    const std::vector<SubsetSpec>& components() const {
        return std::get<Product>(body_).components;
    }

    // Point membership of a universe element.
    bool contains(const UniverseElement& e) const;

    // Decidable inclusion test between specs of the same shape.
    bool subset_of(const SubsetSpec& other) const;

    std::string to_string() const;

private:
    explicit SubsetSpec(std::variant<FiniteSet, IntervalUnion, Product> body)
        : body_(std::move(body)) {}
    std::variant<FiniteSet, IntervalUnion, Product> body_;
};

}  // namespace vext
