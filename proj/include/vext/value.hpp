#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vext/config.hpp"
#include "vext/ratfunc.hpp"
#include "vext/universe.hpp"

namespace vext {

// One branch of a virtual value: either a fixed universe element, an exact
// rational function of the index, or a tuple of branch terms. Untagged
// numeric elements are promoted to constant rational functions on
// construction, so each end-equality class of terms has exactly one
// structural form.
class BranchTerm {
public:
    using TupleBody = std::vector<BranchTerm>;
    using Body = std::variant<UniverseElement, RatFunc, TupleBody>;

    BranchTerm(UniverseElement e);  // NOLINT: implicit by design
    BranchTerm(RatFunc f);          // NOLINT: implicit by design
    BranchTerm(Rat constant);       // NOLINT: implicit by design
    static BranchTerm tuple(TupleBody parts);

    bool is_element() const { return std::holds_alternative<UniverseElement>(body_); }
    bool is_func() const { return std::holds_alternative<RatFunc>(body_); }
    bool is_tuple() const { return std::holds_alternative<TupleBody>(body_); }

    const UniverseElement& element() const { return std::get<UniverseElement>(body_); }
    const RatFunc& func() const { return std::get<RatFunc>(body_); }
    const TupleBody& tuple_parts() const { return std::get<TupleBody>(body_); }

    // Does the term denote the same value at every index?
    bool is_fixed() const;

    // Exact value at index i >= 1; empty only at a pole of a rational-function
    // part (which can happen at finitely many indices only).
    std::optional<UniverseElement> value_at(std::int64_t i) const;

    // Exact numeric value at index i >= 1 when the term is numeric there.
    std::optional<Rat> numeric_at(std::int64_t i) const;

    bool operator==(const BranchTerm& other) const;
    std::strong_ordering compare(const BranchTerm& other) const;

    std::string to_string() const;

private:
    explicit BranchTerm(Body body) : body_(std::move(body)) {}
    Body body_;
};

// Canonical representative of an end-equality class: a purely cyclic sequence
// of branch terms where branch j covers the indices i >= 1 with
// (i - 1) mod period == j, and the period is minimal. Two virtual values are
// end-equal exactly when their canonical forms are structurally equal;
// rotations of a cycle are distinct values.
class VirtualValue {
public:
    // Builds the class of: p[0], ..., p[L-1], then t[0], t[1], ... cycling.
    // The finite prefix is discarded; the cycle is re-anchored to residues and
    // reduced to its minimal period.
    static VirtualValue canonical(const std::vector<BranchTerm>& prefix,
                                  const std::vector<BranchTerm>& tail,
                                  const Caps& caps = default_caps());
    static VirtualValue cyclic(const std::vector<BranchTerm>& tail,
                               const Caps& caps = default_caps());
    static VirtualValue constant(BranchTerm term);

    int period() const { return static_cast<int>(branches_.size()); }
    const std::vector<BranchTerm>& branches() const { return branches_; }
    const BranchTerm& branch(int j) const { return branches_[static_cast<std::size_t>(j)]; }

    // Term covering index i >= 1.
    const BranchTerm& term_at(std::int64_t i) const {
        return branches_[static_cast<std::size_t>((i - 1) % period())];
    }
    std::optional<UniverseElement> value_at(std::int64_t i) const { return term_at(i).value_at(i); }

    bool is_constant() const { return branches_.size() == 1; }
    const BranchTerm& sole_branch() const { return branches_.front(); }

    // Structural identity of canonical forms (same thing as end-equality).
    bool operator==(const VirtualValue& other) const;
    std::strong_ordering compare(const VirtualValue& other) const;
    bool operator<(const VirtualValue& other) const {
        return compare(other) == std::strong_ordering::less;
    }

    // Canonical text: a lone branch prints bare, otherwise cyc{b0; b1; ...}.
    std::string to_text() const;

private:
    explicit VirtualValue(std::vector<BranchTerm> branches) : branches_(std::move(branches)) {}
    std::vector<BranchTerm> branches_;
};

// The canonical image of a fixed element under the constant-sequence embedding.
VirtualValue embed_const(const UniverseElement& e);
VirtualValue embed_const(const Rat& q);

// Agreement at all sufficiently large indices, computed by aligning the two
// cycles on their least common period.
bool end_equal(const VirtualValue& a, const VirtualValue& b);

enum class Membership { EventuallyIn, EventuallyOut, Mixed };

// Is the branch term inside B at all sufficiently large indices of its
// residue class? Two-valued: a rational-function branch either settles into B
// or settles outside it.
bool branch_eventually_in(const BranchTerm& term, const SubsetSpec& set);

// Per-branch eventual membership of the whole value.
Membership membership_in(const VirtualValue& v, const SubsetSpec& set);
inline bool ends_in(const VirtualValue& v, const SubsetSpec& set) {
    return membership_in(v, set) == Membership::EventuallyIn;
}

// Identification of a tuple of classes with a class of tuples, and back.
VirtualValue tuple_join(const std::vector<VirtualValue>& parts,
                        const Caps& caps = default_caps());
std::vector<VirtualValue> tuple_split(const VirtualValue& v, int arity,
                                      const Caps& caps = default_caps());

// Every canonical value with constant branches drawn from the given ground
// set and period at most max_period, without duplicates. Throws SizeLimit
// when the enumeration would exceed size_cap values.
std::vector<VirtualValue> enumerate_cyclic(const std::vector<UniverseElement>& universe,
                                           int max_period, std::size_t size_cap = 200000);

}  // namespace vext
