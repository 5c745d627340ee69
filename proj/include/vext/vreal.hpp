#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vext/config.hpp"
#include "vext/value.hpp"

namespace vext {

// A virtual value all of whose branches are exact rational functions of the
// index: the numeric fragment where comparison, classification and standard
// part are decidable.
class VirtualReal {
public:
    explicit VirtualReal(VirtualValue v);  // throws TypeError on a non-numeric branch

    static VirtualReal constant(Rat q);
    static VirtualReal constant(std::int64_t k) { return constant(Rat(k)); }
    // Class of 1, 2, 3, ...: the canonical infinite quantity.
    static VirtualReal infinity();
    // Class of 1, 1/2, 1/3, ...: the canonical infinitesimal.
    static VirtualReal epsilon();
    static VirtualReal cyclic(const std::vector<RatFunc>& branches,
                              const Caps& caps = default_caps());

    const VirtualValue& value() const { return value_; }
    int period() const { return value_.period(); }
    const RatFunc& branch_func(int j) const { return value_.branch(j).func(); }
    bool is_constant_value() const { return value_.is_constant(); }

    bool operator==(const VirtualReal& other) const { return value_ == other.value_; }

    std::string to_text() const { return value_.to_text(); }

private:
    VirtualValue value_;
};

VirtualReal vr_add(const VirtualReal& a, const VirtualReal& b, const Caps& caps = default_caps());
VirtualReal vr_sub(const VirtualReal& a, const VirtualReal& b, const Caps& caps = default_caps());
VirtualReal vr_mul(const VirtualReal& a, const VirtualReal& b, const Caps& caps = default_caps());
// Throws ZeroBranchDivisor when some branch of b is the zero function.
VirtualReal vr_div(const VirtualReal& a, const VirtualReal& b, const Caps& caps = default_caps());
VirtualReal vr_neg(const VirtualReal& a, const Caps& caps = default_caps());
// Branchwise eventual absolute value.
VirtualReal vr_abs(const VirtualReal& a, const Caps& caps = default_caps());
// Integer exponent; negative exponents require no zero branch.
VirtualReal vr_pow(const VirtualReal& a, int k, const Caps& caps = default_caps());
// Branchwise eventual sign as a virtual value over {-1, 0, 1}.
VirtualReal vr_sign(const VirtualReal& a, const Caps& caps = default_caps());

// Truth value of an eventual statement about a pair of virtual reals.
enum class EventualTruth { EventuallyTrue, EventuallyFalse, Mixed };

// Eventual sign of a - b on each aligned branch (period lcm(pa, pb)).
std::vector<Sign> vr_branch_signs(const VirtualReal& a, const VirtualReal& b,
                                  const Caps& caps = default_caps());

EventualTruth vr_eq(const VirtualReal& a, const VirtualReal& b,
                    const Caps& caps = default_caps());
EventualTruth vr_ne(const VirtualReal& a, const VirtualReal& b,
                    const Caps& caps = default_caps());
EventualTruth vr_lt(const VirtualReal& a, const VirtualReal& b,
                    const Caps& caps = default_caps());
EventualTruth vr_le(const VirtualReal& a, const VirtualReal& b,
                    const Caps& caps = default_caps());
EventualTruth vr_gt(const VirtualReal& a, const VirtualReal& b,
                    const Caps& caps = default_caps());
EventualTruth vr_ge(const VirtualReal& a, const VirtualReal& b,
                    const Caps& caps = default_caps());

// Magnitude class of a virtual real. Mixed means the branches fall in
// different classes.
enum class NumClass { Zero, Infinitesimal, Finite, Infinite, Mixed };
NumClass classify(const VirtualReal& a);
std::string num_class_name(NumClass c);

enum class StStatus { Defined, InfiniteBranch, BranchesDisagree };
struct StandardPart {
    StStatus status;
    std::optional<Rat> value;  // set iff status == Defined
    std::string describe() const;
};
// The unique rational r with a - r infinitesimal, when one exists.
StandardPart standard_part(const VirtualReal& a);

// Does every branch take integer values at all large indices?
bool is_virtual_integer(const VirtualReal& a);

}  // namespace vext
