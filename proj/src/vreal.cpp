#include "vext/vreal.hpp"

#include <sstream>

#include "vext/errors.hpp"

namespace vext {

VirtualReal::VirtualReal(VirtualValue v) : value_(std::move(v)) {
    for (const auto& b : value_.branches())
        if (!b.is_func())
            throw TypeError("virtual real needs numeric branches, got " + b.to_string());
}

VirtualReal VirtualReal::constant(Rat q) {
    return VirtualReal(VirtualValue::constant(BranchTerm(std::move(q))));
}

VirtualReal VirtualReal::infinity() {
    return VirtualReal(VirtualValue::constant(BranchTerm(RatFunc::index())));
}

VirtualReal VirtualReal::epsilon() {
    return VirtualReal(VirtualValue::constant(BranchTerm(RatFunc::index_reciprocal())));
}

VirtualReal VirtualReal::cyclic(const std::vector<RatFunc>& branches, const Caps& caps) {
    std::vector<BranchTerm> terms;
    terms.reserve(branches.size());
    for (const auto& f : branches) terms.emplace_back(f);
    return VirtualReal(VirtualValue::cyclic(terms, caps));
}

namespace {

template <typename Op>
VirtualReal zip(const VirtualReal& a, const VirtualReal& b, const Caps& caps, Op op) {
    const std::int64_t m = lcm_i64(a.period(), b.period());
    if (m > caps.max_period) {
        std::ostringstream msg;
        msg << "aligned period " << m << " exceeds cap " << caps.max_period;
        throw PeriodLimitExceeded(msg.str());
    }
    std::vector<BranchTerm> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j)
        out.emplace_back(op(a.branch_func(static_cast<int>(j % a.period())),
                            b.branch_func(static_cast<int>(j % b.period()))));
    return VirtualReal(VirtualValue::cyclic(out, caps));
}

template <typename Op>
VirtualReal map(const VirtualReal& a, const Caps& caps, Op op) {
    std::vector<BranchTerm> out;
    out.reserve(static_cast<std::size_t>(a.period()));
    for (int j = 0; j < a.period(); ++j) out.emplace_back(op(a.branch_func(j)));
    return VirtualReal(VirtualValue::cyclic(out, caps));
}

}  // namespace

VirtualReal vr_add(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return zip(a, b, caps, [&](const RatFunc& x, const RatFunc& y) { return add(x, y, caps); });
}

VirtualReal vr_sub(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return zip(a, b, caps, [&](const RatFunc& x, const RatFunc& y) { return sub(x, y, caps); });
}

VirtualReal vr_mul(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return zip(a, b, caps, [&](const RatFunc& x, const RatFunc& y) { return mul(x, y, caps); });
}

VirtualReal vr_div(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    for (int j = 0; j < b.period(); ++j)
        if (b.branch_func(j).is_zero())
            throw ZeroBranchDivisor("division by a value with an identically-zero branch");
    return zip(a, b, caps, [&](const RatFunc& x, const RatFunc& y) { return div(x, y, caps); });
}

VirtualReal vr_neg(const VirtualReal& a, const Caps& caps) {
    return map(a, caps, [](const RatFunc& x) { return x.negated(); });
}

VirtualReal vr_abs(const VirtualReal& a, const Caps& caps) {
    // |f| agrees with f or -f at all large indices because the sign of a
    // rational function is eventually constant.
    return map(a, caps, [](const RatFunc& x) {
        return x.eventual_sign() == Sign::negative ? x.negated() : x;
    });
}

VirtualReal vr_pow(const VirtualReal& a, int k, const Caps& caps) {
    if (k >= 0) return map(a, caps, [&](const RatFunc& x) { return x.pow(k, caps); });
    VirtualReal p = vr_pow(a, -k, caps);
    return vr_div(VirtualReal::constant(Rat(1)), p, caps);
}

VirtualReal vr_sign(const VirtualReal& a, const Caps& caps) {
    return map(a, caps, [](const RatFunc& x) {
        return RatFunc(Rat(static_cast<int>(x.eventual_sign())));
    });
}

std::vector<Sign> vr_branch_signs(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    const std::int64_t m = lcm_i64(a.period(), b.period());
    if (m > caps.max_period) {
        std::ostringstream msg;
        msg << "aligned period " << m << " exceeds cap " << caps.max_period;
        throw PeriodLimitExceeded(msg.str());
    }
    std::vector<Sign> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        const RatFunc diff = sub(a.branch_func(static_cast<int>(j % a.period())),
                                 b.branch_func(static_cast<int>(j % b.period())), caps);
        out.push_back(diff.eventual_sign());
    }
    return out;
}

namespace {

template <typename Pred>
EventualTruth truth_over_signs(const VirtualReal& a, const VirtualReal& b, const Caps& caps,
                               Pred pred) {
    bool any_true = false, any_false = false;
    for (Sign s : vr_branch_signs(a, b, caps)) (pred(s) ? any_true : any_false) = true;
    if (any_true && any_false) return EventualTruth::Mixed;
    return any_true ? EventualTruth::EventuallyTrue : EventualTruth::EventuallyFalse;
}

}  // namespace

EventualTruth vr_eq(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return truth_over_signs(a, b, caps, [](Sign s) { return s == Sign::zero; });
}
EventualTruth vr_ne(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return truth_over_signs(a, b, caps, [](Sign s) { return s != Sign::zero; });
}
EventualTruth vr_lt(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return truth_over_signs(a, b, caps, [](Sign s) { return s == Sign::negative; });
}
EventualTruth vr_le(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return truth_over_signs(a, b, caps, [](Sign s) { return s != Sign::positive; });
}
EventualTruth vr_gt(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return truth_over_signs(a, b, caps, [](Sign s) { return s == Sign::positive; });
}
EventualTruth vr_ge(const VirtualReal& a, const VirtualReal& b, const Caps& caps) {
    return truth_over_signs(a, b, caps, [](Sign s) { return s != Sign::negative; });
}

NumClass classify(const VirtualReal& a) {
    bool first = true;
    NumClass acc = NumClass::Zero;
    for (int j = 0; j < a.period(); ++j) {
        const RatFunc& f = a.branch_func(j);
        NumClass c;
        if (f.is_zero()) {
            c = NumClass::Zero;
        } else if (f.diverges()) {
            c = NumClass::Infinite;
        } else if (*f.limit() == 0) {
            c = NumClass::Infinitesimal;
        } else {
            c = NumClass::Finite;
        }
        if (first) {
            acc = c;
            first = false;
        } else if (acc != c) {
            return NumClass::Mixed;
        }
    }
    return acc;
}

std::string num_class_name(NumClass c) {
    switch (c) {
        case NumClass::Zero: return "zero";
        case NumClass::Infinitesimal: return "infinitesimal";
        case NumClass::Finite: return "appreciable-finite";
        case NumClass::Infinite: return "infinite";
        default: return "mixed";
    }
}

std::string StandardPart::describe() const {
    switch (status) {
        case StStatus::Defined: return rat_to_string(*value) + " (exact)";
        case StStatus::InfiniteBranch: return "undefined (infinite branch)";
        default: return "undefined (branch limits disagree)";
    }
}

StandardPart standard_part(const VirtualReal& a) {
    std::optional<Rat> common;
    for (int j = 0; j < a.period(); ++j) {
        const RatFunc& f = a.branch_func(j);
        auto lim = f.limit();
        if (!lim) return {StStatus::InfiniteBranch, std::nullopt};
        if (!common) {
            common = *lim;
        } else if (*common != *lim) {
            return {StStatus::BranchesDisagree, std::nullopt};
        }
    }
    return {StStatus::Defined, common};
}

bool is_virtual_integer(const VirtualReal& a) {
    for (int j = 0; j < a.period(); ++j) {
        const RatFunc& f = a.branch_func(j);
        // Decided only on the integer-coefficient polynomial fragment: the
        // canonical form has jointly-primitive integer coefficients, so den 1
        // means the branch is such a polynomial and its values are integers.
        if (f.den() == Poly::one()) continue;
        // A constant is a fixed rational: exact identity decides it.
        if (f.is_constant()) return false;
        throw UndecidableMembership(
            "integer membership is decided only for integer-coefficient polynomial branches, got " +
            f.to_string());
    }
    return true;
}

}  // namespace vext
