#include "vext/extension.hpp"

#include <sstream>

#include "vext/errors.hpp"

namespace vext {

std::vector<bool> ExtendedRelation::branch_truths(const std::vector<VirtualValue>& args,
                                                  const Caps& caps) const {
    if (args.size() != static_cast<std::size_t>(base_.arity()))
        throw ArityMismatch("extended relation of arity " + std::to_string(base_.arity()) +
                            " applied to " + std::to_string(args.size()) + " values");
    std::int64_t m = 1;
    for (const auto& a : args) {
        m = lcm_i64(m, a.period());
        if (m > caps.max_period) {
            std::ostringstream msg;
            msg << "aligned period " << m << " exceeds cap " << caps.max_period;
            throw PeriodLimitExceeded(msg.str());
        }
    }
    std::vector<bool> truths;
    truths.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        std::vector<BranchTerm> terms;
        terms.reserve(args.size());
        for (const auto& a : args) terms.push_back(a.branch(static_cast<int>(j % a.period())));
        truths.push_back(base_.eventually_on_class(terms));
    }
    return truths;
}

bool ExtendedRelation::holds(const std::vector<VirtualValue>& args, const Caps& caps) const {
    for (bool t : branch_truths(args, caps))
        if (!t) return false;
    return true;
}

ExtendedRelation extend_relation(const Relation& p) { return ExtendedRelation(p); }

}  // namespace vext
