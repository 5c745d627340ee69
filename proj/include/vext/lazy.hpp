#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "vext/config.hpp"
#include "vext/vreal.hpp"

namespace vext {

// A sequence sampled numerically at explicit indices: the tier for values
// outside the exact fragment (logarithms, trig, exponentials). Verdicts about
// these sequences are always horizon-bounded, never theorems.
struct LazySeq {
    std::function<double(std::int64_t)> rule;  // NaN where undefined
    std::string provenance;                    // expression that rebuilds the rule
    std::int64_t period_hint = 1;              // sampling stratification

    double at(std::int64_t i) const { return rule(i); }
};

// Numeric view of an exact value; samples evaluate the branch functions.
LazySeq lazy_view(const VirtualReal& a);

LazySeq lazy_add(const LazySeq& a, const LazySeq& b);
LazySeq lazy_sub(const LazySeq& a, const LazySeq& b);
LazySeq lazy_mul(const LazySeq& a, const LazySeq& b);
LazySeq lazy_div(const LazySeq& a, const LazySeq& b);
LazySeq lazy_neg(const LazySeq& a);
LazySeq lazy_pow(const LazySeq& a, int k);

// Pointwise ln/exp/sin/cos. For ln of an exact value the argument must end
// inside (0, +inf); sequences that are already lazy are applied pointwise and
// undefined samples surface as NaN.
LazySeq lift_value_fn(const std::string& name, const VirtualReal& a);
LazySeq lift_value_fn(const std::string& name, const LazySeq& a);

// Short decimal/exponent rendering for user-facing numeric output, e.g.
// 1e-09 prints as 1e-9.
std::string format_compact(double v);

// Three-valued, horizon-bounded verdict for a sampled predicate.
struct Truth3 {
    enum class Kind { TrueUpTo, FalseWithWitness, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::int64_t horizon = 0;  // TrueUpTo / Inconclusive
    std::int64_t witness = 0;  // FalseWithWitness: failing index
    double lhs = 0.0;          // samples at the witness
    double rhs = 0.0;
    double tol = 0.0;

    std::string describe() const;
};

// Samples |lhs - rhs| on a geometric index grid covering every residue class
// of the combined period hint. A sample beyond tolerance is an exact
// counterexample; agreement everywhere is only "true up to the horizon".
Truth3 check_identity(const LazySeq& lhs, const LazySeq& rhs,
                      const LazyConfig& cfg = default_lazy_config());

enum class StNumericStatus { Converged, Diverging, Oscillating };
std::string st_numeric_status_name(StNumericStatus s);

struct StNumericResult {
    StNumericStatus status = StNumericStatus::Oscillating;
    double value = 0.0;  // meaningful only when converged
    std::int64_t horizon = 0;
    double tol = 0.0;
};

// Numeric standard part: polynomial extrapolation of samples to the limit of
// large indices, stratified by residue class. Converged requires successive
// extrapolants to agree within tolerance and all classes to share the limit.
StNumericResult st_numeric(const LazySeq& a, const LazyConfig& cfg = default_lazy_config());

// Derivative via the infinitesimal quotient (f(x0 + eps) - f(x0)) / eps.
// The exact route keeps rational arithmetic and an exact standard part.
StandardPart derivative_exact(const std::function<VirtualReal(const VirtualReal&)>& f,
                              const Rat& x0, const Caps& caps = default_caps());
StNumericResult derivative_numeric(const std::function<double(double)>& f, double x0,
                                   const LazyConfig& cfg = default_lazy_config());

}  // namespace vext
