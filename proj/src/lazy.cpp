#include "vext/lazy.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "vext/errors.hpp"
#include "vext/rational.hpp"

namespace vext {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

LazySeq combine(const LazySeq& a, const LazySeq& b, const char* sym,
                std::function<double(double, double)> op) {
    LazySeq out;
    auto ra = a.rule;
    auto rb = b.rule;
    out.rule = [ra, rb, op](std::int64_t i) { return op(ra(i), rb(i)); };
    out.provenance = "(" + a.provenance + " " + sym + " " + b.provenance + ")";
    out.period_hint = lcm_i64(std::max<std::int64_t>(1, a.period_hint),
                              std::max<std::int64_t>(1, b.period_hint));
    return out;
}

}  // namespace

LazySeq lazy_view(const VirtualReal& a) {
    LazySeq out;
    VirtualValue v = a.value();
    out.rule = [v](std::int64_t i) {
        std::optional<Rat> q = v.term_at(i).numeric_at(i);
        return q ? rat_to_double(*q) : kNan;
    };
    out.provenance = a.to_text();
    out.period_hint = a.period();
    return out;
}

LazySeq lazy_add(const LazySeq& a, const LazySeq& b) {
    return combine(a, b, "+", [](double x, double y) { return x + y; });
}

LazySeq lazy_sub(const LazySeq& a, const LazySeq& b) {
    return combine(a, b, "-", [](double x, double y) { return x - y; });
}

LazySeq lazy_mul(const LazySeq& a, const LazySeq& b) {
    return combine(a, b, "*", [](double x, double y) { return x * y; });
}

LazySeq lazy_div(const LazySeq& a, const LazySeq& b) {
    return combine(a, b, "/", [](double x, double y) { return y == 0.0 ? kNan : x / y; });
}

LazySeq lazy_neg(const LazySeq& a) {
    LazySeq out;
    auto ra = a.rule;
    out.rule = [ra](std::int64_t i) { return -ra(i); };
    out.provenance = "-(" + a.provenance + ")";
    out.period_hint = a.period_hint;
    return out;
}

LazySeq lazy_pow(const LazySeq& a, int k) {
    if (k < 0) throw TypeError("exponent must be a nonnegative integer");
    LazySeq out;
    auto ra = a.rule;
    out.rule = [ra, k](std::int64_t i) { return std::pow(ra(i), k); };
    out.provenance = "(" + a.provenance + ")^" + std::to_string(k);
    out.period_hint = a.period_hint;
    return out;
}

namespace {

double apply_named(const std::string& name, double v) {
    if (std::isnan(v)) return kNan;
    double r;
    if (name == "ln") {
        r = v > 0.0 ? std::log(v) : kNan;
    } else if (name == "exp") {
        r = std::exp(v);
    } else if (name == "sin") {
        r = std::sin(v);
    } else if (name == "cos") {
        r = std::cos(v);
    } else {
        throw TypeError("unknown function \"" + name + "\"; supported: ln, exp, sin, cos");
    }
    return std::isfinite(r) ? r : kNan;
}

}  // namespace

LazySeq lift_value_fn(const std::string& name, const LazySeq& a) {
    apply_named(name, 1.0);  // validate the name up front
    LazySeq out;
    auto ra = a.rule;
    std::string fname = name;
    out.rule = [ra, fname](std::int64_t i) { return apply_named(fname, ra(i)); };
    out.provenance = name + "(" + a.provenance + ")";
    out.period_hint = a.period_hint;
    return out;
}

LazySeq lift_value_fn(const std::string& name, const VirtualReal& a) {
    if (name == "ln" && !ends_in(a.value(), SubsetSpec::positive_rationals())) {
        throw DomainViolation("ln needs a value that ends inside (0, +inf), got " + a.to_text());
    }
    return lift_value_fn(name, lazy_view(a));
}

std::string format_compact(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    std::string s = buf;
    std::size_t e = s.find('e');
    if (e != std::string::npos) {
        std::size_t p = e + 1;
        std::string exp_part;
        bool negative = false;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            negative = s[p] == '-';
            ++p;
        }
        while (p < s.size() && s[p] == '0') ++p;
        exp_part = s.substr(p);
        if (exp_part.empty()) exp_part = "0";
        s = s.substr(0, e) + "e" + (negative ? "-" : "") + exp_part;
    }
    return s;
}

std::string Truth3::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::TrueUpTo:
            out << "true (checked to H=" << horizon << ", tol=" << format_compact(tol) << ")";
            break;
        case Kind::FalseWithWitness:
            out << "false (witness at i=" << witness << ")";
            break;
        case Kind::Inconclusive:
            out << "inconclusive (H=" << horizon << ")";
            break;
    }
    return out.str();
}

Truth3 check_identity(const LazySeq& lhs, const LazySeq& rhs, const LazyConfig& cfg) {
    Truth3 res;
    res.horizon = cfg.horizon;
    res.tol = cfg.tol;
    std::int64_t p = lcm_i64(std::max<std::int64_t>(1, lhs.period_hint),
                             std::max<std::int64_t>(1, rhs.period_hint));
    bool undefined_seen = false;
    for (std::int64_t g = cfg.grid_start; g <= cfg.horizon; g *= cfg.grid_ratio) {
        for (std::int64_t r = 0; r < p && g + r <= cfg.horizon; ++r) {
            std::int64_t i = g + r;
            double l = lhs.at(i);
            double h = rhs.at(i);
            if (std::isnan(l) || std::isnan(h)) {
                undefined_seen = true;
                continue;
            }
            if (std::abs(l - h) > cfg.tol) {
                res.kind = Truth3::Kind::FalseWithWitness;
                res.witness = i;
                res.lhs = l;
                res.rhs = h;
                return res;
            }
        }
    }
    res.kind = undefined_seen ? Truth3::Kind::Inconclusive : Truth3::Kind::TrueUpTo;
    return res;
}

std::string st_numeric_status_name(StNumericStatus s) {
    switch (s) {
        case StNumericStatus::Converged: return "converged";
        case StNumericStatus::Diverging: return "diverging";
        case StNumericStatus::Oscillating: return "oscillating";
    }
    return "?";
}

namespace {

enum class ResidueOutcome { Converged, Diverging, Oscillating };

// Polynomial extrapolation of (1/i, v) samples to 1/i = 0; convergence is
// agreement of the last two diagonal extrapolants within tolerance.
ResidueOutcome extrapolate_residue(const std::vector<double>& xs, const std::vector<double>& vs,
                                   double tol, double* limit) {
    if (vs.size() < 4) return ResidueOutcome::Oscillating;
    std::vector<double> t;
    t.reserve(vs.size());
    double diag = vs[0];
    double err = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < vs.size(); ++k) {
        t.push_back(vs[k]);
        for (std::size_t j = k; j-- > 0;) {
            t[j] = (xs[k] * t[j] - xs[j] * t[j + 1]) / (xs[k] - xs[j]);
        }
        if (k > 0) err = std::abs(t[0] - diag);
        diag = t[0];
    }
    if (err <= tol) {
        *limit = diag;
        return ResidueOutcome::Converged;
    }
    bool monotone = true;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
        if (std::abs(vs[k + 1]) <= std::abs(vs[k])) { monotone = false; break; }
    }
    bool nonshrinking = true;
    for (std::size_t k = vs.size() >= 4 ? vs.size() - 4 : 0; k + 2 < vs.size(); ++k) {
        double d0 = std::abs(vs[k + 1] - vs[k]);
        double d1 = std::abs(vs[k + 2] - vs[k + 1]);
        if (d1 < 0.4 * d0) { nonshrinking = false; break; }
    }
    bool grew = std::abs(vs.back()) >= 2.0 * std::abs(vs.front()) + 1.0;
    if (monotone && nonshrinking && grew) return ResidueOutcome::Diverging;
    return ResidueOutcome::Oscillating;
}

}  // namespace

StNumericResult st_numeric(const LazySeq& a, const LazyConfig& cfg) {
    StNumericResult res;
    res.horizon = cfg.horizon;
    res.tol = cfg.tol;
    std::int64_t p = std::max<std::int64_t>(1, a.period_hint);
    std::vector<double> limits;
    bool any_div = false;
    bool any_osc = false;
    for (std::int64_t r = 0; r < p; ++r) {
        std::vector<double> xs, vs;
        for (std::int64_t g = cfg.grid_start; g <= cfg.horizon; g *= cfg.grid_ratio) {
            std::int64_t i = g * p + r + 1;
            double v = a.at(i);
            if (!std::isfinite(v)) continue;  // isolated undefined samples are skipped
            xs.push_back(1.0 / static_cast<double>(i));
            vs.push_back(v);
        }
        double limit = 0.0;
        switch (extrapolate_residue(xs, vs, cfg.tol, &limit)) {
            case ResidueOutcome::Converged: limits.push_back(limit); break;
            case ResidueOutcome::Diverging: any_div = true; break;
            case ResidueOutcome::Oscillating: any_osc = true; break;
        }
    }
    if (any_div) {
        res.status = StNumericStatus::Diverging;
        return res;
    }
    if (any_osc || limits.empty()) {
        res.status = StNumericStatus::Oscillating;
        return res;
    }
    double lo = limits[0], hi = limits[0], sum = 0.0;
    for (double v : limits) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    if (hi - lo > 10.0 * cfg.tol) {
        res.status = StNumericStatus::Oscillating;  // per-class limits disagree
        return res;
    }
    res.status = StNumericStatus::Converged;
    res.value = sum / static_cast<double>(limits.size());
    return res;
}

StandardPart derivative_exact(const std::function<VirtualReal(const VirtualReal&)>& f,
                              const Rat& x0, const Caps& caps) {
    VirtualReal base = VirtualReal::constant(x0);
    VirtualReal shifted = vr_add(base, VirtualReal::epsilon(), caps);
    VirtualReal quotient =
        vr_div(vr_sub(f(shifted), f(base), caps), VirtualReal::epsilon(), caps);
    return standard_part(quotient);
}

StNumericResult derivative_numeric(const std::function<double(double)>& f, double x0,
                                   const LazyConfig& cfg) {
    LazySeq seq;
    seq.rule = [f, x0](std::int64_t i) {
        double h = 1.0 / static_cast<double>(i);
        double v = (f(x0 + h) - f(x0)) / h;
        return std::isfinite(v) ? v : kNan;
    };
    seq.provenance = "difference quotient";
    seq.period_hint = 1;
    return st_numeric(seq, cfg);
}

}  // namespace vext
