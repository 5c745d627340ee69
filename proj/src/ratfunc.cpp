#include "vext/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

#include "vext/errors.hpp"

namespace vext {

RatFunc::RatFunc(const Rat& constant) : num_(Poly(constant)), den_(Poly::one()) {
    canonicalize(default_caps());
}

RatFunc::RatFunc(Poly num, Poly den, const Caps& caps)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator polynomial");
    canonicalize(caps);
}

void RatFunc::canonicalize(const Caps& caps) {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    // Scale to jointly primitive integer coefficients, denominator leading
    // coefficient positive.
    BigInt den_lcm = 1;
    for (const auto& c : num_.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    for (const auto& c : den_.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    BigInt num_gcd = 0;
    auto fold_gcd = [&](const Poly& p) {
        for (const auto& c : p.coeffs()) {
            BigInt scaled = numerator(c) * (den_lcm / denominator(c));
            num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
        }
    };
    fold_gcd(num_);
    fold_gcd(den_);
    Rat scale(den_lcm, num_gcd);
    if (den_.leading() < 0) scale = -scale;
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);

    if (num_.degree() > caps.max_degree || den_.degree() > caps.max_degree) {
        std::ostringstream msg;
        msg << "rational-function degree " << std::max(num_.degree(), den_.degree())
            << " exceeds cap " << caps.max_degree;
        throw DegreeLimitExceeded(msg.str());
    }
}

std::optional<Rat> RatFunc::constant_value() const {
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return Rat(0);
    return num_.coeff(0) / den_.coeff(0);
}

std::optional<Rat> RatFunc::eval_at(std::int64_t i) const {
    Rat x(i);
    Rat d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

RatFunc add(const RatFunc& a, const RatFunc& b, const Caps& caps) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, caps);
}

RatFunc sub(const RatFunc& a, const RatFunc& b, const Caps& caps) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, caps);
}

RatFunc mul(const RatFunc& a, const RatFunc& b, const Caps& caps) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_, caps);
}

RatFunc div(const RatFunc& a, const RatFunc& b, const Caps& caps) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc div: zero divisor");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_, caps);
}

RatFunc RatFunc::negated() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::pow(int k, const Caps& caps) const {
    if (k < 0) throw std::invalid_argument("RatFunc::pow: negative exponent");
    RatFunc acc(Rat(1));
    for (int j = 0; j < k; ++j) acc = mul(acc, *this, caps);
    return acc;
}

Sign RatFunc::eventual_sign() const {
    if (num_.is_zero()) return Sign::zero;
    return num_.leading() > 0 ? Sign::positive : Sign::negative;
}

std::optional<Rat> RatFunc::limit() const {
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return std::nullopt;
    if (dn < dd) return Rat(0);
    return num_.leading() / den_.leading();
}

std::strong_ordering RatFunc::compare(const RatFunc& other) const {
    auto c = num_.compare(other.num_);
    if (c != std::strong_ordering::equal) return c;
    return den_.compare(other.den_);
}

std::string RatFunc::to_string() const {
    if (is_constant()) return rat_to_string(*constant_value());
    auto side = [](const Poly& p) {
        std::string s = p.to_string();
        bool compound = s.find('+', 1) != std::string::npos ||
                        s.find('-', 1) != std::string::npos ||
                        s.find('*') != std::string::npos;
        return compound ? "(" + s + ")" : s;
    };
    return side(num_) + "/" + side(den_);
}

}  // namespace vext
