#include "vext/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace vext {

namespace {
const Rat kZero(0);
}

Poly::Poly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& coeff, int degree) {
    if (coeff == 0) return Poly();
    std::vector<Rat> cs(static_cast<std::size_t>(degree) + 1, Rat(0));
    cs.back() = coeff;
    return Poly(std::move(cs));
}

const Rat& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading() const { return coeffs_.back(); }

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return Poly(std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(cs));
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    if (den.is_zero()) throw std::invalid_argument("Poly::divmod: zero divisor");
    std::vector<Rat> r = num.coeffs_;
    int dd = den.degree();
    std::vector<Rat> q;
    if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Rat(0));
    while (static_cast<int>(r.size()) - 1 >= dd) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        int rd = static_cast<int>(r.size()) - 1;
        if (rd < dd) break;
        Rat factor = r.back() / den.leading();
        q[static_cast<std::size_t>(rd - dd)] = factor;
        for (int i = 0; i <= dd; ++i)
            r[static_cast<std::size_t>(rd - dd + i)] -= factor * den.coeff(i);
        r.pop_back();  // leading term cancels exactly
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
    Poly q, r;
    divmod(num, den, q, r);
    if (!r.is_zero()) throw std::invalid_argument("Poly::exact_div: not divisible");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rat(1) / x.leading());  // monic
}

bool Poly::integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

std::strong_ordering Poly::compare(const Poly& other) const {
    if (coeffs_.size() != other.coeffs_.size())
        return coeffs_.size() <=> other.coeffs_.size();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] < other.coeffs_[i]) return std::strong_ordering::less;
        if (other.coeffs_[i] < coeffs_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (k == 0) {
            out << rat_to_string(mag);
        } else {
            if (mag != 1) out << rat_to_string(mag) << "*";
            out << "n";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace vext
