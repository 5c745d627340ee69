#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vext/rational.hpp"

namespace vext {

// Univariate polynomial over the exact rationals, coefficients stored
// low-to-high degree with no trailing zero (the zero polynomial is the empty
// coefficient list, degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs);  // trims trailing zeros

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rat(1)); }
    static Poly monomial(const Rat& coeff, int degree);
    static Poly index_var() { return monomial(Rat(1), 1); }  // the index n

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(int k) const;  // 0 beyond the degree
    const Rat& leading() const;     // precondition: not zero

    Rat eval(const Rat& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rat& c) const;

    // Quotient and remainder; divisor must be nonzero.
    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);
    // Exact quotient; throws std::invalid_argument when the remainder is nonzero.
    static Poly exact_div(const Poly& num, const Poly& den);
    // Monic greatest common divisor (gcd(0,0) = 0).
    static Poly gcd(const Poly& a, const Poly& b);

    // All coefficients integral.
    bool integer_coeffs() const;

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }
    std::strong_ordering compare(const Poly& other) const;

    // Rendering in the variable `n`, e.g. "n^2+3*n-1", "-2*n", "0".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace vext
