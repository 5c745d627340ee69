#pragma once

#include <compare>
#include <optional>
#include <string>

#include "vext/config.hpp"
#include "vext/poly.hpp"

namespace vext {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Exact rational function of the index n, always held in canonical form:
// numerator and denominator are coprime polynomials with integer coefficients,
// jointly primitive, and the denominator's leading coefficient is positive.
// A term denotes the map i -> num(i)/den(i) for every index past the largest
// real pole; poles are finitely many, so eventual semantics are unaffected.
class RatFunc {
public:
    RatFunc() : RatFunc(Rat(0)) {}
    explicit RatFunc(const Rat& constant);
    RatFunc(Poly num, Poly den, const Caps& caps = default_caps());

    static RatFunc index() { return RatFunc(Poly::index_var(), Poly::one()); }          // n
    static RatFunc index_reciprocal() { return RatFunc(Poly::one(), Poly::index_var()); }  // 1/n

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    // Exact value when constant.
    std::optional<Rat> constant_value() const;

    // Value at a concrete index; empty at a pole of the representative.
    std::optional<Rat> eval_at(std::int64_t i) const;

    friend RatFunc add(const RatFunc& a, const RatFunc& b, const Caps& caps);
    friend RatFunc sub(const RatFunc& a, const RatFunc& b, const Caps& caps);
    friend RatFunc mul(const RatFunc& a, const RatFunc& b, const Caps& caps);
    // Exact quotient; b must not be the zero function.
    friend RatFunc div(const RatFunc& a, const RatFunc& b, const Caps& caps);
    RatFunc negated() const;
    RatFunc pow(int k, const Caps& caps = default_caps()) const;  // k >= 0

    // The constant sign the function assumes for all large indices: zero iff
    // the numerator is the zero polynomial, otherwise the sign of the leading
    // numerator coefficient (the denominator's is normalized positive).
    Sign eventual_sign() const;

    // Limit as the index grows: the leading-coefficient ratio when degrees
    // match, 0 when the numerator degree is smaller, empty (infinite) when it
    // is larger.
    std::optional<Rat> limit() const;
    bool diverges() const { return num_.degree() > den_.degree(); }

    bool operator==(const RatFunc& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    std::strong_ordering compare(const RatFunc& other) const;

    // Canonical text, e.g. "7", "-1/2", "n/1", "(n^2+1)/(2*n)".
    std::string to_string() const;

private:
    void canonicalize(const Caps& caps);
    Poly num_;
    Poly den_;
};

RatFunc add(const RatFunc& a, const RatFunc& b, const Caps& caps = default_caps());
RatFunc sub(const RatFunc& a, const RatFunc& b, const Caps& caps = default_caps());
RatFunc mul(const RatFunc& a, const RatFunc& b, const Caps& caps = default_caps());
RatFunc div(const RatFunc& a, const RatFunc& b, const Caps& caps = default_caps());

}  // namespace vext
