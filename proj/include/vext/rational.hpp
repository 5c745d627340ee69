#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace vext {

// Exact arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator (the backend normalizes on every operation).
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const Rat& r) { return r.sign(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

double rat_to_double(const Rat& r);

// "7", "-3/4". Integers drop the "/1".
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q" and decimal literals like "2.5". Empty optional on
// malformed input or a zero denominator.
std::optional<Rat> rat_from_string(const std::string& text);

Rat rat_pow(const Rat& base, int exp);

std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

}  // namespace vext
