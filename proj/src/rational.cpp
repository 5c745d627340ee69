#include "vext/rational.hpp"

#include <cctype>
#include <numeric>

namespace vext {

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool parse_digits(const std::string& s, std::size_t& pos, BigInt& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    out = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        out = out * 10 + (s[pos] - '0');
        ++pos;
    }
    return true;
}

}  // namespace

std::optional<Rat> rat_from_string(const std::string& text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    BigInt intpart;
    if (!parse_digits(text, pos, intpart)) return std::nullopt;

    BigInt num = intpart, den = 1;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        BigInt frac;
        if (!parse_digits(text, pos, frac)) return std::nullopt;
        for (std::size_t k = start; k < pos; ++k) den *= 10;
        num = intpart * den + frac;
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        BigInt d;
        if (!parse_digits(text, pos, d) || d == 0) return std::nullopt;
        den = d;
    }
    if (pos != text.size()) return std::nullopt;
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

Rat rat_pow(const Rat& base, int exp) {
    Rat acc = 1;
    Rat b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
    return std::lcm(a, b);
}

}  // namespace vext
