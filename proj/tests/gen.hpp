#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vext/poly.hpp"
#include "vext/ratfunc.hpp"
#include "vext/value.hpp"
#include "vext/vreal.hpp"

namespace gen {

// Polynomial from integer coefficients, low to high degree.
inline vext::Poly poly_of(std::initializer_list<long long> coeffs) {
    std::vector<vext::Rat> cs;
    for (long long c : coeffs) cs.emplace_back(c);
    return vext::Poly(std::move(cs));
}

// Deterministic generators for property tests; every test fixes its own seed.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }

    vext::Rat rat(std::int64_t num_mag = 9, std::int64_t den_mag = 5) {
        return vext::Rat(pick(-num_mag, num_mag), pick(1, den_mag));
    }

    vext::Rat positive_rat(std::int64_t num_mag = 9, std::int64_t den_mag = 5) {
        return vext::Rat(pick(1, num_mag), pick(1, den_mag));
    }

    vext::Poly poly(int max_degree, std::int64_t mag = 5) {
        int deg = static_cast<int>(pick(0, max_degree));
        std::vector<vext::Rat> coeffs;
        for (int k = 0; k <= deg; ++k) coeffs.push_back(rat(mag, 3));
        return vext::Poly(std::move(coeffs));
    }

    vext::Poly nonzero_poly(int max_degree, std::int64_t mag = 5) {
        while (true) {
            vext::Poly p = poly(max_degree, mag);
            if (!p.is_zero()) return p;
        }
    }

    vext::RatFunc ratfunc(int max_degree = 4) {
        return vext::RatFunc(poly(max_degree), nonzero_poly(max_degree));
    }

    vext::VirtualReal vreal(int max_period = 4, int max_degree = 4) {
        int period = static_cast<int>(pick(1, max_period));
        std::vector<vext::RatFunc> branches;
        for (int j = 0; j < period; ++j) branches.push_back(ratfunc(max_degree));
        return vext::VirtualReal::cyclic(branches);
    }

    // A real whose branches all converge: constant plus a proper fraction.
    vext::VirtualReal finite_vreal(int max_period = 3) {
        int period = static_cast<int>(pick(1, max_period));
        std::vector<vext::RatFunc> branches;
        for (int j = 0; j < period; ++j) {
            vext::Poly den = nonzero_poly(3);
            while (den.degree() < 1) den = nonzero_poly(3);
            vext::RatFunc tail(poly(den.degree() - 1), den);
            branches.push_back(add(vext::RatFunc(rat()), tail, vext::default_caps()));
        }
        return vext::VirtualReal::cyclic(branches);
    }
};

}  // namespace gen
