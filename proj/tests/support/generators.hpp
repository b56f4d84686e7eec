#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include <pinchext/boundary.hpp>
#include <pinchext/disc.hpp>
#include <pinchext/extension.hpp>
#include <pinchext/rational.hpp>

namespace pinchext::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline cplx normal_complex(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

inline cplx polar_uniform(Rng& rng, double rmin, double rmax) {
    return std::polar(uniform(rng, rmin, rmax), uniform(rng, 0.0, 2.0 * pi));
}

// Samples of sum c_n lambda^n on |lambda| = 1, evaluated pointwise
// (not synthesized from modes) so the FFT analysis is exercised.
inline CircleFunction sampled_laurent(const std::vector<std::pair<int, cplx>>& terms, std::size_t grid) {
    cvec s(grid, cplx{0.0, 0.0});
    for (std::size_t m = 0; m < grid; ++m) {
        const double th = 2.0 * pi * static_cast<double>(m) / static_cast<double>(grid);
        for (const auto& [n, c] : terms) s[m] += c * std::polar(1.0, n * th);
    }
    return CircleFunction::analyze(std::move(s), 1.0);
}

// Laurent polynomial with modes -B..B, B drawn from 1..bandwidth.
inline CircleFunction random_laurent(Rng& rng, int bandwidth, std::size_t grid) {
    std::vector<std::pair<int, cplx>> terms;
    const int B = uniform_int(rng, 1, bandwidth);
    for (int n = -B; n <= B; ++n) terms.emplace_back(n, normal_complex(rng));
    return sampled_laurent(terms, grid);
}

// Polynomial with modes 0..B.
inline std::vector<std::pair<int, cplx>> random_polynomial_terms(Rng& rng, int bandwidth) {
    std::vector<std::pair<int, cplx>> terms;
    const int B = uniform_int(rng, 0, bandwidth);
    for (int n = 0; n <= B; ++n) terms.emplace_back(n, normal_complex(rng));
    return terms;
}

inline CircleFunction random_polynomial(Rng& rng, int bandwidth, std::size_t grid) {
    return sampled_laurent(random_polynomial_terms(rng, bandwidth), grid);
}

// Random polynomial plus one negative mode of modulus in [0.5, 2].
inline CircleFunction random_with_negative_mode(Rng& rng, int bandwidth, std::size_t grid) {
    auto terms = random_polynomial_terms(rng, bandwidth);
    terms.emplace_back(-uniform_int(rng, 1, bandwidth), polar_uniform(rng, 0.5, 2.0));
    return sampled_laurent(terms, grid);
}

// Poles with |a| <= max_radius, pairwise separation >= min_sep, multiplicities 1..3,
// total degree target in 1..max_degree, coefficient moduli in [0.5, 2].
inline RationalPart random_rational_part(Rng& rng, int max_degree = 8, double max_radius = 0.8,
                                         double min_sep = 0.15) {
    const int target = uniform_int(rng, 1, max_degree);
    std::vector<Pole> poles;
    int degree = 0;
    while (degree < target) {
        const int m = std::min(uniform_int(rng, 1, 3), target - degree);
        cplx a;
        bool ok = false;
        for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
            a = std::polar(max_radius * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 2.0 * pi));
            ok = std::all_of(poles.begin(), poles.end(), [&](const Pole& p) { return std::abs(p.a - a) >= min_sep; });
        }
        if (!ok) break;
        Pole p;
        p.a = a;
        p.m = m;
        for (int k = 0; k < m; ++k) p.c.push_back(polar_uniform(rng, 0.5, 2.0));
        poles.push_back(std::move(p));
        degree += m;
    }
    return RationalPart(std::move(poles));
}

// Curve of degree <= 4 with phi(0) = phi0 and sup bound below 0.95.
inline DiscFunction random_curve(Rng& rng, cplx phi0, int degree = 4) {
    cvec a(static_cast<std::size_t>(degree) + 1);
    a[0] = phi0;
    double mass = 0.0;
    for (int k = 1; k <= degree; ++k) {
        a[static_cast<std::size_t>(k)] = normal_complex(rng);
        mass += std::abs(a[static_cast<std::size_t>(k)]);
    }
    const double room = 0.95 - std::abs(phi0);
    const double target = uniform(rng, 0.2, 1.0) * room;
    for (int k = 1; k <= degree; ++k) a[static_cast<std::size_t>(k)] *= target / mass;
    return DiscFunction(std::move(a));
}

inline double dyadic(Rng& rng, int lo, int hi, int denom) {
    return static_cast<double>(uniform_int(rng, lo, hi)) / denom;
}

} // namespace pinchext::testing
