#pragma once

#include <map>
#include <utility>

#include "generators.hpp"

namespace pinchext::testing {

// f(lambda, phi(lambda)) for a bivariate Laurent polynomial and a polynomial
// curve, expanded exactly. All coefficients are dyadic with few bits, so the
// double arithmetic below is exact.
inline std::map<int, cplx> compose_exact(const LaurentPoly2& f, const DiscFunction& phi) {
    std::map<int, cplx> out;
    for (const auto& [key, a] : f.coeffs()) {
        const auto [n, l] = key;
        cvec p{cplx{1.0, 0.0}};
        for (int j = 0; j < n; ++j) {
            cvec q(p.size() + phi.coeffs().size() - 1, cplx{0.0, 0.0});
            for (std::size_t u = 0; u < p.size(); ++u)
                for (std::size_t v = 0; v < phi.coeffs().size(); ++v) q[u + v] += p[u] * phi.coeffs()[v];
            p = std::move(q);
        }
        for (std::size_t u = 0; u < p.size(); ++u) out[static_cast<int>(u) + l] += a * p[u];
    }
    return out;
}

struct OracleCase {
    LaurentPoly2 f;
    DiscFunction phi;
    ExtensionKind kind = ExtensionKind::holomorphic;
    int pole_order = 0; // order of the pole at 0 when meromorphic
};

inline OracleCase symbolic_verdict(LaurentPoly2 f, DiscFunction phi) {
    OracleCase c{std::move(f), std::move(phi), ExtensionKind::holomorphic, 0};
    for (const auto& [k, v] : compose_exact(c.f, c.phi))
        if (k < 0 && v != cplx{0.0, 0.0}) c.pole_order = std::max(c.pole_order, -k);
    if (c.pole_order > 0) c.kind = ExtensionKind::meromorphic;
    return c;
}

// z-degree <= 6, lambda-degree in [-6, 6]; half of the cases are built so that
// every negative power is cancelled by a zero of phi at the origin.
inline OracleCase random_oracle_case(Rng& rng) {
    const bool structured = uniform_int(rng, 0, 1) == 1;
    DiscFunction phi;
    for (;;) {
        const int deg = uniform_int(rng, structured ? 1 : 0, 3);
        cvec a(static_cast<std::size_t>(deg) + 1);
        for (auto& v : a) v = {dyadic(rng, -2, 2, 8), dyadic(rng, -2, 2, 8)};
        if (structured) a[0] = 0.0;
        phi = DiscFunction(a);
        if (!phi.is_zero() && phi.sup_bound(1.0) < 0.95) break;
    }
    std::map<std::pair<int, int>, cplx> coeffs;
    const int terms = uniform_int(rng, 1, 6);
    for (int t = 0; t < terms; ++t) {
        const int n = uniform_int(rng, 0, 6);
        const int l = uniform_int(rng, structured ? std::max(-6, -n) : -6, 6);
        cplx v{dyadic(rng, -4, 4, 4), dyadic(rng, -4, 4, 4)};
        if (v == cplx{0.0, 0.0}) v = 1.0;
        coeffs[{n, l}] += v;
    }
    return symbolic_verdict(LaurentPoly2(std::move(coeffs)), std::move(phi));
}

inline bool verdict_matches(const OracleCase& c, const ExtensionVerdict& v) {
    if (v.kind != c.kind) return false;
    if (c.kind != ExtensionKind::meromorphic) return true;
    const auto& poles = v.part.poles();
    return poles.size() == 1 && std::abs(poles[0].a) < 1e-6 && poles[0].m == c.pole_order;
}

} // namespace pinchext::testing
