#include "pinchext/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "pinchext/boundary.hpp"
#include "pinchext/errors.hpp"

namespace pinchext {

namespace {

constexpr double circle_tol = 1e-6;

std::optional<int> winding_on_radius(const cvec& roots, double r) {
    int w = 0;
    for (const auto& z : roots) {
        const double a = std::abs(z);
        if (std::abs(a - r) <= circle_tol) return std::nullopt;
        if (a < r) ++w;
    }
    return w;
}

} // namespace

bool vanishes_near_circle(const DiscFunction& phi, double r, double tol) {
    if (phi.is_zero()) return true;
    for (const auto& z : phi.roots())
        if (std::abs(std::abs(z) - r) <= tol) return true;
    return false;
}

std::vector<double> scan_radii(double epsilon, int count) {
    std::vector<double> r;
    for (int i = 0; i < count; ++i) r.push_back(1.0 - epsilon / 2.0 + epsilon * (i + 0.5) / count);
    return r;
}

TestSequenceReport validate_test_sequence(const std::vector<DiscFunction>& curves, const DiscFunction& phi0,
                                          int N_bound, double zero_tolerance) {
    if (curves.size() < 3) throw DomainError("validate_test_sequence needs at least three curves");
    TestSequenceReport rep;
    rep.N_bound = N_bound;
    bool ok = true;
    WindingOptions wopts;
    wopts.zero_tolerance = zero_tolerance;
    for (std::size_t k = 0; k < curves.size(); ++k) {
        CurveWinding cw;
        cw.index = k;
        const DiscFunction d = curves[k] - phi0;
        if (d.is_zero()) {
            cw.failure = "curve coincides with phi_0";
        } else {
            try {
                cw.winding = winding_number([&](cplx l) { return d(l); }, 1.0, 256, wopts);
            } catch (const VanishingError& e) {
                cw.failure = e.what();
            } catch (const ConvergenceError& e) {
                cw.failure = e.what();
            }
        }
        const bool bad = !cw.winding || *cw.winding > N_bound;
        if (cw.winding) rep.N = std::max(rep.N, *cw.winding);
        if (bad && !rep.first_failure) rep.first_failure = k;
        ok = ok && !bad;
        rep.curves.push_back(std::move(cw));
    }
    rep.is_test = ok;
    return rep;
}

TestFamilyReport validate_test_family(const std::vector<DiscFunction>& curves, int N_bound, double epsilon) {
    if (curves.size() < 2) throw DomainError("validate_test_family needs at least two curves");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("ring width must lie in (0, 1)");
    TestFamilyReport rep;
    rep.N_bound = N_bound;
    rep.all_witnessed = true;
    for (std::size_t s = 0; s < curves.size(); ++s)
        for (std::size_t t = s + 1; t < curves.size(); ++t) {
            PairWitness w;
            w.s = s;
            w.t = t;
            const DiscFunction d = curves[s] - curves[t];
            if (d.is_zero()) {
                w.failure = "curves coincide";
            } else {
                const cvec roots = d.roots();
                for (int count : {32, 64}) {
                    for (double r : scan_radii(epsilon, count)) {
                        const auto wr = winding_on_radius(roots, r);
                        if (wr && *wr <= N_bound) {
                            w.radius = r;
                            w.winding = wr;
                            break;
                        }
                    }
                    if (w.radius) break;
                }
                if (!w.radius) w.failure = "no zero-free radius with winding <= N_bound";
            }
            rep.all_witnessed = rep.all_witnessed && w.radius.has_value();
            rep.pairs.push_back(std::move(w));
        }
    return rep;
}

GeneralPositionReport general_position_check(const std::vector<DiscFunction>& curves, const DiscFunction& phi0,
                                             const cvec& probes, double probe_radius, std::size_t max_triples) {
    if (curves.size() < 3) throw DomainError("general_position_check needs at least three curves");
    GeneralPositionReport rep;
    rep.probe_radius = probe_radius;
    const std::size_t K = curves.size();

    std::vector<std::optional<cvec>> zeros(K); // empty optional: difference vanishes identically
    for (std::size_t k = 0; k < K; ++k) {
        const DiscFunction d = curves[k] - phi0;
        if (!d.is_zero()) zeros[k] = d.zeros_in_disc(1.0);
    }
    for (const auto& p : probes) {
        ProbeVerdict v;
        v.probe = p;
        for (std::size_t k = 0; k < K; ++k) {
            if (!zeros[k]) continue;
            const bool avoids = std::all_of(zeros[k]->begin(), zeros[k]->end(),
                                            [&](cplx z) { return std::abs(z - p) >= probe_radius; });
            if (avoids) v.avoiding.push_back(k);
        }
        v.passes = v.avoiding.size() >= 3;
        rep.probes.push_back(std::move(v));
    }

    // Pairwise coincidence points inside the disc.
    std::vector<std::vector<std::optional<cvec>>> pair_roots(K, std::vector<std::optional<cvec>>(K));
    for (std::size_t s = 0; s < K; ++s)
        for (std::size_t t = s + 1; t < K; ++t) {
            const DiscFunction d = curves[s] - curves[t];
            if (!d.is_zero()) pair_roots[s][t] = d.zeros_in_disc(1.0);
        }
    for (std::size_t a = 0; a < K && rep.triples.size() < max_triples; ++a)
        for (std::size_t b = a + 1; b < K && rep.triples.size() < max_triples; ++b)
            for (std::size_t c = b + 1; c < K && rep.triples.size() < max_triples; ++c) {
                std::size_t u = a, w = b, other = c;
                if (!pair_roots[a][b]) {
                    w = c;
                    other = b;
                }
                if (!pair_roots[u][w]) {
                    rep.triples.push_back({a, b, c, {0.0, 0.0}, curves[a](0.0)});
                    continue;
                }
                for (const auto& l : *pair_roots[u][w]) {
                    if (std::abs(curves[u](l) - curves[other](l)) < 1e-9 &&
                        std::abs(curves[u](l) - curves[w](l)) < 1e-9) {
                        rep.triples.push_back({a, b, c, l, curves[a](l)});
                        break;
                    }
                }
            }
    return rep;
}

WindingProfile winding_profile(const std::function<DiscFunction(cplx)>& family, const std::vector<cplx>& alphas,
                               cplx alpha0, double epsilon) {
    if (alphas.empty()) throw DomainError("winding_profile: empty parameter grid");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("ring width must lie in (0, 1)");
    for (const auto& a : alphas)
        if (a == alpha0) throw DomainError("winding_profile: parameter grid contains alpha_0");
    const DiscFunction base = family(alpha0);
    std::vector<cvec> roots;
    for (const auto& a : alphas) {
        const DiscFunction d = family(a) - base;
        if (d.is_zero()) {
            std::ostringstream os;
            os << "winding_profile: phi_alpha - phi_alpha0 vanishes identically at alpha = " << a;
            throw DomainError(os.str());
        }
        roots.push_back(d.roots());
    }
    WindingProfile out;
    out.alpha0 = alpha0;
    out.alphas = alphas;
    // The witness radius is the scanned radius farthest from every zero of every
    // difference, so small parameter moves cannot carry a zero across it.
    std::optional<double> best;
    double clearance = 0.0;
    for (int count : {32, 64}) {
        for (double r : scan_radii(epsilon, count)) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& rt : roots)
                for (const auto& z : rt) d = std::min(d, std::abs(std::abs(z) - r));
            if (d > circle_tol && (!best || d > clearance)) {
                best = r;
                clearance = d;
            }
        }
        if (best) break;
    }
    if (best) {
        out.radius = *best;
        for (const auto& rt : roots) out.windings.push_back(*winding_on_radius(rt, *best));
        out.constant = std::all_of(out.windings.begin(), out.windings.end(),
                                   [&](int v) { return v == out.windings.front(); });
        return out;
    }
    throw ConvergenceError("winding_profile: no common zero-free radius found");
}

} // namespace pinchext
