#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fft.hpp"
#include "pinchext/errors.hpp"
#include "pinchext/extension.hpp"
#include "pinchext/parallel.hpp"

namespace pinchext {

namespace {

constexpr double unit_roundoff = std::numeric_limits<double>::epsilon();

struct CurveData {
    cvec phi;    // phi_k(lambda_m)
    cvec power;  // phi_k(lambda_m)^n for the current level
    cvec resid;  // F_k - sum_{j<n} A_j phi_k^j
    double sup_phi = 0.0;
    double min_phi = 0.0;
    double sup_F = 0.0;
    int winding = 0;
};

double prod_distance(cplx lambda, const std::vector<PinchPoint>& zeros, double power_scale) {
    double p = 1.0;
    for (const auto& a : zeros) p *= std::pow(std::abs(lambda - a.a), power_scale * a.order);
    return p;
}

double prod_poles(cplx lambda, const std::vector<PoleLine>& poles) {
    double p = 1.0;
    for (const auto& b : poles) p *= std::pow(std::abs(lambda - b.b), b.multiplicity);
    return p;
}

cplx horner(const cvec& a, cplx x) {
    cplx s{0.0, 0.0};
    for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * x + *it;
    return s;
}

void check_allowed(const RationalPart& part, int n, const CoefficientLadder& L, double match) {
    const int budget = n * L.N + L.M;
    if (part.degree() > budget) {
        std::ostringstream os;
        os << "ladder level " << n << " carries " << part.degree() << " poles, above n*N+M = " << budget;
        throw PoleCountError(os.str());
    }
    for (const auto& p : part.poles()) {
        int allowed = 0;
        for (const auto& a : L.zeros)
            if (std::abs(p.a - a.a) <= match) allowed += n * a.order;
        for (const auto& b : L.poles)
            if (std::abs(p.a - b.b) <= match) allowed += b.multiplicity;
        if (p.m > allowed) {
            std::ostringstream os;
            os << "ladder level " << n << ": pole " << p.a << " of multiplicity " << p.m
               << " is not among the admissible pinches and pole lines (allowed " << allowed << ")";
            throw PoleCountError(os.str());
        }
    }
}

} // namespace

cplx LadderEntry::operator()(cplx lambda, double exclusion) const {
    return principal(lambda, exclusion) + horner(tail, lambda);
}

cplx CoefficientLadder::A(int n, cplx lambda) const {
    if (n < 0 || n > depth()) return {0.0, 0.0};
    return entries[static_cast<std::size_t>(n)](lambda);
}

CoefficientLadder CoefficientLadder::with_scaled_entry(int n, cplx s) const {
    if (n < 0 || n > depth()) throw DomainError("ladder entry index out of range");
    CoefficientLadder L = *this;
    auto& e = L.entries[static_cast<std::size_t>(n)];
    e.principal = e.principal.scaled(s);
    for (auto& t : e.tail) t *= s;
    e.boundary_sup *= std::abs(s);
    return L;
}

CoefficientLadder coefficient_ladder(const RingFunction& f, const std::vector<DiscFunction>& curves,
                                     int depth, int n_max, const LadderOptions& opts) {
    if (curves.size() < 3) throw DomainError("coefficient_ladder needs at least three curves");
    if (depth < 0 || depth > 24) throw DomainError("ladder depth must lie in 0..24");
    if (n_max < 1 || n_max > 16) throw DomainError("N_max must lie in 1..16");
    const std::size_t M = opts.grid;
    const std::size_t Z = opts.z_nodes;
    if (M < 16 || !is_power_of_two(M)) throw DomainError("ladder grid must be a power of two >= 16");
    if (!is_power_of_two(Z) || Z < static_cast<std::size_t>(2 * (depth + 1)))
        throw DomainError("z_nodes must be a power of two above twice the depth");
    if (!(opts.rho > 0.0) || !(opts.rho < f.z_radius))
        throw DomainError("Cauchy radius rho must lie inside the z-range of the ring function");

    const RingFunction g = opts.subtract_plus ? subtract_plus_part(f, M) : f;
    const double eps = f.epsilon;
    const double rho = opts.rho;
    const std::size_t K = curves.size();

    cvec lam(M);
    for (std::size_t m = 0; m < M; ++m)
        lam[m] = std::polar(1.0, 2.0 * pi * static_cast<double>(m) / static_cast<double>(M));

    std::vector<CurveData> cd(K);
    parallel_for(K, opts.threads, [&](std::size_t k) {
        CurveData& c = cd[k];
        c.phi.resize(M);
        c.resid.resize(M);
        c.power.assign(M, cplx{1.0, 0.0});
        c.min_phi = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < M; ++m) {
            c.phi[m] = curves[k](lam[m]);
            c.resid[m] = g(lam[m], c.phi[m]);
            c.sup_phi = std::max(c.sup_phi, std::abs(c.phi[m]));
            c.min_phi = std::min(c.min_phi, std::abs(c.phi[m]));
            c.sup_F = std::max(c.sup_F, std::abs(c.resid[m]));
        }
        try {
            c.winding = winding_number([&](cplx l) { return curves[k](l); }, 1.0, M);
        } catch (const VanishingError&) {
            std::ostringstream os;
            os << "curve " << k << " vanishes on the unit circle";
            throw DomainError(os.str());
        }
    });

    CoefficientLadder L;
    L.epsilon = eps;
    L.n_max = n_max;
    L.rho = rho;
    for (const auto& c : cd) L.N = std::max(L.N, c.winding);
    for (std::size_t k = K - 3; k < K; ++k)
        if (!(cd[k].sup_phi < rho)) {
            std::ostringstream os;
            os << "curve " << k << " has sup " << cd[k].sup_phi << " >= rho = " << rho
               << "; the tail curves must approach phi_0 = 0";
            throw ConvergenceError(os.str());
        }

    const double zero_radius = 1.0 - eps / 2.0;
    for (const auto& c : cluster_points(curves[K - 1].zeros_in_disc(zero_radius), opts.zero_cluster))
        L.zeros.push_back({c.center, c.multiplicity});
    const std::size_t nz = curves[K - 1].zeros_in_disc(zero_radius).size();
    for (std::size_t k = K - 3; k < K - 1; ++k)
        if (curves[k].zeros_in_disc(zero_radius).size() != nz)
            throw ConvergenceError("zeros of the curves do not stabilise over the last three curves");

    // Boundary values of A_n on |lambda| = 1 by the Cauchy formula on |z| = rho.
    std::vector<cvec> Ab(static_cast<std::size_t>(depth) + 1, cvec(M));
    std::vector<double> srow(M, 0.0);
    parallel_for(M, opts.threads, [&](std::size_t m) {
        cvec vals(Z);
        for (std::size_t j = 0; j < Z; ++j) {
            const cplx z = std::polar(rho, 2.0 * pi * static_cast<double>(j) / static_cast<double>(Z));
            vals[j] = g.evaluator(lam[m], z);
            srow[m] = std::max(srow[m], std::abs(vals[j]));
        }
        const cvec d = detail::fft_forward(vals);
        for (int n = 0; n <= depth; ++n)
            Ab[static_cast<std::size_t>(n)][m] = d[static_cast<std::size_t>(n)] * std::pow(rho, -n);
    });
    const double S_rho = *std::max_element(srow.begin(), srow.end());

    DetectOptions det = opts.detect;
    if (det.delta_pole <= 0.0) det.delta_pole = eps / 2.0;

    std::vector<double> sup_prev; // sup |A_j| on the circle for j < n
    for (int n = 0; n <= depth; ++n) {
        const cvec& An_s = Ab[static_cast<std::size_t>(n)];
        const CircleFunction An = CircleFunction::analyze(An_s, 1.0);
        const HardySplit split = hardy_split(An);
        const double scale_n = S_rho * std::pow(rho, -n);
        const int budget = n == 0 ? n_max : std::min(16, n * L.N + L.M);

        LadderEntry e;
        e.n = n;
        if (split.minus.sup_norm() > 1e-12 * scale_n) {
            if (budget == 0) {
                std::ostringstream os;
                os << "ladder level " << n << " has a nonzero principal part but no pole budget";
                throw PoleCountError(os.str());
            }
            DetectOptions dl = det;
            // Cauchy-formula roundoff in A_n scales like S_rho rho^{-n}.
            dl.noise_reference = std::max(An.max_mode(), scale_n);
            const RationalityVerdict v = detect_rational(split.minus, budget, dl);
            if (!v.rational()) {
                std::ostringstream os;
                os << "ladder level " << n << " is not rational with at most " << budget << " poles";
                throw PoleCountError(os.str());
            }
            e.principal = v.part;
        }
        if (n == 0) {
            for (const auto& p : e.principal.poles()) L.poles.push_back({p.a, p.m});
            L.M = e.principal.degree();
        } else {
            check_allowed(e.principal, n, L, opts.pole_match);
        }

        const cvec& plus = split.plus.modes();
        double pmax = 0.0;
        for (std::size_t j = 0; j < M / 2; ++j) pmax = std::max(pmax, std::abs(plus[j]));
        std::size_t last = 0;
        for (std::size_t j = 0; j < M / 2; ++j)
            if (std::abs(plus[j]) > 1e-16 * pmax) last = j + 1;
        e.tail.assign(plus.begin(), plus.begin() + static_cast<std::ptrdiff_t>(last));
        e.boundary_sup = An.sup_norm();

        // Per-curve Blaschke-corrected quotients f_{n,k}.
        std::vector<double> dev(K), gsup(K), gminus(K);
        std::vector<int> count(K);
        const int budget_k = n == 0 ? n_max : std::min(16, n * L.N + L.M);
        parallel_for(K, opts.threads, [&](std::size_t k) {
            const CurveData& c = cd[k];
            cvec fq(M);
            double dv = 0.0;
            for (std::size_t m = 0; m < M; ++m) {
                fq[m] = c.resid[m] / c.power[m];
                dv = std::max(dv, std::abs(fq[m] - An_s[m]));
            }
            dev[k] = dv;
            const CircleFunction fn = CircleFunction::analyze(fq, 1.0);
            const CircleFunction fm = hardy_project_minus(fn);
            cvec bz;
            int cnt = -1;
            if (fm.sup_norm() <= 1e-12 * std::max(fn.sup_norm(), 1e-300)) {
                cnt = 0;
            } else {
                try {
                    DetectOptions dk = det;
                    dk.noise_reference = fn.max_mode();
                    const RationalityVerdict v = detect_rational(fm, budget_k, dk);
                    if (v.rational()) {
                        cnt = v.part.degree();
                        for (const auto& p : v.part.poles())
                            for (int i = 0; i < p.m; ++i) bz.push_back(p.a);
                    }
                } catch (const Error&) {
                }
                if (cnt < 0) {
                    for (const auto& a : L.zeros)
                        for (int i = 0; i < n * a.order; ++i) bz.push_back(a.a);
                    for (const auto& b : L.poles)
                        for (int i = 0; i < b.multiplicity; ++i) bz.push_back(b.b);
                }
            }
            count[k] = cnt;
            cvec zin;
            for (const auto& b : bz)
                if (std::abs(b) < 1.0) zin.push_back(b);
            const BlaschkeProduct B(zin);
            cvec gs(M);
            for (std::size_t m = 0; m < M; ++m) gs[m] = B(lam[m]) * fq[m];
            const CircleFunction gk = CircleFunction::analyze(std::move(gs), 1.0);
            gsup[k] = gk.sup_norm();
            gminus[k] = hardy_project_minus(gk).sup_norm() / std::max(gsup[k], 1e-300);
        });
        e.corrected_sup = *std::max_element(gsup.begin(), gsup.end());
        e.corrected_minus = *std::max_element(gminus.begin(), gminus.end());

        for (std::size_t k = K - 3; k < K; ++k) {
            const CurveData& c = cd[k];
            const double q = c.sup_phi / rho;
            const double bound = S_rho * std::pow(rho, -n) * q / (1.0 - q);
            double mass = c.sup_F;
            for (int j = 0; j < n; ++j) mass += sup_prev[static_cast<std::size_t>(j)] * std::pow(c.sup_phi, j);
            const double round = 64.0 * unit_roundoff * mass / std::pow(c.min_phi, n);
            e.curve_deviation.push_back(dev[k]);
            e.curve_bound.push_back(bound);
            e.curve_pole_count.push_back(count[k]);
            if (dev[k] > bound * (1.0 + 1e-3) + round + opts.ladder_tol) {
                std::ostringstream os;
                os << "ladder level " << n << ", curve " << k << ": sup|f_{n,k} - A_n| = " << dev[k]
                   << " exceeds the geometric tail bound " << bound;
                throw ConvergenceError(os.str());
            }
        }

        for (std::size_t k = 0; k < K; ++k) {
            CurveData& c = cd[k];
            for (std::size_t m = 0; m < M; ++m) {
                c.resid[m] -= An_s[m] * c.power[m];
                c.power[m] *= c.phi[m];
            }
        }
        sup_prev.push_back(e.boundary_sup);
        L.entries.push_back(std::move(e));
    }

    for (int n = 0; n <= depth; ++n) {
        const double grow = std::pow(1.0 + eps, n);
        L.C = std::max(L.C, L.entries[static_cast<std::size_t>(n)].boundary_sup * grow);
        for (std::size_t m = 0; m < M; ++m) {
            const double v = std::abs(L.A(n, lam[m])) * prod_distance(lam[m], L.zeros, n) *
                             prod_poles(lam[m], L.poles) * grow;
            L.C_prime = std::max(L.C_prime, v);
        }
    }
    return L;
}

double PinchDescriptor::domain_radius(cplx lambda) const {
    return c * prod_distance(lambda, pinches, 1.0);
}

bool PinchDescriptor::contains(cplx lambda, cplx z) const {
    return std::abs(z) < domain_radius(lambda);
}

PinchDescriptor pinch_estimate(const CoefficientLadder& ladder, const PinchOptions& opts) {
    if (ladder.entries.empty()) throw DomainError("pinch_estimate: empty ladder");
    if (ladder.depth() < 2) throw DomainError("pinch_estimate: ladder depth must be at least 2");
    PinchDescriptor d;
    for (const auto& a : ladder.zeros) {
        bool pole = false;
        for (const auto& e : ladder.entries)
            for (const auto& p : e.principal.poles()) pole = pole || std::abs(p.a - a.a) <= opts.pole_match;
        if (pole) d.pinches.push_back(a);
    }
    d.pole_lines = ladder.poles;
    for (const auto& a : d.pinches)
        if (!(std::abs(a.a) < 1.0 - ladder.epsilon)) d.pinches_in_core = false;
    if (d.pinches.empty() && d.pole_lines.empty()) {
        d.c = 1.0;
        return d;
    }

    const double outer = 1.0 - ladder.epsilon / 4.0;
    cvec pts;
    for (int ri = 1; ri <= 4; ++ri) {
        const double r = outer * ri / 4.0;
        for (std::size_t m = 0; m < opts.grid; ++m) {
            const cplx l = std::polar(r, 2.0 * pi * (static_cast<double>(m) + 0.5 * (ri % 2)) /
                                             static_cast<double>(opts.grid));
            bool near = false;
            for (const auto& a : d.pinches) near = near || std::abs(l - a.a) < opts.exclusion;
            for (const auto& b : d.pole_lines) near = near || std::abs(l - b.b) < opts.exclusion;
            if (!near) pts.push_back(l);
        }
    }

    const int D = ladder.depth();
    // Levels that are zero up to roundoff carry no ratio information.
    double amax = 0.0;
    for (int n = 0; n <= D; ++n)
        for (const auto& p : pts) amax = std::max(amax, std::abs(ladder.A(n, p)));
    double worst = 0.0;
    for (int n = std::max(0, D - 3); n < D; ++n) {
        std::vector<cplx> an(pts.size()), an1(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            an[i] = ladder.A(n, pts[i]);
            an1[i] = ladder.A(n + 1, pts[i]);
        }
        if (amax == 0.0) continue;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (std::abs(an[i]) <= 1e-12 * amax || std::abs(an1[i]) <= 1e-12 * amax) continue;
            const double r = std::abs(an1[i]) * prod_distance(pts[i], d.pinches, 1.0) / std::abs(an[i]);
            worst = std::max(worst, r);
        }
    }
    double c = 1.0;
    int halvings = 0;
    while (worst * c > 0.5) {
        c *= 0.5;
        if (++halvings > opts.max_halvings)
            throw ConvergenceError("pinch_estimate: no admissible constant c found");
    }
    d.c = c;
    return d;
}

ExtensionValue evaluate_extension(const CoefficientLadder& ladder, const PinchDescriptor& desc,
                                  cplx lambda, cplx z, double tolerance) {
    if (ladder.entries.empty()) throw DomainError("evaluate_extension: empty ladder");
    if (std::abs(lambda) > 1.0) throw DomainError("evaluate_extension: lambda outside the closed unit disc");
    for (const auto& b : desc.pole_lines)
        if (std::abs(lambda - b.b) < 1e-6) throw PoleError("evaluate_extension: point on a pole line");
    const double rad = desc.domain_radius(lambda);
    if (!(std::abs(z) < 0.9 * rad)) {
        std::ostringstream os;
        os << "evaluate_extension: (" << lambda << ", " << z << ") outside the pinched domain (|z| must be < "
           << 0.9 * rad << ")";
        throw DomainError(os.str());
    }
    ExtensionValue out;
    cplx zn{1.0, 0.0};
    for (int n = 0; n <= ladder.depth(); ++n) {
        out.value += ladder.A(n, lambda) * zn;
        zn *= z;
    }
    const double q = std::abs(z) / (prod_distance(lambda, desc.pinches, 1.0) * (1.0 + ladder.epsilon));
    if (q >= 1.0) {
        out.truncation_bound = std::numeric_limits<double>::infinity();
    } else {
        out.truncation_bound = ladder.C_prime * std::pow(q, ladder.depth() + 1) /
                               ((1.0 - q) * prod_poles(lambda, desc.pole_lines));
    }
    if (!(out.truncation_bound <= tolerance)) {
        std::ostringstream os;
        os << "evaluate_extension: truncation bound " << out.truncation_bound << " above tolerance "
           << tolerance;
        throw ConvergenceError(os.str());
    }
    return out;
}

std::vector<BoundViolation> verify_coefficient_bounds(const CoefficientLadder& ladder,
                                                      const BoundOptions& opts) {
    std::vector<BoundViolation> out;
    const double r = 1.0 - ladder.epsilon / 4.0;
    for (std::size_t m = 0; m < opts.grid; ++m) {
        const cplx l = std::polar(r, 2.0 * pi * static_cast<double>(m) / static_cast<double>(opts.grid));
        bool near = false;
        for (const auto& a : ladder.zeros) near = near || std::abs(l - a.a) < opts.exclusion;
        for (const auto& b : ladder.poles) near = near || std::abs(l - b.b) < opts.exclusion;
        if (near) continue;
        for (int n = 0; n <= ladder.depth(); ++n) {
            const double lhs = std::abs(ladder.A(n, l));
            const double rhs = ladder.C_prime / (prod_distance(l, ladder.zeros, n) * prod_poles(l, ladder.poles) *
                                                 std::pow(1.0 + ladder.epsilon, n));
            if (lhs > rhs * (1.0 + opts.rel_slack)) out.push_back({n, l, lhs, rhs});
        }
    }
    return out;
}

std::vector<RayProfileRow> ray_profile(const CoefficientLadder& ladder, double angle,
                                       const std::vector<double>& radii) {
    std::vector<RayProfileRow> rows;
    for (int n = 0; n <= ladder.depth(); ++n)
        for (double r : radii) {
            try {
                rows.push_back({n, r, std::abs(ladder.A(n, std::polar(r, angle)))});
            } catch (const PoleError&) {
            }
        }
    return rows;
}

} // namespace pinchext
