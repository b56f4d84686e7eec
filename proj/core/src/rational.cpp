#include "pinchext/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pinchext/disc.hpp"
#include "pinchext/errors.hpp"

namespace pinchext {

RationalPart::RationalPart(std::vector<Pole> poles) : poles_(std::move(poles)) {
    for (const auto& p : poles_) {
        if (p.m < 1) throw DomainError("pole multiplicity must be positive");
        if (static_cast<int>(p.c.size()) != p.m)
            throw DomainError("pole needs exactly m principal coefficients");
    }
}

int RationalPart::degree() const {
    int d = 0;
    for (const auto& p : poles_) d += p.m;
    return d;
}

cplx RationalPart::operator()(cplx lambda, double exclusion) const {
    cplx s{0.0, 0.0};
    for (const auto& p : poles_) {
        const cplx w = lambda - p.a;
        if (std::abs(w) < exclusion) {
            std::ostringstream os;
            os << "evaluation within " << exclusion << " of pole " << p.a;
            throw PoleError(os.str());
        }
        const cplx inv = 1.0 / w;
        cplx acc{0.0, 0.0};
        // sum_k c[k] w^{k-m} = w^{-m} (c0 + c1 w + ...), Horner in w then scaled.
        for (int k = p.m - 1; k >= 0; --k) acc = acc * w + p.c[static_cast<std::size_t>(k)];
        s += acc * std::pow(inv, p.m);
    }
    return s;
}

RationalPart RationalPart::scaled(cplx s) const {
    std::vector<Pole> q = poles_;
    for (auto& p : q)
        for (auto& c : p.c) c *= s;
    return RationalPart(std::move(q));
}

CircleFunction RationalPart::on_circle(double radius, std::size_t grid) const {
    return CircleFunction::sample([this](cplx l) { return (*this)(l, 0.0); }, radius, grid);
}

cplx evaluate_rational(const RationalPart& rp, cplx lambda, double exclusion) {
    return rp(lambda, exclusion);
}

BlaschkeProduct::BlaschkeProduct(cvec zeros) : zeros_(std::move(zeros)) {
    for (const auto& b : zeros_)
        if (!(std::abs(b) < 1.0)) throw DomainError("Blaschke zero must lie in the open unit disc");
}

cplx BlaschkeProduct::operator()(cplx lambda) const {
    cplx s{1.0, 0.0};
    for (const auto& b : zeros_) s *= (lambda - b) / (1.0 - std::conj(b) * lambda);
    return s;
}

BlaschkeProduct blaschke_from_zeros(cvec zeros) { return BlaschkeProduct(std::move(zeros)); }

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

struct Fit {
    RationalPart part;
    double residual = std::numeric_limits<double>::infinity();
};

Fit fit_principal_parts(const CircleFunction& psi, const std::vector<RootCluster>& clusters) {
    const std::size_t M = psi.size();
    int cols = 0;
    for (const auto& c : clusters) cols += c.multiplicity;
    MatrixXcd B(static_cast<Index>(M), cols);
    VectorXcd y(static_cast<Index>(M));
    for (std::size_t i = 0; i < M; ++i) {
        const cplx l = psi.point(i);
        y(static_cast<Index>(i)) = psi.samples()[i];
        Index col = 0;
        for (const auto& c : clusters) {
            const cplx inv = 1.0 / (l - c.center);
            cplx p = inv;
            for (int k = 1; k <= c.multiplicity; ++k) {
                B(static_cast<Index>(i), col++) = p;
                p *= inv;
            }
        }
    }
    const VectorXcd x = B.colPivHouseholderQr().solve(y);
    const double ny = y.norm();
    Fit f;
    f.residual = ny > 0.0 ? (B * x - y).norm() / ny : 0.0;
    std::vector<Pole> poles;
    Index col = 0;
    for (const auto& c : clusters) {
        Pole p{c.center, c.multiplicity, cvec(static_cast<std::size_t>(c.multiplicity))};
        // column for (lambda - a)^{-q} holds c[m - q]
        for (int q = 1; q <= c.multiplicity; ++q)
            p.c[static_cast<std::size_t>(c.multiplicity - q)] = x(col++);
        poles.push_back(std::move(p));
    }
    f.part = RationalPart(std::move(poles));
    return f;
}

std::vector<RootCluster> to_clusters(const cvec& ev, const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<RootCluster> out;
    for (const auto& g : groups) {
        cplx s{0.0, 0.0};
        for (auto i : g) s += ev[i];
        out.push_back({s / static_cast<double>(g.size()), static_cast<int>(g.size())});
    }
    return out;
}

double group_distance(const cvec& ev, const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
    double d = std::numeric_limits<double>::infinity();
    for (auto i : a)
        for (auto j : b) d = std::min(d, std::abs(ev[i] - ev[j]));
    return d;
}

// Hierarchical single-linkage clustering; returns the coarsest partition whose
// least-squares fit stays within tolerance of the finest one.
Fit cluster_and_fit(const CircleFunction& psi, const cvec& ev, const DetectOptions& opts) {
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < ev.size(); ++i) groups.push_back({i});
    // Mandatory merge below cluster_radius.
    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t i = 0; i < groups.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < groups.size() && !merged; ++j)
                if (group_distance(ev, groups[i], groups[j]) <= opts.cluster_radius) {
                    groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
                    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
    }
    std::vector<std::vector<std::vector<std::size_t>>> levels{groups};
    while (groups.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t j = i + 1; j < groups.size(); ++j) {
                const double d = group_distance(ev, groups[i], groups[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        if (best > opts.merge_limit) break;
        groups[bi].insert(groups[bi].end(), groups[bj].begin(), groups[bj].end());
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
        levels.push_back(groups);
    }
    Fit finest = fit_principal_parts(psi, to_clusters(ev, levels.front()));
    const double accept = std::max(opts.fit_tol, opts.fit_slack * finest.residual);
    for (std::size_t k = levels.size() - 1; k > 0; --k) {
        Fit f = fit_principal_parts(psi, to_clusters(ev, levels[k]));
        if (f.residual <= accept) return f;
    }
    return finest;
}

struct OriginScan {
    int J = 0;
    double ratio = 0.0;
    double eta = 0.0;
    double fit_residual = 0.0;
};

// Finite-support analysis of the negative modes: J is the last mode above the
// noise threshold, ratio the cliff from d_{-J} down to everything beyond it.
OriginScan origin_scan(const CircleFunction& psi, double dmax, const DetectOptions& opts) {
    const int half = static_cast<int>(psi.size()) / 2;
    OriginScan o;
    o.eta = std::max(psi.noise_floor(), 1e-16 * std::max(dmax, opts.noise_reference));
    const double thr = opts.origin_noise_factor * o.eta;
    for (int j = 1; j <= half; ++j)
        if (std::abs(psi.mode(-j)) > thr) o.J = j;
    if (o.J == 0) return o;
    double tail = 0.0, tail2 = 0.0, all2 = 0.0;
    for (int j = 1; j <= half; ++j) {
        const double a = std::abs(psi.mode(-j));
        all2 += a * a;
        if (j > o.J) {
            tail = std::max(tail, a);
            tail2 += a * a;
        }
    }
    o.ratio = std::abs(psi.mode(-o.J)) / std::max(tail, o.eta);
    o.fit_residual = all2 > 0.0 ? std::sqrt(tail2 / all2) : 0.0;
    return o;
}

RationalityVerdict origin_verdict(const CircleFunction& psi, const OriginScan& o, int n_max) {
    RationalityVerdict v;
    v.n_max = n_max;
    v.numeric_rank = o.J;
    v.gap = o.ratio;
    v.method = "origin";
    if (o.J > n_max) {
        v.kind = RationalityKind::not_rational;
        return v;
    }
    Pole p{cplx{0.0, 0.0}, o.J, cvec(static_cast<std::size_t>(o.J))};
    for (int k = 0; k < o.J; ++k) p.c[static_cast<std::size_t>(k)] = psi.coeff(-(o.J - k));
    v.kind = RationalityKind::rational;
    v.part = RationalPart({p});
    v.fit_residual = o.fit_residual;
    return v;
}

} // namespace

RationalityVerdict detect_rational(const CircleFunction& psi, int n_max, const DetectOptions& opts) {
    if (n_max < 1 || n_max > 16) throw DomainError("N_max must lie in 1..16");
    const std::size_t M = psi.size();
    const int half = static_cast<int>(M) / 2;

    double nonneg = 0.0, total = 0.0;
    for (int n = -half; n < half; ++n) {
        const double a = std::abs(psi.mode(n));
        total += a;
        if (n >= 0) nonneg += a;
    }
    if (nonneg > opts.minus_tol * std::max(total, opts.noise_reference))
        throw DomainError("detect_rational: input has nonnegative Fourier modes (not in H-)");
    require_resolved(psi, "detect_rational", 1e-13 * opts.noise_reference);

    RationalityVerdict v;
    v.n_max = n_max;
    const double dmax = psi.max_mode();
    if (dmax == 0.0) {
        v.kind = RationalityKind::rational;
        v.method = "zero";
        v.gap = std::numeric_limits<double>::infinity();
        return v;
    }

    // Exact finite support (a sheer coefficient cliff) is recognised before the
    // Hankel path: a small leading coefficient at the origin makes the Hankel
    // matrix numerically rank deficient.
    const OriginScan origin = origin_scan(psi, dmax, opts);
    if (origin.J > 0 && origin.ratio >= opts.origin_exact_tol) return origin_verdict(psi, origin, n_max);

    // Hankel path.
    const int S = n_max + 4;
    auto c = [&](int j) { return j <= half ? psi.coeff(-j) : cplx{0.0, 0.0}; };
    MatrixXcd H0(S, S), H1(S, S);
    for (int i = 0; i < S; ++i)
        for (int j = 0; j < S; ++j) {
            H0(i, j) = c(i + j + 1);
            H1(i, j) = c(i + j + 2);
        }
    Eigen::JacobiSVD<MatrixXcd> svd(H0, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (Index i = 0; i < sv.size(); ++i) v.singular_values.push_back(sv(i));
    const double s1 = sv(0);

    int rank = -1;
    for (int r = 1; r < S; ++r) {
        const double next = sv(r);
        const double ratio = next / s1;
        const double gap = next > 0.0 ? sv(r - 1) / next : std::numeric_limits<double>::infinity();
        if (ratio < opts.rank_tol && gap >= opts.gap_tol) {
            rank = r;
            v.gap = gap;
            break;
        }
    }

    bool deferred = false;
    if (rank > 0 && rank <= n_max) {
        const Index r = rank;
        const MatrixXcd Ur = svd.matrixU().leftCols(r);
        const MatrixXcd Vr = svd.matrixV().leftCols(r);
        VectorXcd sinv(r);
        for (Index i = 0; i < r; ++i) sinv(i) = 1.0 / sv(i);
        const MatrixXcd A = sinv.asDiagonal() * (Ur.adjoint() * H1 * Vr);
        Eigen::ComplexEigenSolver<MatrixXcd> es(A, false);
        cvec ev;
        for (Index i = 0; i < r; ++i) ev.push_back(es.eigenvalues()(i));
        Fit f = cluster_and_fit(psi, ev, opts);
        deferred = f.residual > opts.hankel_accept;
        for (const auto& p : f.part.poles()) {
            if (deferred) break;
            if (!(std::abs(p.a) < psi.radius() * (1.0 - opts.delta_pole))) {
                std::ostringstream os;
                os << "detect_rational: recovered pole " << p.a << " outside the admissible disc";
                throw PoleError(os.str());
            }
        }
        v.fit_residual = f.residual;
        v.numeric_rank = rank;
        if (!deferred) {
            v.kind = RationalityKind::rational;
            v.part = std::move(f.part);
            v.method = "hankel";
            return v;
        }
    }
    if (rank > n_max) {
        v.kind = RationalityKind::not_rational;
        v.numeric_rank = rank;
        v.method = "hankel";
        return v;
    }

    // Finite-support fallback: all poles at the origin.
    if (origin.J == 0) {
        v.kind = RationalityKind::rational;
        v.method = "zero";
        v.gap = dmax / origin.eta;
        return v;
    }
    if (origin.ratio >= opts.origin_gap_tol) {
        RationalityVerdict o = origin_verdict(psi, origin, n_max);
        o.singular_values = std::move(v.singular_values);
        return o;
    }

    int nr = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) >= opts.rank_tol * s1) nr = static_cast<int>(i) + 1;
    v.kind = RationalityKind::not_rational;
    v.numeric_rank = nr;
    v.gap = nr < S && sv(nr) > 0.0 ? sv(nr - 1) / sv(nr) : std::numeric_limits<double>::infinity();
    v.method = "hankel";
    return v;
}

} // namespace pinchext
