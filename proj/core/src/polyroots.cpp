#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pinchext/disc.hpp"

namespace pinchext {

cvec polynomial_roots(const cvec& a, double trim_tol) {
    double amax = 0.0;
    for (const auto& v : a) amax = std::max(amax, std::abs(v));
    if (amax == 0.0) return {};

    std::size_t lo = 0;
    while (lo < a.size() && a[lo] == cplx{0.0, 0.0}) ++lo;
    std::size_t hi = a.size() - 1;
    while (hi > lo && std::abs(a[hi]) <= trim_tol * amax) --hi;

    cvec roots(lo, cplx{0.0, 0.0});
    const std::size_t deg = hi - lo;
    if (deg == 0) return roots;

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                   static_cast<Eigen::Index>(deg));
    const cplx lead = a[hi];
    for (std::size_t j = 0; j < deg; ++j)
        comp(0, static_cast<Eigen::Index>(j)) = -a[hi - 1 - j] / lead;
    for (std::size_t i = 1; i < deg; ++i)
        comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    const auto& ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) roots.push_back(ev(i));
    return roots;
}

std::vector<RootCluster> cluster_points(const cvec& pts, double radius) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);

    std::vector<RootCluster> out;
    std::vector<std::size_t> rep;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        auto it = std::find(rep.begin(), rep.end(), r);
        if (it == rep.end()) {
            rep.push_back(r);
            out.push_back({pts[i], 1});
        } else {
            auto& c = out[static_cast<std::size_t>(it - rep.begin())];
            c.center += pts[i];
            c.multiplicity += 1;
        }
    }
    for (auto& c : out) c.center /= static_cast<double>(c.multiplicity);
    return out;
}

} // namespace pinchext
