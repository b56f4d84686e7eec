#pragma once

#include <cstddef>
#include <vector>

#include "pinchext/boundary.hpp"
#include "pinchext/types.hpp"

namespace pinchext {

// Holomorphic function on a disc given by its Taylor polynomial
// phi(lambda) = sum_k a_k lambda^k, k = 0..D.
class DiscFunction {
public:
    DiscFunction() : coeffs_{cplx{0.0, 0.0}} {}
    explicit DiscFunction(cvec taylor);

    static DiscFunction constant(cplx c);
    static DiscFunction monomial(cplx c, int k);

    const cvec& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    cplx operator()(cplx lambda) const;
    CircleFunction on_circle(double radius, std::size_t grid) const;

    // Sampled maximum of |phi| on |lambda| = radius (equals the sup over the closed disc).
    double sup_norm(double radius = 1.0, std::size_t grid = 1024) const;
    // sum |a_k| radius^k, a rigorous upper bound for the sup norm.
    double sup_bound(double radius = 1.0) const;
    // Whether the closed disc of the given radius is mapped into the open unit disc.
    bool maps_into_unit_disc(double radius = 1.0) const;
    bool is_zero() const;

    DiscFunction operator+(const DiscFunction& o) const;
    DiscFunction operator-(const DiscFunction& o) const;
    DiscFunction operator*(const DiscFunction& o) const;
    DiscFunction operator*(cplx s) const;
    DiscFunction pow(int n) const;

    // All roots of the Taylor polynomial (with multiplicity).
    cvec roots() const;
    // Roots with |root| < radius.
    cvec zeros_in_disc(double radius) const;

private:
    cvec coeffs_;
};

// Roots of sum_k a_k x^k via the companion matrix. Exact leading zeros
// (a_0 = ... = a_{m-1} = 0) are returned as exact roots at 0; trailing
// coefficients below trim_tol * max|a_k| are dropped.
cvec polynomial_roots(const cvec& a, double trim_tol = 1e-14);

struct RootCluster {
    cplx center;
    int multiplicity;
};

// Single-linkage clustering of points within `radius`; centers are means.
std::vector<RootCluster> cluster_points(const cvec& pts, double radius);

} // namespace pinchext
