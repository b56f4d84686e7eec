#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pinchext/boundary.hpp"
#include "pinchext/extension.hpp"
#include "pinchext/types.hpp"

namespace pinchext::gallery {

// f(lambda, z) = sum_{n>=1} 3^{-4n^3} prod_{j=1}^n [z - ((2/3) lambda)^j] lambda^{-n^2} z^n.
struct Example1Value {
    cplx value;
    double log_abs = 0.0;   // log |value| (-inf for an exact zero)
    double tail_bound = 0.0; // normal-convergence bound on the omitted terms
    int terms = 0;           // number of nonzero terms summed
};

inline constexpr int example1_default_trunc = 40;

// ((2/3) lambda)^l computed by repeated multiplication (the same arithmetic used inside the series).
cplx example1_curve_point(cplx lambda, int l);
Example1Value example1_eval_detailed(cplx lambda, cplx z, int n_trunc = example1_default_trunc);
cplx example1_eval(cplx lambda, cplx z, int n_trunc = example1_default_trunc);
// The finite sum over n = 1..l-1 for z on the curve z = ((2/3) lambda)^l.
cplx example1_on_curve(cplx lambda, int l);
// Bound of term n on eps_d <= |lambda| <= 1/eps_d, |z| <= 1/(3 eps_d), in log form.
double example1_term_log_bound(int n, double eps_d);

struct GrowthRow {
    int m = 0;
    double lambda = 0.0;
    double abs_f = 0.0;
    double log_abs_f = 0.0;
    std::vector<double> ratios;     // |f| lambda^p, p = 1..6
    std::vector<double> log_ratios;
};

struct GrowthProbe {
    int n0 = 1;
    double c = 0.1;
    int n1 = 0; // smallest n1 > n0 with (2/3)^{n1} < c/2
    std::vector<GrowthRow> rows;
};

GrowthProbe example1_growth_probe(int n0, double c, const std::vector<int>& m_range,
                                  int n_trunc = example1_default_trunc);

// example2: f = sum_{l>=0} P_l(z) lambda^{-(l+1)}; P_l vanishes at z_0..z_l.
class Example2 {
public:
    explicit Example2(int max_l = 40);

    static double z_k(int k) { return 1.0 / (k + 2.0); }
    int max_l() const { return max_l_; }
    // P_l(z) = scale_l * prod_{j=0}^{l} (z - z_j).
    cplx P(int l, cplx z) const;
    double scale(int l) const { return scale_[static_cast<std::size_t>(l)]; }
    // Sampled sup over 256 points of |z| = 1.
    double sup_on_circle(int l) const;

    cplx eval(cplx lambda, cplx z, int l_trunc) const;
    cplx eval(cplx lambda, cplx z) const { return eval(lambda, z, max_l_); }
    CircleFunction restriction(int k, std::size_t grid = 256, double radius = 1.0) const;

private:
    int max_l_;
    std::vector<double> scale_;
};

const Example2& example2_default();
cplx example2_eval(cplx lambda, cplx z, int l_trunc = 40);
CircleFunction example2_restriction(int k, std::size_t grid = 256, double radius = 1.0);

cplx remark1_eval(cplx lambda, cplx z);

// Ring-function wrappers; all three are entire in z.
RingFunction remark1_ring(double epsilon = 0.25);
RingFunction example1_ring(double epsilon = 0.25, int n_trunc = example1_default_trunc);
RingFunction example2_ring(double epsilon = 0.25, int l_trunc = 40);
RingFunction by_name(const std::string& name, double epsilon = 0.25);

} // namespace pinchext::gallery
