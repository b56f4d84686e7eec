#pragma once

#include <string>
#include <vector>

#include "pinchext/boundary.hpp"
#include "pinchext/types.hpp"

namespace pinchext {

// Principal part sum_k c[k] (lambda - a)^{k - m}, k = 0..m-1.
struct Pole {
    cplx a;
    int m = 1;
    cvec c;
};

class RationalPart {
public:
    RationalPart() = default;
    explicit RationalPart(std::vector<Pole> poles);

    const std::vector<Pole>& poles() const { return poles_; }
    bool empty() const { return poles_.empty(); }
    int degree() const;

    cplx operator()(cplx lambda, double exclusion = 1e-6) const;
    RationalPart scaled(cplx s) const;
    CircleFunction on_circle(double radius, std::size_t grid) const;

private:
    std::vector<Pole> poles_;
};

cplx evaluate_rational(const RationalPart& rp, cplx lambda, double exclusion = 1e-6);

class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(cvec zeros);

    const cvec& zeros() const { return zeros_; }
    cplx operator()(cplx lambda) const;

private:
    cvec zeros_;
};

BlaschkeProduct blaschke_from_zeros(cvec zeros);

struct DetectOptions {
    double rank_tol = 1e-8;         // sigma_{r+1} / sigma_1 below this
    double gap_tol = 1e6;           // sigma_r / sigma_{r+1} at least this
    double origin_exact_tol = 1e8;  // cliff treated as exact finite support (checked first)
    double origin_gap_tol = 300.0;  // coefficient cliff for poles only at 0 (fallback)
    double origin_noise_factor = 4.0;
    double cluster_radius = 1e-4;
    double merge_limit = 0.1;       // never merge eigenvalues farther apart than this
    double fit_tol = 1e-7;          // relative sample residual accepted outright
    double fit_slack = 10.0;        // coarser partition kept if residual within this factor
    double delta_pole = 0.0;        // poles must satisfy |a| < 1 - delta_pole (in lambda)
    double minus_tol = 1e-10;       // admissible relative nonnegative-mode mass
    double hankel_accept = 1e-7;    // relative fit residual above which the Hankel path defers
    double noise_reference = 0.0;   // mode scale of the function psi was derived from
};

enum class RationalityKind { rational, not_rational };

struct RationalityVerdict {
    RationalityKind kind = RationalityKind::not_rational;
    RationalPart part;
    int n_max = 0;
    int numeric_rank = 0;
    double gap = 0.0;
    double fit_residual = 0.0;
    std::string method; // "zero", "origin" or "hankel"
    std::vector<double> singular_values;

    bool rational() const { return kind == RationalityKind::rational; }
};

RationalityVerdict detect_rational(const CircleFunction& psi, int n_max,
                                   const DetectOptions& opts = {});

} // namespace pinchext
