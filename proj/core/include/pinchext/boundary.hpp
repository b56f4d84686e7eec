#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "pinchext/types.hpp"

namespace pinchext {

// Uniform samples of a function on |lambda| = r together with its discrete
// Laurent data. Immutable after construction.
//
// Internally the angular modes d_n (coefficients of e^{i n theta}) are kept;
// the Laurent coefficient on the circle is c_n = d_n / r^n.
class CircleFunction {
public:
    CircleFunction() = default;

    // Samples at lambda_m = r e^{2 pi i m / M}; M must be a power of two >= 16.
    static CircleFunction analyze(cvec samples, double radius);
    // Angular modes in FFT order (index m holds n = m for m < M/2, n = m - M otherwise).
    static CircleFunction from_modes(cvec modes, double radius);
    static CircleFunction sample(const std::function<cplx(cplx)>& fn, double radius,
                                 std::size_t grid);

    double radius() const { return radius_; }
    std::size_t size() const { return samples_.size(); }
    const cvec& samples() const { return samples_; }
    const cvec& modes() const { return modes_; }

    cplx point(std::size_t m) const;
    // Angular mode d_n for n in [-M/2, M/2).
    cplx mode(int n) const;
    // Laurent coefficient c_n on this circle.
    cplx coeff(int n) const;
    // c_n for n = -M/2 .. M/2-1 in that order.
    cvec laurent_coeffs() const;

    // Trigonometric interpolant evaluated at angle theta.
    cplx at_angle(double theta) const;
    // Laurent sum evaluated at an arbitrary lambda (meaningful near the circle).
    cplx eval(cplx lambda) const;

    // Spectral resampling (zero padding or truncation) to a new power-of-two grid.
    CircleFunction resampled(std::size_t grid) const;

    double sup_norm() const;
    double max_mode() const;
    // Largest |n| with |d_n| above max(rel_tol * max|d|, abs_floor).
    int bandwidth(double rel_tol = 1e-13, double abs_floor = 0.0) const;
    // Largest mode modulus over the upper quarter band M/4 < |n| <= M/2.
    double noise_floor() const;

    CircleFunction operator+(const CircleFunction& o) const;
    CircleFunction operator-(const CircleFunction& o) const;
    CircleFunction operator*(const CircleFunction& o) const;
    CircleFunction operator*(cplx s) const;

private:
    CircleFunction(double radius, cvec samples, cvec modes);
    void check_compatible(const CircleFunction& o) const;

    double radius_ = 1.0;
    cvec samples_;
    cvec modes_;
};

inline CircleFunction analyze(cvec samples, double radius) {
    return CircleFunction::analyze(std::move(samples), radius);
}

struct HardySplit {
    CircleFunction plus;  // modes n >= 0
    CircleFunction minus; // modes n < 0
};

HardySplit hardy_split(const CircleFunction& g);
CircleFunction hardy_project_minus(const CircleFunction& g);
CircleFunction hardy_project_plus(const CircleFunction& g);
// Fourier multiplier +1 on n >= 0, -1 on n < 0.
CircleFunction hilbert_transform(const CircleFunction& g);
// sqrt(sum (1 + n^2) |c_n|^2) with c_n the Laurent coefficients.
double sobolev_norm(const CircleFunction& g);

// Raises BandwidthError unless 4 * bandwidth(g) <= M. Modes below abs_floor are
// treated as roundoff (used when g was derived from a larger function).
void require_resolved(const CircleFunction& g, const std::string& what, double abs_floor = 0.0);

struct WindingOptions {
    double zero_tolerance = 1e-9;
    std::size_t max_grid = std::size_t{1} << 16;
};

// Winding number of the sampled loop; refines spectrally when increments are large.
int winding_number(const CircleFunction& g, const WindingOptions& opts = {});
// Winding number of a callable on |lambda| = radius, refined by resampling.
int winding_number(const std::function<cplx(cplx)>& fn, double radius,
                   std::size_t grid = 256, const WindingOptions& opts = {});

// CSV with header comment "# radius=<r>" and columns theta,re,im.
void write_samples_csv(std::ostream& os, const CircleFunction& g);
CircleFunction read_samples_csv(std::istream& is);

bool is_power_of_two(std::size_t n);

} // namespace pinchext
