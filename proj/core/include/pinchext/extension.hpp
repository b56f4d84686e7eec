#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinchext/boundary.hpp"
#include "pinchext/disc.hpp"
#include "pinchext/rational.hpp"
#include "pinchext/types.hpp"

namespace pinchext {

// f(lambda, z) = sum a_{n,l} z^n lambda^l with n >= 0.
class LaurentPoly2 {
public:
    LaurentPoly2() = default;
    explicit LaurentPoly2(std::map<std::pair<int, int>, cplx> coeffs);

    // Coefficient keyed by (n, l): z-degree n, lambda-degree l.
    const std::map<std::pair<int, int>, cplx>& coeffs() const { return coeffs_; }
    cplx operator()(cplx lambda, cplx z) const;
    int z_degree() const;

private:
    std::map<std::pair<int, int>, cplx> coeffs_;
};

// Function holomorphic on the ring 1-eps < |lambda| < 1+eps, |z| < z_radius.
struct RingFunction {
    std::function<cplx(cplx, cplx)> evaluator;
    double epsilon = 0.25;
    double z_radius = 1.0;
    std::optional<LaurentPoly2> exact;
    std::string name;

    // Evaluates after checking the ring domain.
    cplx operator()(cplx lambda, cplx z) const;
    bool in_domain(cplx lambda, cplx z) const;

    static RingFunction from_laurent(LaurentPoly2 p, double epsilon, std::string name = "laurent");
};

// f - f_plus, where f_plus is the lambda-Hardy plus part at fixed z (grid samples on |lambda| = 1).
RingFunction subtract_plus_part(const RingFunction& f, std::size_t grid = 256);

enum class ExtensionKind { holomorphic, meromorphic, not_extendable };

struct ExtensionVerdict {
    ExtensionKind kind = ExtensionKind::not_extendable;
    double residual = 0.0;
    double holo_tolerance = 1e-8;
    int n_max = 0;
    RationalPart part;
    RationalityVerdict detection;
};

std::string to_string(ExtensionKind k);

struct ExtensionOptions {
    std::size_t grid = 256;
    double holo_tolerance = 1e-8;
    DetectOptions detect{};
};

CircleFunction restrict_along_curve(const RingFunction& f, const DiscFunction& phi, std::size_t grid = 256);

ExtensionVerdict extension_test(const RingFunction& f, const DiscFunction& phi, int n_max,
                                const ExtensionOptions& opts = {});

struct PinchPoint {
    cplx a;
    int order = 1;
};

struct PoleLine {
    cplx b;
    int multiplicity = 1;
};

struct LadderEntry {
    int n = 0;
    RationalPart principal;
    cvec tail;                   // Taylor coefficients of the holomorphic part
    double boundary_sup = 0.0;   // sup |A_n| on |lambda| = 1
    double corrected_sup = 0.0;  // max_k sup |g_k| (Blaschke-corrected restrictions)
    double corrected_minus = 0.0; // max_k relative sup |P(g_k)|
    std::vector<double> curve_deviation; // sup |f_{n,k} - A_n| for the last three curves
    std::vector<double> curve_bound;     // matching geometric tail bounds
    std::vector<int> curve_pole_count;   // detected pole count of f_{n,k}, last three curves

    cplx operator()(cplx lambda, double exclusion = 1e-6) const;
};

struct CoefficientLadder {
    std::vector<LadderEntry> entries;
    std::vector<PinchPoint> zeros;   // a_j with orders l_j
    std::vector<PoleLine> poles;     // b_i with multiplicities
    double C = 0.0;
    double C_prime = 0.0;
    double epsilon = 0.25;
    int N = 0;  // max winding of the curves
    int M = 0;  // level-0 pole count
    int n_max = 0;
    double rho = 0.75;

    int depth() const { return static_cast<int>(entries.size()) - 1; }
    cplx A(int n, cplx lambda) const;
    // Copy with entry n multiplied by s; C and C' are kept.
    CoefficientLadder with_scaled_entry(int n, cplx s) const;
};

struct LadderOptions {
    std::size_t grid = 256;
    std::size_t z_nodes = 128;
    double rho = 0.75;
    double ladder_tol = 1e-7;
    double zero_cluster = 1e-4;
    double pole_match = 1e-4;
    bool subtract_plus = false;
    std::size_t threads = 1;
    DetectOptions detect{};
};

CoefficientLadder coefficient_ladder(const RingFunction& f, const std::vector<DiscFunction>& curves,
                                     int depth, int n_max, const LadderOptions& opts = {});

struct PinchDescriptor {
    std::vector<PinchPoint> pinches;
    std::vector<PoleLine> pole_lines;
    double c = 1.0;
    bool pinches_in_core = true; // every pinch lies in Delta_{1-eps}

    double domain_radius(cplx lambda) const; // c * prod |lambda - a_j|^{l_j}
    bool contains(cplx lambda, cplx z) const;
};

struct PinchOptions {
    std::size_t grid = 64;
    double exclusion = 1e-2;
    double pole_match = 1e-3; // a curve zero becomes a pinch only if some A_n has a pole this close
    int max_halvings = 60;
};

PinchDescriptor pinch_estimate(const CoefficientLadder& ladder, const PinchOptions& opts = {});

struct ExtensionValue {
    cplx value;
    double truncation_bound = 0.0;
};

ExtensionValue evaluate_extension(const CoefficientLadder& ladder, const PinchDescriptor& desc,
                                  cplx lambda, cplx z, double tolerance = 1e-6);

struct BoundViolation {
    int n = 0;
    cplx lambda;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct BoundOptions {
    std::size_t grid = 64;
    double exclusion = 1e-2;
    double rel_slack = 1e-9;
};

std::vector<BoundViolation> verify_coefficient_bounds(const CoefficientLadder& ladder,
                                                      const BoundOptions& opts = {});

// Values |A_n(r e^{i angle})| for n = 0..depth along a ray.
struct RayProfileRow {
    int n;
    double r;
    double abs_An;
};
std::vector<RayProfileRow> ray_profile(const CoefficientLadder& ladder, double angle,
                                       const std::vector<double>& radii);

} // namespace pinchext
