#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pinchext/disc.hpp"
#include "pinchext/types.hpp"

namespace pinchext {

struct CurveWinding {
    std::size_t index = 0;
    std::optional<int> winding; // empty when phi_k - phi_0 vanishes on the circle
    std::string failure;
};

struct TestSequenceReport {
    std::vector<CurveWinding> curves;
    int N = 0; // max observed winding
    int N_bound = 0;
    bool is_test = false;
    std::optional<std::size_t> first_failure;
};

TestSequenceReport validate_test_sequence(const std::vector<DiscFunction>& curves, const DiscFunction& phi0,
                                          int N_bound, double zero_tolerance = 1e-9);

struct PairWitness {
    std::size_t s = 0, t = 0;
    std::optional<double> radius;
    std::optional<int> winding;
    std::string failure;
};

struct TestFamilyReport {
    std::vector<PairWitness> pairs;
    int N_bound = 0;
    bool all_witnessed = false;
};

// Radii scanned for a zero-free circle: 32 (then 64) points in (1 - eps/2, 1 + eps/2).
std::vector<double> scan_radii(double epsilon, int count);

TestFamilyReport validate_test_family(const std::vector<DiscFunction>& curves, int N_bound, double epsilon);

struct ProbeVerdict {
    cplx probe;
    bool passes = false;
    std::vector<std::size_t> avoiding; // curve indices whose zeros avoid the probe disc
};

struct TripleViolation {
    std::size_t t1 = 0, t2 = 0, t3 = 0;
    cplx lambda;
    cplx z;
};

struct GeneralPositionReport {
    std::vector<ProbeVerdict> probes;
    std::vector<TripleViolation> triples;
    double probe_radius = 0.05;
};

GeneralPositionReport general_position_check(const std::vector<DiscFunction>& curves, const DiscFunction& phi0,
                                             const cvec& probes, double probe_radius = 0.05,
                                             std::size_t max_triples = 1000);

struct WindingProfile {
    cplx alpha0;
    double radius = 0.0;
    std::vector<cplx> alphas;
    std::vector<int> windings;
    bool constant = false;
};

WindingProfile winding_profile(const std::function<DiscFunction(cplx)>& family, const std::vector<cplx>& alphas,
                               cplx alpha0, double epsilon = 0.25);

// Roots of phi within `tol` of the circle |lambda| = r.
bool vanishes_near_circle(const DiscFunction& phi, double r, double tol = 1e-6);

} // namespace pinchext
