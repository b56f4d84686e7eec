#include "pinchext/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pinchext/errors.hpp"

namespace pinchext::gallery {

namespace {

const double ln3 = std::log(3.0);

double log_sum_exp(const std::vector<double>& v) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : v) mx = std::max(mx, x);
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double x : v) s += std::exp(x - mx);
    return mx + std::log(s);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

cplx example1_curve_point(cplx lambda, int l) {
    const cplx w1 = (2.0 / 3.0) * lambda;
    cplx w{1.0, 0.0};
    for (int j = 0; j < l; ++j) w *= w1;
    return w;
}

double example1_term_log_bound(int n, double eps_d) {
    const double nn = n;
    return -(4.0 * nn * nn * nn + nn) * ln3 + 1.5 * (nn * nn + nn) * std::log(1.0 / eps_d);
}

Example1Value example1_eval_detailed(cplx lambda, cplx z, int n_trunc) {
    if (lambda == cplx{0.0, 0.0}) throw DomainError("example1: lambda must be nonzero");
    if (n_trunc < 1) throw DomainError("example1: truncation depth must be positive");

    const double ll = std::log(std::abs(lambda));
    const double al = std::arg(lambda);

    double eps_d = std::min({std::abs(lambda), 1.0 / std::abs(lambda), 0.33});
    if (z != cplx{0.0, 0.0}) eps_d = std::min(eps_d, 1.0 / (3.0 * std::abs(z)));
    std::vector<double> tail;
    for (int n = n_trunc + 1; n <= n_trunc + 64; ++n) tail.push_back(example1_term_log_bound(n, eps_d));
    const double log_tail = log_sum_exp(tail);
    if (log_tail > std::log(1e-12)) {
        std::ostringstream os;
        os << "example1: truncation at n = " << n_trunc << " leaves an error bound exp(" << log_tail
           << ") above 1e-12 at (" << lambda << ", " << z << ")";
        throw DomainError(os.str());
    }

    Example1Value out;
    out.tail_bound = std::exp(log_tail);
    if (z == cplx{0.0, 0.0}) {
        out.log_abs = -std::numeric_limits<double>::infinity();
        return out;
    }
    const double lz = std::log(std::abs(z));
    const double az = std::arg(z);
    const cplx w1 = (2.0 / 3.0) * lambda;
    cplx w{1.0, 0.0};
    double logprod = 0.0, argprod = 0.0;
    std::vector<double> mags, phases;
    for (int n = 1; n <= n_trunc; ++n) {
        w *= w1;
        const cplx fac = z - w;
        if (fac == cplx{0.0, 0.0}) break;
        logprod += std::log(std::abs(fac));
        argprod += std::arg(fac);
        const double nn = n;
        mags.push_back(-4.0 * nn * nn * nn * ln3 + logprod - nn * nn * ll + nn * lz);
        phases.push_back(argprod - nn * nn * al + nn * az);
    }
    out.terms = static_cast<int>(mags.size());
    if (mags.empty()) {
        out.log_abs = -std::numeric_limits<double>::infinity();
        return out;
    }
    const double mx = *std::max_element(mags.begin(), mags.end());
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < mags.size(); ++i) s += std::polar(std::exp(mags[i] - mx), phases[i]);
    out.log_abs = std::abs(s) > 0.0 ? mx + std::log(std::abs(s)) : -std::numeric_limits<double>::infinity();
    out.value = std::polar(std::exp(out.log_abs), std::arg(s));
    return out;
}

cplx example1_eval(cplx lambda, cplx z, int n_trunc) { return example1_eval_detailed(lambda, z, n_trunc).value; }

cplx example1_on_curve(cplx lambda, int l) {
    if (lambda == cplx{0.0, 0.0}) throw DomainError("example1: lambda must be nonzero");
    const cplx wl = example1_curve_point(lambda, l);
    cplx s{0.0, 0.0};
    for (int n = 1; n <= l - 1; ++n) {
        cplx prod{1.0, 0.0};
        for (int j = 1; j <= n; ++j) prod *= wl - example1_curve_point(lambda, j);
        const double nn = n;
        s += std::pow(3.0, -4.0 * nn * nn * nn) * prod * std::pow(2.0 / 3.0, nn * l) *
             std::pow(lambda, n * (l - n));
    }
    return s;
}

GrowthProbe example1_growth_probe(int n0, double c, const std::vector<int>& m_range, int n_trunc) {
    if (n0 < 1) throw DomainError("growth probe: n0 must be at least 1");
    if (!(c > 0.0)) throw DomainError("growth probe: c must be positive");
    if (c > 1.0) throw DomainError("growth probe: c too large, the probe curve c*lambda^n0 leaves the closed unit disc");
    GrowthProbe out;
    out.n0 = n0;
    out.c = c;
    int n1 = n0 + 1;
    while (!(std::pow(2.0 / 3.0, n1) < c / 2.0)) ++n1;
    out.n1 = n1;
    for (int m : m_range) {
        GrowthRow row;
        row.m = m;
        row.lambda = std::ldexp(1.0, -m);
        const double z = c * std::pow(row.lambda, n0);
        const Example1Value v = example1_eval_detailed(row.lambda, z, n_trunc);
        row.log_abs_f = v.log_abs;
        row.abs_f = std::exp(v.log_abs);
        for (int p = 1; p <= 6; ++p) {
            const double lr = v.log_abs + p * std::log(row.lambda);
            row.log_ratios.push_back(lr);
            row.ratios.push_back(std::exp(lr));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

Example2::Example2(int max_l) : max_l_(max_l) {
    if (max_l < 0 || max_l > 150) throw DomainError("example2: max_l must lie in 0..150");
    for (int l = 0; l <= max_l; ++l) {
        double sup = 0.0;
        for (int m = 0; m < 256; ++m) {
            const cplx z = std::polar(1.0, 2.0 * pi * m / 256.0);
            cplx p{1.0, 0.0};
            for (int j = 0; j <= l; ++j) p *= z - z_k(j);
            sup = std::max(sup, std::abs(p));
        }
        scale_.push_back((1.0 / factorial(l)) / sup);
    }
}

cplx Example2::P(int l, cplx z) const {
    if (l < 0 || l > max_l_) throw DomainError("example2: polynomial index out of range");
    cplx p{1.0, 0.0};
    for (int j = 0; j <= l; ++j) p *= z - z_k(j);
    return scale(l) * p;
}

double Example2::sup_on_circle(int l) const {
    double sup = 0.0;
    for (int m = 0; m < 256; ++m) sup = std::max(sup, std::abs(P(l, std::polar(1.0, 2.0 * pi * m / 256.0))));
    return sup;
}

cplx Example2::eval(cplx lambda, cplx z, int l_trunc) const {
    if (lambda == cplx{0.0, 0.0}) throw DomainError("example2: lambda must be nonzero");
    if (l_trunc < 0 || l_trunc > max_l_) throw DomainError("example2: truncation index out of range");
    const cplx inv = 1.0 / lambda;
    cplx s{0.0, 0.0}, pw = inv;
    for (int l = 0; l <= l_trunc; ++l) {
        s += P(l, z) * pw;
        pw *= inv;
    }
    return s;
}

CircleFunction Example2::restriction(int k, std::size_t grid, double radius) const {
    if (k < 0) throw DomainError("example2: restriction index must be nonnegative");
    const cplx z = z_k(k);
    return CircleFunction::sample([&](cplx l) { return eval(l, z); }, radius, grid);
}

const Example2& example2_default() {
    static const Example2 ex(40);
    return ex;
}

cplx example2_eval(cplx lambda, cplx z, int l_trunc) { return example2_default().eval(lambda, z, l_trunc); }

CircleFunction example2_restriction(int k, std::size_t grid, double radius) {
    return example2_default().restriction(k, grid, radius);
}

cplx remark1_eval(cplx lambda, cplx z) {
    if (lambda == cplx{0.0, 0.0}) throw DomainError("remark1: lambda must be nonzero");
    return std::exp(z / lambda);
}

RingFunction remark1_ring(double epsilon) {
    RingFunction f;
    f.evaluator = [](cplx l, cplx z) { return remark1_eval(l, z); };
    f.epsilon = epsilon;
    f.z_radius = std::numeric_limits<double>::infinity();
    f.name = "remark1";
    return f;
}

RingFunction example1_ring(double epsilon, int n_trunc) {
    RingFunction f;
    f.evaluator = [n_trunc](cplx l, cplx z) { return example1_eval(l, z, n_trunc); };
    f.epsilon = epsilon;
    f.z_radius = std::numeric_limits<double>::infinity();
    f.name = "example1";
    return f;
}

RingFunction example2_ring(double epsilon, int l_trunc) {
    RingFunction f;
    const Example2* ex = &example2_default();
    if (l_trunc > ex->max_l()) throw DomainError("example2: truncation index out of range");
    f.evaluator = [ex, l_trunc](cplx l, cplx z) { return ex->eval(l, z, l_trunc); };
    f.epsilon = epsilon;
    f.z_radius = std::numeric_limits<double>::infinity();
    f.name = "example2";
    return f;
}

RingFunction by_name(const std::string& name, double epsilon) {
    if (name == "remark1") return remark1_ring(epsilon);
    if (name == "example1") return example1_ring(epsilon);
    if (name == "example2") return example2_ring(epsilon);
    throw DomainError("unknown gallery function '" + name + "'");
}

} // namespace pinchext::gallery
