#include "pinchext/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "fft.hpp"
#include "pinchext/errors.hpp"

namespace pinchext {

namespace {

int mode_index(int n, std::size_t grid) {
    const int m = static_cast<int>(grid);
    return n >= 0 ? n : n + m;
}

int mode_number(std::size_t idx, std::size_t grid) {
    const int m = static_cast<int>(grid);
    const int i = static_cast<int>(idx);
    return i < m / 2 ? i : i - m;
}

void check_grid(std::size_t grid) {
    if (grid < 16) throw DomainError("circle grid must have at least 16 samples");
    if (!is_power_of_two(grid)) throw DomainError("circle grid size must be a power of two");
}

} // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

CircleFunction::CircleFunction(double radius, cvec samples, cvec modes)
    : radius_(radius), samples_(std::move(samples)), modes_(std::move(modes)) {}

CircleFunction CircleFunction::analyze(cvec samples, double radius) {
    check_grid(samples.size());
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("radius must be positive");
    cvec modes = detail::fft_forward(samples);
    return CircleFunction(radius, std::move(samples), std::move(modes));
}

CircleFunction CircleFunction::from_modes(cvec modes, double radius) {
    check_grid(modes.size());
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("radius must be positive");
    cvec samples = detail::fft_inverse(modes);
    return CircleFunction(radius, std::move(samples), std::move(modes));
}

CircleFunction CircleFunction::sample(const std::function<cplx(cplx)>& fn, double radius,
                                      std::size_t grid) {
    check_grid(grid);
    cvec s(grid);
    for (std::size_t m = 0; m < grid; ++m) {
        const double th = 2.0 * pi * static_cast<double>(m) / static_cast<double>(grid);
        s[m] = fn(std::polar(radius, th));
    }
    return analyze(std::move(s), radius);
}

cplx CircleFunction::point(std::size_t m) const {
    const double th = 2.0 * pi * static_cast<double>(m) / static_cast<double>(size());
    return std::polar(radius_, th);
}

cplx CircleFunction::mode(int n) const {
    const int half = static_cast<int>(size()) / 2;
    if (n < -half || n >= half) return {0.0, 0.0};
    return modes_[static_cast<std::size_t>(mode_index(n, size()))];
}

cplx CircleFunction::coeff(int n) const { return mode(n) * std::pow(radius_, -n); }

cvec CircleFunction::laurent_coeffs() const {
    const int half = static_cast<int>(size()) / 2;
    cvec c;
    c.reserve(size());
    for (int n = -half; n < half; ++n) c.push_back(coeff(n));
    return c;
}

cplx CircleFunction::at_angle(double theta) const {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < size(); ++i) {
        const int n = mode_number(i, size());
        s += modes_[i] * std::polar(1.0, n * theta);
    }
    return s;
}

cplx CircleFunction::eval(cplx lambda) const {
    const cplx w = lambda / radius_;
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < size(); ++i) {
        const int n = mode_number(i, size());
        if (modes_[i] != cplx{0.0, 0.0}) s += modes_[i] * std::pow(w, n);
    }
    return s;
}

CircleFunction CircleFunction::resampled(std::size_t grid) const {
    check_grid(grid);
    cvec d(grid, cplx{0.0, 0.0});
    const int half_new = static_cast<int>(grid) / 2;
    for (std::size_t i = 0; i < size(); ++i) {
        const int n = mode_number(i, size());
        if (n < -half_new || n >= half_new) continue;
        d[static_cast<std::size_t>(mode_index(n, grid))] += modes_[i];
    }
    return from_modes(std::move(d), radius_);
}

double CircleFunction::sup_norm() const {
    double s = 0.0;
    for (const auto& v : samples_) s = std::max(s, std::abs(v));
    return s;
}

double CircleFunction::max_mode() const {
    double s = 0.0;
    for (const auto& v : modes_) s = std::max(s, std::abs(v));
    return s;
}

int CircleFunction::bandwidth(double rel_tol, double abs_floor) const {
    const double cut = std::max(rel_tol * max_mode(), abs_floor);
    int b = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (std::abs(modes_[i]) > cut) b = std::max(b, std::abs(mode_number(i, size())));
    }
    return b;
}

double CircleFunction::noise_floor() const {
    const int q = static_cast<int>(size()) / 4;
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (std::abs(mode_number(i, size())) > q) s = std::max(s, std::abs(modes_[i]));
    }
    return s;
}

void CircleFunction::check_compatible(const CircleFunction& o) const {
    if (size() != o.size() || radius_ != o.radius_)
        throw DomainError("circle functions live on different grids");
}

CircleFunction CircleFunction::operator+(const CircleFunction& o) const {
    check_compatible(o);
    cvec s(size()), d(size());
    for (std::size_t i = 0; i < size(); ++i) {
        s[i] = samples_[i] + o.samples_[i];
        d[i] = modes_[i] + o.modes_[i];
    }
    return CircleFunction(radius_, std::move(s), std::move(d));
}

CircleFunction CircleFunction::operator-(const CircleFunction& o) const {
    check_compatible(o);
    cvec s(size()), d(size());
    for (std::size_t i = 0; i < size(); ++i) {
        s[i] = samples_[i] - o.samples_[i];
        d[i] = modes_[i] - o.modes_[i];
    }
    return CircleFunction(radius_, std::move(s), std::move(d));
}

CircleFunction CircleFunction::operator*(const CircleFunction& o) const {
    check_compatible(o);
    cvec s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = samples_[i] * o.samples_[i];
    return analyze(std::move(s), radius_);
}

CircleFunction CircleFunction::operator*(cplx c) const {
    cvec s = samples_, d = modes_;
    for (auto& v : s) v *= c;
    for (auto& v : d) v *= c;
    return CircleFunction(radius_, std::move(s), std::move(d));
}

HardySplit hardy_split(const CircleFunction& g) {
    const std::size_t n = g.size();
    cvec plus(n, cplx{0.0, 0.0}), minus(n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        if (mode_number(i, n) >= 0)
            plus[i] = g.modes()[i];
        else
            minus[i] = g.modes()[i];
    }
    return {CircleFunction::from_modes(std::move(plus), g.radius()),
            CircleFunction::from_modes(std::move(minus), g.radius())};
}

CircleFunction hardy_project_minus(const CircleFunction& g) { return hardy_split(g).minus; }

CircleFunction hardy_project_plus(const CircleFunction& g) { return hardy_split(g).plus; }

CircleFunction hilbert_transform(const CircleFunction& g) {
    const std::size_t n = g.size();
    cvec d = g.modes();
    for (std::size_t i = 0; i < n; ++i)
        if (mode_number(i, n) < 0) d[i] = -d[i];
    return CircleFunction::from_modes(std::move(d), g.radius());
}

double sobolev_norm(const CircleFunction& g) {
    const int half = static_cast<int>(g.size()) / 2;
    double s = 0.0;
    for (int n = -half; n < half; ++n) {
        const double a = std::abs(g.coeff(n));
        s += (1.0 + static_cast<double>(n) * n) * a * a;
    }
    return std::sqrt(s);
}

void require_resolved(const CircleFunction& g, const std::string& what, double abs_floor) {
    const int b = g.bandwidth(1e-13, abs_floor);
    if (static_cast<std::size_t>(4 * b) > g.size()) {
        std::ostringstream os;
        os << what << ": Laurent bandwidth " << b << " not resolved on grid " << g.size()
           << " (need grid >= " << 4 * b << ")";
        throw BandwidthError(os.str());
    }
}

namespace {

// Returns true and sets `turns` when all increments are below pi/2.
bool wind_samples(const cvec& s, double zero_tol, double& turns) {
    double minmod = INFINITY;
    for (const auto& v : s) minmod = std::min(minmod, std::abs(v));
    if (!(minmod > zero_tol))
        throw VanishingError("function vanishes on the circle (min modulus " +
                             std::to_string(minmod) + ")");
    double total = 0.0;
    const std::size_t n = s.size();
    for (std::size_t m = 0; m < n; ++m) {
        const double inc = std::arg(s[(m + 1) % n] / s[m]);
        if (std::abs(inc) >= pi / 2) return false;
        total += inc;
    }
    turns = total / (2.0 * pi);
    return true;
}

int finish(double turns) {
    const double r = std::round(turns);
    if (std::abs(turns - r) > 1e-6)
        throw ConvergenceError("winding sum is not an integer");
    return static_cast<int>(r);
}

} // namespace

int winding_number(const CircleFunction& g, const WindingOptions& opts) {
    CircleFunction cur = g;
    for (;;) {
        double turns = 0.0;
        if (wind_samples(cur.samples(), opts.zero_tolerance, turns)) return finish(turns);
        if (cur.size() * 2 > opts.max_grid)
            throw ConvergenceError("winding refinement exceeded grid cap");
        cur = cur.resampled(cur.size() * 2);
    }
}

int winding_number(const std::function<cplx(cplx)>& fn, double radius, std::size_t grid,
                   const WindingOptions& opts) {
    check_grid(grid);
    std::size_t m = grid;
    for (;;) {
        cvec s(m);
        for (std::size_t i = 0; i < m; ++i)
            s[i] = fn(std::polar(radius, 2.0 * pi * static_cast<double>(i) / static_cast<double>(m)));
        double turns = 0.0;
        if (wind_samples(s, opts.zero_tolerance, turns)) return finish(turns);
        if (m * 2 > opts.max_grid) throw ConvergenceError("winding refinement exceeded grid cap");
        m *= 2;
    }
}

void write_samples_csv(std::ostream& os, const CircleFunction& g) {
    os << std::setprecision(17);
    os << "# radius=" << g.radius() << "\n";
    os << "theta,re,im\n";
    for (std::size_t m = 0; m < g.size(); ++m) {
        const double th = 2.0 * pi * static_cast<double>(m) / static_cast<double>(g.size());
        os << th << "," << g.samples()[m].real() << "," << g.samples()[m].imag() << "\n";
    }
}

CircleFunction read_samples_csv(std::istream& is) {
    std::string line;
    double radius = -1.0;
    cvec samples;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("radius=");
            if (pos != std::string::npos) radius = std::stod(line.substr(pos + 7));
            continue;
        }
        if (!header_seen) {
            if (line != "theta,re,im") throw DomainError("samples CSV: expected header theta,re,im");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string a, b, c;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, c))
            throw DomainError("samples CSV: malformed row '" + line + "'");
        samples.emplace_back(std::stod(b), std::stod(c));
    }
    if (radius <= 0.0) throw DomainError("samples CSV: missing '# radius=' header");
    return analyze(std::move(samples), radius);
}

} // namespace pinchext
