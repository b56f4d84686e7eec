#include "pinchext/disc.hpp"

#include <algorithm>
#include <cmath>

#include "pinchext/errors.hpp"

namespace pinchext {

DiscFunction::DiscFunction(cvec taylor) : coeffs_(std::move(taylor)) {
    if (coeffs_.empty()) coeffs_.push_back({0.0, 0.0});
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("Taylor coefficients must be finite");
}

DiscFunction DiscFunction::constant(cplx c) { return DiscFunction(cvec{c}); }

DiscFunction DiscFunction::monomial(cplx c, int k) {
    if (k < 0) throw DomainError("monomial degree must be nonnegative");
    cvec a(static_cast<std::size_t>(k) + 1, cplx{0.0, 0.0});
    a.back() = c;
    return DiscFunction(std::move(a));
}

cplx DiscFunction::operator()(cplx lambda) const {
    cplx s{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * lambda + *it;
    return s;
}

CircleFunction DiscFunction::on_circle(double radius, std::size_t grid) const {
    return CircleFunction::sample([this](cplx l) { return (*this)(l); }, radius, grid);
}

double DiscFunction::sup_norm(double radius, std::size_t grid) const {
    double s = 0.0;
    for (std::size_t m = 0; m < grid; ++m) {
        const double th = 2.0 * pi * static_cast<double>(m) / static_cast<double>(grid);
        s = std::max(s, std::abs((*this)(std::polar(radius, th))));
    }
    return s;
}

double DiscFunction::sup_bound(double radius) const {
    double s = 0.0, p = 1.0;
    for (const auto& c : coeffs_) {
        s += std::abs(c) * p;
        p *= radius;
    }
    return s;
}

bool DiscFunction::maps_into_unit_disc(double radius) const {
    const std::size_t grid = std::max<std::size_t>(1024, 16 * coeffs_.size());
    return sup_norm(radius, grid) < 1.0;
}

bool DiscFunction::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](cplx c) { return c == cplx{0.0, 0.0}; });
}

DiscFunction DiscFunction::operator+(const DiscFunction& o) const {
    cvec a(std::max(coeffs_.size(), o.coeffs_.size()), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) a[i] += o.coeffs_[i];
    return DiscFunction(std::move(a));
}

DiscFunction DiscFunction::operator-(const DiscFunction& o) const { return *this + o * cplx{-1.0, 0.0}; }

DiscFunction DiscFunction::operator*(const DiscFunction& o) const {
    cvec a(coeffs_.size() + o.coeffs_.size() - 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) a[i + j] += coeffs_[i] * o.coeffs_[j];
    return DiscFunction(std::move(a));
}

DiscFunction DiscFunction::operator*(cplx s) const {
    cvec a = coeffs_;
    for (auto& v : a) v *= s;
    return DiscFunction(std::move(a));
}

DiscFunction DiscFunction::pow(int n) const {
    if (n < 0) throw DomainError("negative power of a disc function");
    DiscFunction r = constant(1.0);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

cvec DiscFunction::roots() const { return polynomial_roots(coeffs_); }

cvec DiscFunction::zeros_in_disc(double radius) const {
    cvec out;
    for (const auto& r : roots())
        if (std::abs(r) < radius) out.push_back(r);
    return out;
}

} // namespace pinchext
