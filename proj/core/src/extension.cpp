#include "pinchext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "pinchext/errors.hpp"

namespace pinchext {

LaurentPoly2::LaurentPoly2(std::map<std::pair<int, int>, cplx> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& [key, v] : coeffs_)
        if (key.first < 0) throw DomainError("Laurent polynomial: z-degree must be nonnegative");
}

cplx LaurentPoly2::operator()(cplx lambda, cplx z) const {
    cplx s{0.0, 0.0};
    for (const auto& [key, v] : coeffs_) s += v * std::pow(z, key.first) * std::pow(lambda, key.second);
    return s;
}

int LaurentPoly2::z_degree() const {
    int d = 0;
    for (const auto& [key, v] : coeffs_) d = std::max(d, key.first);
    return d;
}

bool RingFunction::in_domain(cplx lambda, cplx z) const {
    const double r = std::abs(lambda);
    return r > 1.0 - epsilon && r < 1.0 + epsilon && std::abs(z) < z_radius;
}

cplx RingFunction::operator()(cplx lambda, cplx z) const {
    if (!in_domain(lambda, z)) {
        std::ostringstream os;
        os << "ring function '" << name << "' evaluated outside its domain at (" << lambda << ", " << z
           << ")";
        throw DomainError(os.str());
    }
    return evaluator(lambda, z);
}

RingFunction RingFunction::from_laurent(LaurentPoly2 p, double epsilon, std::string name) {
    RingFunction f;
    auto shared = std::make_shared<LaurentPoly2>(p);
    f.evaluator = [shared](cplx l, cplx z) { return (*shared)(l, z); };
    f.epsilon = epsilon;
    f.z_radius = std::numeric_limits<double>::infinity();
    f.exact = std::move(p);
    f.name = std::move(name);
    return f;
}

RingFunction subtract_plus_part(const RingFunction& f, std::size_t grid) {
    RingFunction g = f;
    const auto base = f.evaluator;
    g.evaluator = [base, grid](cplx l, cplx z) {
        const CircleFunction s =
            CircleFunction::sample([&](cplx w) { return base(w, z); }, 1.0, grid);
        return hardy_project_minus(s).eval(l);
    };
    g.exact.reset();
    g.name = f.name + "-minus";
    return g;
}

std::string to_string(ExtensionKind k) {
    switch (k) {
    case ExtensionKind::holomorphic:
        return "holomorphic";
    case ExtensionKind::meromorphic:
        return "meromorphic";
    case ExtensionKind::not_extendable:
        return "not-extendable";
    }
    return "unknown";
}

CircleFunction restrict_along_curve(const RingFunction& f, const DiscFunction& phi, std::size_t grid) {
    return CircleFunction::sample([&](cplx l) { return f(l, phi(l)); }, 1.0, grid);
}

ExtensionVerdict extension_test(const RingFunction& f, const DiscFunction& phi, int n_max,
                                const ExtensionOptions& opts) {
    const CircleFunction F = restrict_along_curve(f, phi, opts.grid);
    require_resolved(F, "extension_test");
    const CircleFunction minus = hardy_project_minus(F);

    ExtensionVerdict v;
    v.n_max = n_max;
    v.holo_tolerance = opts.holo_tolerance;
    v.residual = minus.sup_norm();
    if (v.residual < opts.holo_tolerance) {
        v.kind = ExtensionKind::holomorphic;
        return v;
    }
    DetectOptions d = opts.detect;
    if (d.delta_pole <= 0.0) d.delta_pole = f.epsilon / 2.0;
    d.noise_reference = std::max(d.noise_reference, F.max_mode());
    v.detection = detect_rational(minus, n_max, d);
    if (v.detection.rational()) {
        v.kind = ExtensionKind::meromorphic;
        v.part = v.detection.part;
    } else {
        v.kind = ExtensionKind::not_extendable;
    }
    return v;
}

} // namespace pinchext
