#pragma once

#include <iosfwd>
#include <vector>

#include "pinchext/extension.hpp"
#include "pinchext/types.hpp"

namespace pinchext::io {

// Probe points, columns re,im (header optional).
cvec read_probes_csv(std::istream& is);
void write_probes_csv(std::ostream& os, const cvec& pts);

// Ray profile, columns n,r,abs_An.
void write_ray_profile_csv(std::ostream& os, const std::vector<RayProfileRow>& rows);

// Bivariate Laurent coefficients: one "n l re im" per line, '#' starts a comment.
LaurentPoly2 read_laurent_coefficients(std::istream& is);

// Strict real / complex literal parsing: "1.5", "-2i", "0.5+0.25i", "1e-3-2e-2i".
double parse_real(const std::string& s);
cplx parse_complex(const std::string& s);

} // namespace pinchext::io
