#pragma once

#include <complex>
#include <vector>

namespace pinchext {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double pi = 3.14159265358979323846;

} // namespace pinchext
