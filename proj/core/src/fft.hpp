#pragma once

#include "pinchext/types.hpp"

namespace pinchext::detail {

// d_n = (1/M) sum_m x_m e^{-2 pi i n m / M}, FFT order.
cvec fft_forward(const cvec& x);
// x_m = sum_n d_n e^{2 pi i n m / M}, FFT order.
cvec fft_inverse(const cvec& d);

} // namespace pinchext::detail
