#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace pinchext::detail {

namespace {

// Planning is not thread-safe in FFTW; execution of an existing plan on new
// arrays is. Plans are created once per (size, direction) under a lock.
fftw_plan plan_for(int n, int sign) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, fftw_plan> plans;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    cvec a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans.emplace(key, p);
    return p;
}

cvec run(const cvec& x, int sign) {
    cvec in = x;
    cvec out(x.size());
    fftw_plan p = plan_for(static_cast<int>(x.size()), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace

cvec fft_forward(const cvec& x) {
    cvec d = run(x, FFTW_FORWARD);
    const double s = 1.0 / static_cast<double>(x.size());
    for (auto& v : d) v *= s;
    return d;
}

cvec fft_inverse(const cvec& d) { return run(d, FFTW_BACKWARD); }

} // namespace pinchext::detail
