#include "loopfact/fourier.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <utility>

namespace loopfact {

namespace {

// The FFTW planner is not reentrant; plans are created once per (size, sign)
// under a lock and then executed through the new-array interface.
struct PlanCache {
  std::mutex mu;
  std::map<std::pair<int, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = plans.find({n, sign});
    if (it != plans.end()) return it->second;
    auto* in = fftw_alloc_complex(static_cast<std::size_t>(n));
    auto* out = fftw_alloc_complex(static_cast<std::size_t>(n));
    fftw_plan p = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    plans.emplace(std::make_pair(n, sign), p);
    return p;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

std::vector<cplx> run(const std::vector<cplx>& x, int sign, double scale) {
  const int n = static_cast<int>(x.size());
  std::vector<cplx> y(x.size());
  if (n == 0) return y;
  fftw_plan p = cache().get(n, sign);
  auto* in = fftw_alloc_complex(x.size());
  auto* out = fftw_alloc_complex(x.size());
  std::memcpy(in, x.data(), x.size() * sizeof(cplx));
  fftw_execute_dft(p, in, out);
  std::memcpy(static_cast<void*>(y.data()), out, x.size() * sizeof(cplx));
  fftw_free(in);
  fftw_free(out);
  if (scale != 1.0)
    for (auto& v : y) v *= scale;
  return y;
}

}  // namespace

std::vector<cplx> fourier_coefficients(const std::vector<cplx>& samples) {
  return run(samples, FFTW_FORWARD, samples.empty() ? 1.0 : 1.0 / static_cast<double>(samples.size()));
}

std::vector<cplx> fourier_synthesis(const std::vector<cplx>& coeffs) {
  return run(coeffs, FFTW_BACKWARD, 1.0);
}

}  // namespace loopfact
