#include <immintrin.h>

#include <cmath>
#include <numbers>

#include "loopfact/kernels.hpp"

namespace loopfact::kernels::avx2 {

namespace {

// Two complex products per register, lanes laid out (re0, im0, re1, im1).
inline __m256d cmul(__m256d x, __m256d y) {
  const __m256d yr = _mm256_movedup_pd(y);
  const __m256d yi = _mm256_permute_pd(y, 0xF);
  const __m256d xs = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(x, yr, _mm256_mul_pd(xs, yi));
}

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d bcast(cplx c) { return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag()); }

inline cplx mul1(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

bool available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void convolve(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  if (na == 0 || nb == 0) return;
  for (std::size_t k = 0; k < na + nb - 1; ++k) out[k] = 0.0;
  const std::size_t nb2 = nb & ~std::size_t{1};
  for (std::size_t i = 0; i < na; ++i) {
    const __m256d ai = bcast(a[i]);
    cplx* o = out + i;
    std::size_t j = 0;
    for (; j < nb2; j += 2) store2(o + j, _mm256_add_pd(load2(o + j), cmul(load2(b + j), ai)));
    for (; j < nb; ++j) o[j] += mul1(b[j], a[i]);
  }
}

void eval_circle(const cplx* c, std::size_t n, int min_deg, std::size_t m, cplx* out) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  const long long mm = static_cast<long long>(m);
  if (n == 0) {
    for (std::size_t k = 0; k < m; ++k) out[k] = 0.0;
    return;
  }
  auto shift = [&](std::size_t k) {
    long long e = (static_cast<long long>(k) * min_deg) % mm;
    if (e < 0) e += mm;
    return std::polar(1.0, step * static_cast<double>(e));
  };
  std::size_t k = 0;
  for (; k + 1 < m; k += 2) {
    const cplx z0 = std::polar(1.0, step * static_cast<double>(k));
    const cplx z1 = std::polar(1.0, step * static_cast<double>(k + 1));
    const __m256d z = _mm256_setr_pd(z0.real(), z0.imag(), z1.real(), z1.imag());
    __m256d acc = bcast(c[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) acc = _mm256_add_pd(cmul(acc, z), bcast(c[j]));
    const cplx s0 = shift(k), s1 = shift(k + 1);
    const __m256d s = _mm256_setr_pd(s0.real(), s0.imag(), s1.real(), s1.imag());
    store2(out + k, cmul(acc, s));
  }
  if (k < m) {
    const cplx z = std::polar(1.0, step * static_cast<double>(k));
    cplx acc = c[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) acc = mul1(acc, z) + c[j];
    out[k] = mul1(acc, shift(k));
  }
}

void pointwise_mul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 1 < n; k += 2) store2(out + k, cmul(load2(a + k), load2(b + k)));
  for (; k < n; ++k) out[k] = mul1(a[k], b[k]);
}

void pointwise_muladd(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 1 < n; k += 2)
    store2(out + k, _mm256_add_pd(load2(out + k), cmul(load2(a + k), load2(b + k))));
  for (; k < n; ++k) out[k] += mul1(a[k], b[k]);
}

}  // namespace loopfact::kernels::avx2
