#include "loopfact/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace loopfact::kernels {

namespace {

inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

bool force_scalar() {
  const char* v = std::getenv("LOOPFACT_FORCE_SCALAR");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

struct Table {
  Isa isa;
  void (*convolve)(const cplx*, std::size_t, const cplx*, std::size_t, cplx*);
  void (*eval_circle)(const cplx*, std::size_t, int, std::size_t, cplx*);
  void (*pointwise_mul)(const cplx*, const cplx*, cplx*, std::size_t);
  void (*pointwise_muladd)(const cplx*, const cplx*, cplx*, std::size_t);
};

const Table& table() {
  static const Table t = [] {
    if (!force_scalar() && avx2::available()) {
      return Table{Isa::Avx2, avx2::convolve, avx2::eval_circle, avx2::pointwise_mul,
                   avx2::pointwise_muladd};
    }
    return Table{Isa::Scalar, scalar::convolve, scalar::eval_circle, scalar::pointwise_mul,
                 scalar::pointwise_muladd};
  }();
  return t;
}

}  // namespace

namespace scalar {

void convolve(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  if (na == 0 || nb == 0) return;
  for (std::size_t k = 0; k < na + nb - 1; ++k) out[k] = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    const cplx ai = a[i];
    cplx* o = out + i;
    for (std::size_t j = 0; j < nb; ++j) o[j] += mul(ai, b[j]);
  }
}

void eval_circle(const cplx* c, std::size_t n, int min_deg, std::size_t m, cplx* out) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  const long long mm = static_cast<long long>(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (n == 0) {
      out[k] = 0.0;
      continue;
    }
    const cplx z = std::polar(1.0, step * static_cast<double>(k));
    cplx acc = c[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) acc = mul(acc, z) + c[j];
    long long e = (static_cast<long long>(k) * min_deg) % mm;
    if (e < 0) e += mm;
    out[k] = mul(acc, std::polar(1.0, step * static_cast<double>(e)));
  }
}

void pointwise_mul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = mul(a[k], b[k]);
}

void pointwise_muladd(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] += mul(a[k], b[k]);
}

}  // namespace scalar

void convolve(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  table().convolve(a, na, b, nb, out);
}
void eval_circle(const cplx* c, std::size_t n, int min_deg, std::size_t m, cplx* out) {
  table().eval_circle(c, n, min_deg, m, out);
}
void pointwise_mul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  table().pointwise_mul(a, b, out, n);
}
void pointwise_muladd(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  table().pointwise_muladd(a, b, out, n);
}

Isa active_isa() { return table().isa; }

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace loopfact::kernels
