#pragma once

#include <complex>
#include <cstddef>

namespace loopfact::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

// Full linear convolution: out[k] = sum_i a[i] * b[k - i], length na + nb - 1.
// out must not alias a or b.
void convolve(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);

// out[k] = sum_j c[j] z_k^(min_deg + j) with z_k = exp(2 pi i k / m).
void eval_circle(const cplx* c, std::size_t n, int min_deg, std::size_t m, cplx* out);

// out[k] = a[k] * b[k]
void pointwise_mul(const cplx* a, const cplx* b, cplx* out, std::size_t n);

// out[k] += a[k] * b[k]
void pointwise_muladd(const cplx* a, const cplx* b, cplx* out, std::size_t n);

Isa active_isa();
const char* isa_name(Isa isa);

namespace scalar {
void convolve(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);
void eval_circle(const cplx* c, std::size_t n, int min_deg, std::size_t m, cplx* out);
void pointwise_mul(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void pointwise_muladd(const cplx* a, const cplx* b, cplx* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool available();
void convolve(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);
void eval_circle(const cplx* c, std::size_t n, int min_deg, std::size_t m, cplx* out);
void pointwise_mul(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void pointwise_muladd(const cplx* a, const cplx* b, cplx* out, std::size_t n);
}  // namespace avx2

}  // namespace loopfact::kernels
