#pragma once

#include <complex>
#include <vector>

namespace loopfact {

using cplx = std::complex<double>;

// c[j] = (1/M) sum_k x[k] exp(-2 pi i j k / M), j = 0..M-1 (FFTW backed).
std::vector<cplx> fourier_coefficients(const std::vector<cplx>& samples);

// x[k] = sum_j c[j] exp(2 pi i j k / M); inverse of fourier_coefficients.
std::vector<cplx> fourier_synthesis(const std::vector<cplx>& coeffs);

}  // namespace loopfact
