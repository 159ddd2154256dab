#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "loopfact/loop2.hpp"

namespace loopfact {

// Basis of H+ truncated at mode N, mode-major: z^0 e1, z^0 e2, z^1 e1, ...
// The shifted variant deletes z^0 e2.
struct ToeplitzSection {
  Eigen::MatrixXcd matrix;
  int trunc = 0;
  bool shifted = false;
  /// Extra output modes kept below the square section (0 for square sections).
  int row_extension = 0;
};

/// Square finite section: rows and columns are the modes 0..N.
ToeplitzSection section(const LoopMatrix& g, int N, bool shifted);

/// Columns are the modes 0..N, rows run to N + max(0, max_deg(g)), so every
/// column is the full image of its basis vector. Its smallest singular value
/// never drops below that of the operator, and kernels of the operator
/// supported in modes <= N show up as exact zeros.
ToeplitzSection tall_section(const LoopMatrix& g, int N, bool shifted);

/// The four smallest singular values, ascending.
std::vector<double> kernel_svd(const ToeplitzSection& s);

/// det(A(g) A(g^-1)) (or the shifted analogue) from the finite-rank Hankel
/// correction, evaluated exactly on the affected subspace.
double det_AA(const LoopMatrix& g, const LoopMatrix& g_inv, bool shifted);

/// Dense finite-section value used as an independent check for det_AA: the
/// determinant of the N-section of g, and for the shifted case the
/// N-section of diag(1, z)^-1 g diag(1, z).
double det_section_oracle(const LoopMatrix& g, int N, bool shifted);

struct LemmaMatrices {
  Eigen::MatrixXcd A_prime;
  Eigen::MatrixXcd A_dprime;
};

/// c holds c_{-n+1}, ..., c_n (2n values).
LemmaMatrices lemma_matrices(const std::vector<cplx>& c, int n);

/// For tri = [[z^-n, 0], [sum c_k z^k, z^n]]: (A' invertible, A'' invertible).
std::pair<bool, bool> lemma_invertibility(const LoopMatrix& tri, int n, double threshold = 1e-10);

/// Coefficients c_{-n+1}, ..., c_n read from the (2,1) entry; WrongShape otherwise.
std::vector<cplx> triangular_coefficients(const LoopMatrix& tri, int n);

double smallest_singular_value(const Eigen::MatrixXcd& m);

}  // namespace loopfact
