#include "loopfact/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loopfact/errors.hpp"

namespace loopfact {

namespace {

struct Basis {
  int mode;
  int comp;
};

bool in_hplus(int mode, int comp, bool shifted) {
  return mode >= 0 && !(shifted && mode == 0 && comp == 1);
}

std::vector<Basis> basis(int lo, int hi, bool shifted) {
  std::vector<Basis> b;
  for (int k = lo; k <= hi; ++k)
    for (int c = 0; c < 2; ++c)
      if (in_hplus(k, c, shifted)) b.push_back({k, c});
  return b;
}

// Matrix Fourier coefficients over a contiguous degree range.
class CoeffTable {
 public:
  CoeffTable(const LoopMatrix& g, int lo, int hi) : lo_(lo), hi_(hi) {
    for (int k = lo; k <= hi; ++k) table_.push_back(g.coeff(k));
  }
  cplx operator()(int k, int i, int j) const {
    if (k < lo_ || k > hi_) return 0.0;
    return table_[static_cast<std::size_t>(k - lo_)](i, j);
  }

 private:
  int lo_, hi_;
  std::vector<Mat2> table_;
};

void check_trunc(const LoopMatrix& g, int N) {
  const int reach = std::max({0, g.max_deg(), -g.min_deg()});
  if (N < reach)
    fail(ErrorCode::TruncationTooSmall,
         "N = " + std::to_string(N) + " below symbol reach " + std::to_string(reach));
}

ToeplitzSection build(const LoopMatrix& g, int N, bool shifted, int ext) {
  const auto cols = basis(0, N, shifted);
  const auto rows = basis(0, N + ext, shifted);
  const CoeffTable tab(g, g.min_deg(), g.max_deg());
  ToeplitzSection s;
  s.trunc = N;
  s.shifted = shifted;
  s.row_extension = ext;
  s.matrix.resize(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      s.matrix(static_cast<long>(r), static_cast<long>(c)) =
          tab(rows[r].mode - cols[c].mode, rows[r].comp, cols[c].comp);
  return s;
}

}  // namespace

ToeplitzSection section(const LoopMatrix& g, int N, bool shifted) {
  check_trunc(g, N);
  return build(g, N, shifted, 0);
}

ToeplitzSection tall_section(const LoopMatrix& g, int N, bool shifted) {
  check_trunc(g, N);
  return build(g, N, shifted, std::max(0, g.max_deg()));
}

std::vector<double> kernel_svd(const ToeplitzSection& s) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(s.matrix);
  const auto& sv = svd.singularValues();
  std::vector<double> out;
  for (long k = sv.size() - 1; k >= 0 && out.size() < 4; --k) out.push_back(sv(k));
  return out;
}

double smallest_singular_value(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double det_AA(const LoopMatrix& g, const LoopMatrix& g_inv, bool shifted) {
  const LoopMatrix prod = g * g_inv;
  const double scale = std::max(1.0, g.max_abs() * g_inv.max_abs());
  const double defect = coeff_distance(prod, LoopMatrix::identity());
  if (defect > 1e-8 * scale)
    fail(ErrorCode::NotInverse, "|g g_inv - I| coefficient " + std::to_string(defect));

  // A(g) A(g^-1) = I - P+ g P- g^-1 P+. With Y = P- g^-1 P+ and X = P+ g P-,
  // det(I - X Y) = det(I - Y X), and Y X lives on the negative (or deleted)
  // modes reached by g^-1 from H+.
  const int lo = std::min(0, g_inv.min_deg());
  std::vector<Basis> R;
  for (int m = lo; m <= 0; ++m)
    for (int c = 0; c < 2; ++c)
      if (!in_hplus(m, c, shifted)) R.push_back({m, c});
  const auto W = basis(0, -lo + 1, shifted);
  if (R.empty()) return 1.0;

  const CoeffTable ginv(g_inv, g_inv.min_deg(), g_inv.max_deg());
  const CoeffTable gt(g, g.min_deg(), g.max_deg());
  Eigen::MatrixXcd B(static_cast<long>(R.size()), static_cast<long>(W.size()));
  Eigen::MatrixXcd C(static_cast<long>(W.size()), static_cast<long>(R.size()));
  for (std::size_t r = 0; r < R.size(); ++r)
    for (std::size_t w = 0; w < W.size(); ++w) {
      B(static_cast<long>(r), static_cast<long>(w)) = ginv(R[r].mode - W[w].mode, R[r].comp, W[w].comp);
      C(static_cast<long>(w), static_cast<long>(r)) = gt(W[w].mode - R[r].mode, W[w].comp, R[r].comp);
    }
  const Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(B.rows(), B.rows()) - B * C;
  const cplx d = M.partialPivLu().determinant();
  if (std::abs(d.imag()) > 1e-10 * std::max(1.0, std::abs(d)))
    fail(ErrorCode::NonrealDeterminant, "imaginary part " + std::to_string(d.imag()));
  return d.real();
}

double det_section_oracle(const LoopMatrix& g, int N, bool shifted) {
  if (!shifted) return section(g, N, false).matrix.partialPivLu().determinant().real();
  LoopMatrix h = g;
  h.e12 = LaurentSeries::monomial(1) * g.e12;
  h.e21 = LaurentSeries::monomial(-1) * g.e21;
  return section(h, N, false).matrix.partialPivLu().determinant().real();
}

LemmaMatrices lemma_matrices(const std::vector<cplx>& c, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  if (c.size() != static_cast<std::size_t>(2 * n))
    fail(ErrorCode::WrongLength, "expected " + std::to_string(2 * n) + " coefficients, got " +
                                     std::to_string(c.size()));
  auto ck = [&](int k) { return c[static_cast<std::size_t>(k + n - 1)]; };
  LemmaMatrices out;
  out.A_prime.resize(n, n);
  out.A_dprime.resize(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      out.A_prime(j, k) = ck(j - k);
      out.A_dprime(j, k) = ck(j - k + 1);
    }
  return out;
}

std::vector<cplx> triangular_coefficients(const LoopMatrix& tri, int n) {
  constexpr double tol = 1e-12;
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const bool diag_ok = (tri.e11 - LaurentSeries::monomial(-n)).max_abs() <= tol &&
                       (tri.e22 - LaurentSeries::monomial(n)).max_abs() <= tol &&
                       tri.e12.max_abs() <= tol;
  const bool band_ok = tri.e21.is_zero() ||
                       ((tri.e21.clamp(tri.e21.min_deg(), -n).max_abs() <= tol) &&
                        (tri.e21.clamp(n + 1, tri.e21.max_deg()).max_abs() <= tol));
  if (!diag_ok || !band_ok)
    fail(ErrorCode::WrongShape, "expected [[z^-n, 0], [sum_{k=-n+1}^{n} c_k z^k, z^n]]");
  std::vector<cplx> c;
  for (int k = -n + 1; k <= n; ++k) c.push_back(tri.e21[k]);
  return c;
}

std::pair<bool, bool> lemma_invertibility(const LoopMatrix& tri, int n, double threshold) {
  const auto lm = lemma_matrices(triangular_coefficients(tri, n), n);
  return {smallest_singular_value(lm.A_prime) > threshold,
          smallest_singular_value(lm.A_dprime) > threshold};
}

}  // namespace loopfact
