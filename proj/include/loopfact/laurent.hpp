#pragma once

#include <complex>
#include <vector>

namespace loopfact {

using cplx = std::complex<double>;

/// Finitely supported Laurent series f(z) = sum_n f_n z^n.
///
/// Stored normalized: coefficients below 1e-14 times the largest magnitude
/// are dropped and the ends are trimmed, so the first and last stored
/// coefficients are nonzero. The zero series is empty with min_deg 0.
class LaurentSeries {
 public:
  static constexpr double kDropRelative = 1e-14;

  LaurentSeries() = default;
  LaurentSeries(int min_deg, std::vector<cplx> coeffs);

  static LaurentSeries constant(cplx c);
  static LaurentSeries monomial(int k, cplx c = 1.0);

  int min_deg() const { return min_deg_; }
  /// Highest stored degree; min_deg() - 1 for the zero series.
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k (zero outside the support).
  cplx operator[](int k) const;

  /// Degrees outside [lo, hi] removed.
  LaurentSeries clamp(int lo, int hi) const;
  /// Largest coefficient magnitude.
  double max_abs() const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(cplx s);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, cplx s) { return a *= s; }
  friend LaurentSeries operator*(cplx s, LaurentSeries a) { return a *= s; }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  int min_deg_ = 0;
  std::vector<cplx> coeffs_;
};

enum class ArithOp { Add, Sub, Mul };
LaurentSeries arith(const LaurentSeries& f, const LaurentSeries& g, ArithOp op);

/// Coefficient of z^-n in the result is conj of the coefficient of z^n.
LaurentSeries star(const LaurentSeries& f);

enum class HardyPart { Plus, Minus, StrictMinus };
/// Plus keeps degrees >= 0, StrictMinus < 0, Minus <= 0.
LaurentSeries hardy_project(const LaurentSeries& f, HardyPart part);

/// Values at theta_k = 2 pi k / num_samples.
std::vector<cplx> eval_circle(const LaurentSeries& f, int num_samples);

/// Trigonometric fit of equispaced samples, keeping degrees in [-trunc, trunc].
LaurentSeries fit_series(const std::vector<cplx>& samples, int trunc);

/// Series of exp(chi), with every intermediate product kept on a window
/// wider than the output and the result clamped to [-max_deg, max_deg].
LaurentSeries exp_trunc(const LaurentSeries& chi, int max_deg);

/// Winding number of equispaced samples, from summed principal argument increments.
int winding_number(const std::vector<cplx>& samples);

/// Logarithm along the samples, continuous from the principal value at theta = 0.
std::vector<cplx> continuous_log(const std::vector<cplx>& samples);

enum class ScalarKind { Positive, Unimodular };

struct TriangularScalarFactors {
  LaurentSeries psi_minus;  // degrees < 0
  cplx psi_zero = 0.0;
  LaurentSeries psi_plus;   // degrees > 0
  /// sup_k |exp(psi)(theta_k) - f(theta_k)| / |f(theta_k)| on the working grid.
  double residual = 0.0;
};

constexpr int kDefaultTrunc = 32;

/// f = exp(psi_minus) exp(psi_zero) exp(psi_plus) for a nonvanishing,
/// winding-zero f on the circle.
TriangularScalarFactors scalar_birkhoff(const LaurentSeries& f, ScalarKind kind,
                                        int trunc = kDefaultTrunc);

/// Same split for a function given by equispaced samples; the sample count
/// must exceed 2 * trunc.
TriangularScalarFactors scalar_birkhoff_samples(const std::vector<cplx>& samples,
                                                ScalarKind kind, int trunc = kDefaultTrunc);

}  // namespace loopfact
