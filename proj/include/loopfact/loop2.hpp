#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "loopfact/laurent.hpp"

namespace loopfact {

using Mat2 = Eigen::Matrix2cd;

enum class Group { SU11, SU2, SL2C };

const char* group_name(Group g);
std::optional<Group> parse_group(const std::string& s);

/// 2x2 matrix of Laurent series.
struct LoopMatrix {
  LaurentSeries e11, e12, e21, e22;
  std::optional<Group> group_hint;

  static LoopMatrix identity();
  static LoopMatrix constant(const Mat2& m);
  static LoopMatrix diag(const LaurentSeries& a, const LaurentSeries& d);

  const LaurentSeries& at(int i, int j) const;
  LaurentSeries& at(int i, int j);

  int min_deg() const;
  int max_deg() const;
  /// Matrix Fourier coefficient of z^k.
  Mat2 coeff(int k) const;
  /// Values at theta_k = 2 pi k / num_samples.
  std::vector<Mat2> eval(int num_samples) const;
  LoopMatrix clamp(int lo, int hi) const;
  LaurentSeries det() const;
  /// Largest coefficient magnitude over all entries.
  double max_abs() const;
};

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
LoopMatrix operator+(const LoopMatrix& a, const LoopMatrix& b);
LoopMatrix operator-(const LoopMatrix& a, const LoopMatrix& b);
LoopMatrix operator*(const LoopMatrix& a, cplx s);

/// Largest coefficient of a - b over entries and degrees.
double coeff_distance(const LoopMatrix& a, const LoopMatrix& b);
/// Largest pointwise entry difference over num_samples points.
double sample_distance(const LoopMatrix& a, const LoopMatrix& b, int num_samples = 256);

enum class GroupOp { Mul, InverseOfFirst };
LoopMatrix group_ops(const LoopMatrix& g, const LoopMatrix& h, GroupOp op);

/// Adjugate inverse; DetNotOne unless det(g) - 1 is below tol coefficient-wise.
LoopMatrix inverse(const LoopMatrix& g, double tol = 1e-10);
LoopMatrix adjugate(const LoopMatrix& g);

/// sigma([[a,b],[c,d]]) = [[d*, c*], [b*, a*]].
LoopMatrix sigma(const LoopMatrix& g);
/// Negates the off-diagonal entries.
LoopMatrix theta(const LoopMatrix& g);
/// Pointwise Hermitian conjugate on the circle: [[a*, c*], [b*, d*]].
LoopMatrix hermitian_star(const LoopMatrix& g);

struct Membership {
  bool member = false;
  double defect = 0.0;
};

constexpr int kDefaultSamples = 256;
constexpr double kMembershipTol = 1e-9;

Membership membership(const LoopMatrix& g, Group group, int num_samples = kDefaultSamples,
                      double tol = kMembershipTol);

struct PolarPair {
  LaurentSeries lambda;      // unimodular on the circle
  LaurentSeries lambda_inv;  // star(lambda)
  LoopMatrix core;           // [[a, b], [star(b), a]], a > 0
  double residual = 0.0;     // sampled reconstruction defect
};

/// Values are fitted on a grid of at least 2 * trunc + 2 points; the residual
/// is measured on num_samples points.
PolarPair polar_su11(const LoopMatrix& g, int num_samples = kDefaultSamples,
                     int trunc = kDefaultTrunc);

/// Index n of the component containing g (winding of the g11 phase).
int winding_component(const LoopMatrix& g, int num_samples = kDefaultSamples);

struct IwasawaTriple {
  Mat2 n_plus;
  double a_pos = 1.0;
  Mat2 g0;
};

/// M = n_plus * diag(a_pos, 1/a_pos) * g0 with n_plus upper unipotent, g0 in SU(1,1).
IwasawaTriple iwasawa_su11(const Mat2& m);

}  // namespace loopfact
