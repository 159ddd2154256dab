#include "loopfact/loop2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loopfact/errors.hpp"

namespace loopfact {

const char* group_name(Group g) {
  switch (g) {
    case Group::SU11: return "SU11";
    case Group::SU2: return "SU2";
    case Group::SL2C: return "SL2C";
  }
  return "SL2C";
}

std::optional<Group> parse_group(const std::string& s) {
  if (s == "SU11") return Group::SU11;
  if (s == "SU2") return Group::SU2;
  if (s == "SL2C") return Group::SL2C;
  return std::nullopt;
}

LoopMatrix LoopMatrix::identity() {
  return diag(LaurentSeries::constant(1.0), LaurentSeries::constant(1.0));
}

LoopMatrix LoopMatrix::constant(const Mat2& m) {
  LoopMatrix r;
  r.e11 = LaurentSeries::constant(m(0, 0));
  r.e12 = LaurentSeries::constant(m(0, 1));
  r.e21 = LaurentSeries::constant(m(1, 0));
  r.e22 = LaurentSeries::constant(m(1, 1));
  return r;
}

LoopMatrix LoopMatrix::diag(const LaurentSeries& a, const LaurentSeries& d) {
  LoopMatrix r;
  r.e11 = a;
  r.e22 = d;
  return r;
}

const LaurentSeries& LoopMatrix::at(int i, int j) const {
  return i == 0 ? (j == 0 ? e11 : e12) : (j == 0 ? e21 : e22);
}

LaurentSeries& LoopMatrix::at(int i, int j) {
  return i == 0 ? (j == 0 ? e11 : e12) : (j == 0 ? e21 : e22);
}

int LoopMatrix::min_deg() const {
  int lo = 0;
  bool any = false;
  for (const auto* e : {&e11, &e12, &e21, &e22}) {
    if (e->is_zero()) continue;
    lo = any ? std::min(lo, e->min_deg()) : e->min_deg();
    any = true;
  }
  return lo;
}

int LoopMatrix::max_deg() const {
  int hi = 0;
  bool any = false;
  for (const auto* e : {&e11, &e12, &e21, &e22}) {
    if (e->is_zero()) continue;
    hi = any ? std::max(hi, e->max_deg()) : e->max_deg();
    any = true;
  }
  return hi;
}

Mat2 LoopMatrix::coeff(int k) const {
  Mat2 m;
  m << e11[k], e12[k], e21[k], e22[k];
  return m;
}

std::vector<Mat2> LoopMatrix::eval(int num_samples) const {
  const auto a = eval_circle(e11, num_samples), b = eval_circle(e12, num_samples),
             c = eval_circle(e21, num_samples), d = eval_circle(e22, num_samples);
  std::vector<Mat2> out(static_cast<std::size_t>(num_samples));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] << a[k], b[k], c[k], d[k];
  return out;
}

LoopMatrix LoopMatrix::clamp(int lo, int hi) const {
  LoopMatrix r;
  r.e11 = e11.clamp(lo, hi);
  r.e12 = e12.clamp(lo, hi);
  r.e21 = e21.clamp(lo, hi);
  r.e22 = e22.clamp(lo, hi);
  r.group_hint = group_hint;
  return r;
}

LaurentSeries LoopMatrix::det() const { return e11 * e22 - e12 * e21; }

double LoopMatrix::max_abs() const {
  return std::max({e11.max_abs(), e12.max_abs(), e21.max_abs(), e22.max_abs()});
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) {
  LoopMatrix r;
  r.e11 = a.e11 * b.e11 + a.e12 * b.e21;
  r.e12 = a.e11 * b.e12 + a.e12 * b.e22;
  r.e21 = a.e21 * b.e11 + a.e22 * b.e21;
  r.e22 = a.e21 * b.e12 + a.e22 * b.e22;
  if (a.group_hint && a.group_hint == b.group_hint) r.group_hint = a.group_hint;
  return r;
}

LoopMatrix operator+(const LoopMatrix& a, const LoopMatrix& b) {
  LoopMatrix r;
  r.e11 = a.e11 + b.e11;
  r.e12 = a.e12 + b.e12;
  r.e21 = a.e21 + b.e21;
  r.e22 = a.e22 + b.e22;
  return r;
}

LoopMatrix operator-(const LoopMatrix& a, const LoopMatrix& b) {
  LoopMatrix r;
  r.e11 = a.e11 - b.e11;
  r.e12 = a.e12 - b.e12;
  r.e21 = a.e21 - b.e21;
  r.e22 = a.e22 - b.e22;
  return r;
}

LoopMatrix operator*(const LoopMatrix& a, cplx s) {
  LoopMatrix r = a;
  r.e11 *= s;
  r.e12 *= s;
  r.e21 *= s;
  r.e22 *= s;
  return r;
}

double coeff_distance(const LoopMatrix& a, const LoopMatrix& b) { return (a - b).max_abs(); }

double sample_distance(const LoopMatrix& a, const LoopMatrix& b, int num_samples) {
  const auto va = a.eval(num_samples), vb = b.eval(num_samples);
  double d = 0.0;
  for (std::size_t k = 0; k < va.size(); ++k) d = std::max(d, (va[k] - vb[k]).cwiseAbs().maxCoeff());
  return d;
}

LoopMatrix adjugate(const LoopMatrix& g) {
  LoopMatrix r;
  r.e11 = g.e22;
  r.e12 = -g.e12;
  r.e21 = -g.e21;
  r.e22 = g.e11;
  r.group_hint = g.group_hint;
  return r;
}

LoopMatrix inverse(const LoopMatrix& g, double tol) {
  const double defect = (g.det() - LaurentSeries::constant(1.0)).max_abs();
  if (defect > tol) fail(ErrorCode::DetNotOne, "max |det - 1| coefficient " + std::to_string(defect));
  return adjugate(g);
}

LoopMatrix group_ops(const LoopMatrix& g, const LoopMatrix& h, GroupOp op) {
  return op == GroupOp::Mul ? g * h : inverse(g);
}

LoopMatrix sigma(const LoopMatrix& g) {
  LoopMatrix r;
  r.e11 = star(g.e22);
  r.e12 = star(g.e21);
  r.e21 = star(g.e12);
  r.e22 = star(g.e11);
  r.group_hint = g.group_hint;
  return r;
}

LoopMatrix theta(const LoopMatrix& g) {
  LoopMatrix r = g;
  r.e12 = -g.e12;
  r.e21 = -g.e21;
  return r;
}

LoopMatrix hermitian_star(const LoopMatrix& g) {
  LoopMatrix r;
  r.e11 = star(g.e11);
  r.e12 = star(g.e21);
  r.e21 = star(g.e12);
  r.e22 = star(g.e22);
  r.group_hint = g.group_hint;
  return r;
}

Membership membership(const LoopMatrix& g, Group group, int num_samples, double tol) {
  const Mat2 J = (Mat2() << 1.0, 0.0, 0.0, -1.0).finished();
  double defect = 0.0;
  for (const auto& m : g.eval(num_samples)) {
    double d = 0.0;
    switch (group) {
      case Group::SU11: d = (m.adjoint() * J * m - J).cwiseAbs().maxCoeff(); break;
      case Group::SU2: d = (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff(); break;
      case Group::SL2C: break;
    }
    // The form identities hold for unimodular multiples too, so det = 1 is checked for every group.
    defect = std::max({defect, d, std::abs(m.determinant() - 1.0)});
  }
  return {defect <= tol, defect};
}

namespace {

constexpr double kPolarMembershipTol = 1e-8;

void require_su11(const LoopMatrix& g, int num_samples) {
  const auto mem = membership(g, Group::SU11, num_samples, kPolarMembershipTol);
  if (!mem.member) fail(ErrorCode::NotSU11, "defect " + std::to_string(mem.defect));
}

}  // namespace

PolarPair polar_su11(const LoopMatrix& g, int num_samples, int trunc) {
  require_su11(g, num_samples);
  if (trunc < 0) fail(ErrorCode::InvalidArgument, "trunc must be >= 0");
  // The fit grid must resolve trunc; the residual is still taken on num_samples points.
  int fit_samples = num_samples;
  while (fit_samples < 2 * trunc + 2) fit_samples *= 2;
  const auto v11 = eval_circle(g.e11, fit_samples);
  const auto v12 = eval_circle(g.e12, fit_samples);
  std::vector<cplx> lam(v11.size()), a(v11.size()), b(v11.size());
  for (std::size_t k = 0; k < v11.size(); ++k) {
    const double r = std::abs(v11[k]);
    if (r < 1e-12) fail(ErrorCode::E11Vanishes, "at sample " + std::to_string(k));
    lam[k] = v11[k] / r;
    a[k] = r;
    b[k] = std::conj(lam[k]) * v12[k];
  }
  PolarPair p;
  p.lambda = fit_series(lam, trunc);
  p.lambda_inv = star(p.lambda);
  const auto as = fit_series(a, trunc), bs = fit_series(b, trunc);
  p.core.e11 = as;
  p.core.e12 = bs;
  p.core.e21 = star(bs);
  p.core.e22 = as;
  p.core.group_hint = Group::SU11;
  const LoopMatrix rebuilt = LoopMatrix::diag(p.lambda, p.lambda_inv) * p.core;
  p.residual = sample_distance(rebuilt, g, num_samples);
  return p;
}

int winding_component(const LoopMatrix& g, int num_samples) {
  require_su11(g, num_samples);
  const auto v11 = eval_circle(g.e11, num_samples);
  for (std::size_t k = 0; k < v11.size(); ++k)
    if (std::abs(v11[k]) < 1e-12) fail(ErrorCode::E11Vanishes, "at sample " + std::to_string(k));
  return winding_number(v11);
}

IwasawaTriple iwasawa_su11(const Mat2& m) {
  const double det_defect = std::abs(m.determinant() - 1.0);
  if (det_defect > 1e-10) fail(ErrorCode::DetNotOne, "|det - 1| = " + std::to_string(det_defect));
  const double q = std::norm(m(1, 1)) - std::norm(m(1, 0));
  if (!(q > 0.0))
    fail(ErrorCode::NotInBigCell, "|M21| >= |M22| (" + std::to_string(std::abs(m(1, 0))) + " >= " +
                                      std::to_string(std::abs(m(1, 1))) + ")");
  IwasawaTriple t;
  t.a_pos = 1.0 / std::sqrt(q);
  const cplx gam = t.a_pos * m(1, 0), del = t.a_pos * m(1, 1);
  t.g0 << std::conj(del), std::conj(gam), gam, del;
  Mat2 g0inv;
  g0inv << del, -std::conj(gam), -gam, std::conj(del);
  const Mat2 dinv = (Mat2() << 1.0 / t.a_pos, 0.0, 0.0, t.a_pos).finished();
  t.n_plus = m * g0inv * dinv;
  // Exact structure: the bottom row of n_plus is (0, 1) by construction.
  t.n_plus(1, 0) = 0.0;
  t.n_plus(1, 1) = 1.0;
  return t;
}

}  // namespace loopfact
