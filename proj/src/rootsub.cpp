#include "loopfact/rootsub.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "loopfact/errors.hpp"

namespace loopfact {

namespace {

void check_disk(const std::vector<cplx>& ps, const char* what) {
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (!(std::abs(ps[k]) < 1.0)) {
      std::ostringstream os;
      os << what << "[" << k << "] = " << ps[k] << " has modulus " << std::abs(ps[k]);
      fail(ErrorCode::ParameterOnOrOutsideDisk, os.str());
    }
  }
}

void check_chi(const LaurentSeries& chi) {
  const double asym = (chi + star(chi)).max_abs();
  if (asym > 1e-12 * std::max(1.0, chi.max_abs()))
    fail(ErrorCode::InvalidArgument, "chi must satisfy star(chi) = -chi");
}

double reduce_angle(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  t = std::remainder(t, two_pi);
  if (t <= -std::numbers::pi) t += two_pi;
  return t;
}

}  // namespace

LaurentSeries RootSubgroupData::chi_total() const {
  return chi + LaurentSeries::constant(cplx(0.0, chi0_im));
}

RootSubgroupData make_data(std::vector<cplx> etas, std::vector<cplx> zetas, LaurentSeries chi,
                           double chi0_im) {
  check_disk(etas, "eta");
  check_disk(zetas, "zeta");
  check_chi(chi);
  RootSubgroupData d;
  d.etas = std::move(etas);
  d.zetas = std::move(zetas);
  d.chi0_im = chi0_im + chi[0].imag();
  d.chi = chi - LaurentSeries::constant(chi[0]);
  return d;
}

LaurentSeries imaginary_chi(const std::vector<cplx>& positive_coeffs) {
  LaurentSeries chi;
  for (std::size_t j = 0; j < positive_coeffs.size(); ++j) {
    const int k = static_cast<int>(j) + 1;
    chi += LaurentSeries::monomial(k, positive_coeffs[j]);
    chi -= LaurentSeries::monomial(-k, std::conj(positive_coeffs[j]));
  }
  return chi;
}

double a_disk(cplx zeta) {
  const double r2 = std::norm(zeta);
  if (!(r2 < 1.0)) fail(ErrorCode::ParameterOnOrOutsideDisk, "|zeta| >= 1");
  return 1.0 / std::sqrt(1.0 - r2);
}

Mat2 q_factor(cplx zeta) {
  const double a = a_disk(zeta);
  Mat2 q;
  q << a, a * std::conj(zeta), a * zeta, a;
  return q;
}

LoopMatrix synth_g2(const std::vector<cplx>& zetas) {
  check_disk(zetas, "zeta");
  LoopMatrix g = LoopMatrix::identity();
  for (std::size_t j = 0; j < zetas.size(); ++j) {
    const int k = static_cast<int>(j) + 1;
    const double a = a_disk(zetas[j]);
    LoopMatrix F;
    F.e11 = LaurentSeries::constant(a);
    F.e12 = LaurentSeries::monomial(-k, a * zetas[j]);
    F.e21 = LaurentSeries::monomial(k, a * std::conj(zetas[j]));
    F.e22 = LaurentSeries::constant(a);
    g = F * g;
  }
  g.group_hint = Group::SU11;
  return g;
}

LoopMatrix synth_g1(const std::vector<cplx>& etas) {
  check_disk(etas, "eta");
  LoopMatrix g = LoopMatrix::identity();
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const int k = static_cast<int>(i);
    const double a = a_disk(etas[i]);
    LoopMatrix E;
    E.e11 = LaurentSeries::constant(a);
    E.e12 = LaurentSeries::monomial(k, a * std::conj(etas[i]));
    E.e21 = LaurentSeries::monomial(-k, a * etas[i]);
    E.e22 = LaurentSeries::constant(a);
    g = E * g;
  }
  g.group_hint = Group::SU11;
  return g;
}

LoopMatrix synth_full(const RootSubgroupData& data, int trunc) {
  check_disk(data.etas, "eta");
  check_disk(data.zetas, "zeta");
  check_chi(data.chi);
  LoopMatrix g = sigma(inverse(synth_g1(data.etas)));
  if (!data.chi.is_zero() || data.chi0_im != 0.0) {
    const cplx e0 = std::polar(1.0, data.chi0_im);
    g = g * LoopMatrix::diag(exp_trunc(data.chi, trunc) * e0, exp_trunc(-data.chi, trunc) * std::conj(e0));
  }
  g = g * synth_g2(data.zetas);
  g.group_hint = Group::SU11;
  return g;
}

namespace {

void require_identity(const LoopMatrix& g, double tol, const char* what) {
  const double d = coeff_distance(g, LoopMatrix::identity());
  if (d > tol * std::max(1.0, g.max_abs())) {
    std::ostringstream os;
    os << what << ": remainder after peeling differs from identity by " << d;
    fail(ErrorCode::NotInImage, os.str());
  }
}

bool outside(const LaurentSeries& f, int lo, int hi, double tol) {
  if (f.is_zero()) return false;
  return f.clamp(f.min_deg(), lo - 1).max_abs() > tol || f.clamp(hi + 1, f.max_deg()).max_abs() > tol;
}

}  // namespace

std::vector<cplx> analyze_g2(const LoopMatrix& g2, int n, double tol) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "n must be >= 0");
  const double scale = std::max(1.0, g2.max_abs());
  const double ctol = tol * scale;
  const cplx d0 = g2.e22[0];
  if (std::abs(g2.e21[0]) > ctol || !(d0.real() > 0.0) || std::abs(d0.imag()) > ctol ||
      outside(g2.e21, 1, n, ctol) || outside(g2.e22, 0, std::max(0, n - 1), ctol))
    fail(ErrorCode::WrongShape, "expected c(0) = 0, d(0) > 0, deg c <= n, deg d <= n - 1");
  std::vector<cplx> zetas(static_cast<std::size_t>(n));
  LoopMatrix G = g2;
  for (int k = n; k >= 1; --k) {
    const cplx ck = G.e21[k], dk = G.e22[0];
    const cplx zeta = std::conj(ck / dk);
    if (!(std::abs(zeta) < 1.0)) {
      std::ostringstream os;
      os << "peeled |zeta_" << k << "| = " << std::abs(zeta) << " >= 1";
      fail(ErrorCode::NotInImage, os.str());
    }
    const double a = a_disk(zeta);
    LoopMatrix Finv;
    Finv.e11 = LaurentSeries::constant(a);
    Finv.e12 = LaurentSeries::monomial(-k, -a * zeta);
    Finv.e21 = LaurentSeries::monomial(k, -a * std::conj(zeta));
    Finv.e22 = LaurentSeries::constant(a);
    G = Finv * G;
    zetas[static_cast<std::size_t>(k - 1)] = zeta;
  }
  require_identity(G, tol, "analyze_g2");
  return zetas;
}

std::vector<cplx> analyze_g1(const LoopMatrix& g1, int n, double tol) {
  if (n < -1) fail(ErrorCode::InvalidArgument, "n must be >= -1");
  const double scale = std::max(1.0, g1.max_abs());
  const double ctol = tol * scale;
  const cplx a0 = g1.e11[0];
  if (!(a0.real() > 0.0) || std::abs(a0.imag()) > ctol || outside(g1.e11, 0, std::max(0, n), ctol) ||
      outside(g1.e12, 0, std::max(0, n), ctol))
    fail(ErrorCode::WrongShape, "expected a, b polynomial in z of degree <= n with a(0) > 0");
  std::vector<cplx> etas(static_cast<std::size_t>(n + 1));
  LoopMatrix G = g1;
  for (int i = n; i >= 0; --i) {
    const cplx bi = G.e12[i], ai = G.e11[0];
    const cplx eta = std::conj(bi / ai);
    if (!(std::abs(eta) < 1.0)) {
      std::ostringstream os;
      os << "peeled |eta_" << i << "| = " << std::abs(eta) << " >= 1";
      fail(ErrorCode::NotInImage, os.str());
    }
    const double a = a_disk(eta);
    LoopMatrix Einv;
    Einv.e11 = LaurentSeries::constant(a);
    Einv.e12 = LaurentSeries::monomial(i, -a * std::conj(eta));
    Einv.e21 = LaurentSeries::monomial(-i, -a * eta);
    Einv.e22 = LaurentSeries::constant(a);
    G = Einv * G;
    etas[static_cast<std::size_t>(i)] = eta;
  }
  require_identity(G, tol, "analyze_g1");
  return etas;
}

namespace {

LoopMatrix fit_loop(const std::vector<Mat2>& v, int trunc) {
  LoopMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<cplx> s(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) s[k] = v[k](i, j);
      r.at(i, j) = fit_series(s, trunc);
    }
  r.group_hint = Group::SU11;
  return r;
}

Mat2 adj2(const Mat2& m) {
  Mat2 r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r;
}

// Truncated series only have det close to 1, so samples are rescaled onto
// SL(2) before the pointwise split.
IwasawaTriple iwasawa_checked(const Mat2& m, std::size_t k) {
  const cplx d = m.determinant();
  if (std::abs(d - 1.0) > 1e-6)
    fail(ErrorCode::NumericalBreakdown, "factor values leave SL(2) at sample " + std::to_string(k));
  return iwasawa_su11(m / std::sqrt(d));
}

}  // namespace

PartialRSF partial_rsf(const LoopMatrix& g, int trunc, int num_samples) {
  if (num_samples <= 2 * trunc) fail(ErrorCode::TruncationTooSmall, "need num_samples > 2 * trunc");
  const int wind = winding_component(g, num_samples);
  if (wind != 0) fail(ErrorCode::NotIdentityComponent, "winding component " + std::to_string(wind));

  PartialRSF out;
  out.factors = triangular_factorization(g);
  const auto lv = out.factors.l.eval(num_samples);
  const auto uv = out.factors.u.eval(num_samples);
  const auto gv = g.eval(num_samples);
  const std::size_t m = lv.size();

  std::size_t arg_l = 0, arg_u = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double rl = std::abs(lv[k](1, 0) / lv[k](0, 0));
    const double ru = std::abs(uv[k](1, 0) / uv[k](1, 1));
    if (rl > out.boundary_sup_l) out.boundary_sup_l = rl, arg_l = k;
    if (ru > out.boundary_sup_u) out.boundary_sup_u = ru, arg_u = k;
  }
  if (out.boundary_sup_l >= 1.0 || out.boundary_sup_u >= 1.0) {
    std::ostringstream os;
    if (out.boundary_sup_l >= 1.0)
      os << "sup |l21/l11| = " << out.boundary_sup_l << " at sample " << arg_l << " of " << m;
    else
      os << "sup |u21/u22| = " << out.boundary_sup_u << " at sample " << arg_u << " of " << m;
    fail(ErrorCode::BoundaryConditionFails, os.str());
  }

  // Pointwise l^-1 = n1 a1 g1dot and u = n2 a2 g2dot.
  std::vector<cplx> inv_a1(m), inv_a2(m);
  std::vector<Mat2> g1dot(m), g2dot(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto t1 = iwasawa_checked(adj2(lv[k]), k);
    const auto t2 = iwasawa_checked(uv[k], k);
    inv_a1[k] = 1.0 / t1.a_pos;
    inv_a2[k] = 1.0 / t2.a_pos;
    g1dot[k] = t1.g0;
    g2dot[k] = t2.g0;
  }
  // a_i^-1 = exp(chi_i^* + chi_i0 + chi_i); only chi_i (degrees > 0) is needed.
  const auto s1 = scalar_birkhoff_samples(inv_a1, ScalarKind::Positive, trunc);
  const auto s2 = scalar_birkhoff_samples(inv_a2, ScalarKind::Positive, trunc);
  const auto c1 = eval_circle(s1.psi_plus, num_samples);
  const auto c2 = eval_circle(s2.psi_plus, num_samples);

  std::vector<Mat2> g1v(m), g2v(m);
  std::vector<cplx> t11(m);
  const Mat2 J = (Mat2() << 1.0, 0.0, 0.0, -1.0).finished();
  for (std::size_t k = 0; k < m; ++k) {
    // g1 enters through sigma(g1^-1), which reverses the sign of its gauge.
    const cplx x1 = c1[k] - std::conj(c1[k]);
    const cplx x2 = c2[k] - std::conj(c2[k]);
    g1v[k] = (Mat2() << std::exp(-x1), 0.0, 0.0, std::exp(x1)).finished() * g1dot[k];
    g2v[k] = (Mat2() << std::exp(x2), 0.0, 0.0, std::exp(-x2)).finished() * g2dot[k];
    const Mat2 left = (J * g1v[k].adjoint() * J).inverse();
    const Mat2 t = left * gv[k] * g2v[k].inverse();
    out.diagonal_defect = std::max({out.diagonal_defect, std::abs(t(0, 1)), std::abs(t(1, 0))});
    t11[k] = t(0, 0);
  }
  if (out.diagonal_defect > 1e-6) {
    std::ostringstream os;
    os << "extracted torus part has off-diagonal entries up to " << out.diagonal_defect;
    fail(ErrorCode::NumericalBreakdown, os.str());
  }
  if (winding_number(t11) != 0) fail(ErrorCode::NotIdentityComponent, "torus part winds");

  const LaurentSeries logt = fit_series(continuous_log(t11), trunc);
  out.chi0_im = reduce_angle(logt[0].imag());
  LaurentSeries chi;
  for (int k = 1; k <= trunc; ++k) {
    const cplx ck = 0.5 * (logt[k] - std::conj(logt[-k]));
    chi += LaurentSeries::monomial(k, ck);
    chi -= LaurentSeries::monomial(-k, std::conj(ck));
  }
  out.chi = chi;
  out.g1 = fit_loop(g1v, trunc);
  out.g2 = fit_loop(g2v, trunc);

  const cplx e0 = std::polar(1.0, out.chi0_im);
  const LoopMatrix rebuilt = sigma(adjugate(out.g1)) *
                             LoopMatrix::diag(exp_trunc(out.chi, trunc) * e0,
                                              exp_trunc(-out.chi, trunc) * std::conj(e0)) *
                             out.g2;
  out.reconstruction_defect = sample_distance(rebuilt, g, num_samples);
  return out;
}

}  // namespace loopfact
