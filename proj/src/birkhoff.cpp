#include "loopfact/birkhoff.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "loopfact/errors.hpp"

namespace loopfact {

LoopMatrix WeylElement::representative() const {
  const auto zp = LaurentSeries::monomial(n), zm = LaurentSeries::monomial(-n);
  if (!flip) return LoopMatrix::diag(zp, zm);
  LoopMatrix r;
  r.e12 = -zp;
  r.e21 = zm;
  return r;
}

LoopMatrix WeylElement::representative_inverse() const {
  const auto zp = LaurentSeries::monomial(n), zm = LaurentSeries::monomial(-n);
  if (!flip) return LoopMatrix::diag(zm, zp);
  LoopMatrix r;
  r.e12 = zp;
  r.e21 = -zm;
  return r;
}

WeylElement WeylElement::inverse() const { return flip ? *this : WeylElement{-n, false}; }

std::string WeylElement::label() const {
  if (*this == identity()) return "1";
  if (*this == r1()) return "r1";
  if (*this == r0()) return "r0";
  if (*this == WeylElement{-1, false}) return "r0r1";
  std::ostringstream os;
  os << "(n=" << n << ",flip=" << (flip ? "true" : "false") << ")";
  return os.str();
}

LoopMatrix BirkhoffFactors::product() const {
  const cplx m = m0 * a0;
  return l * w.representative() * LoopMatrix::diag(LaurentSeries::constant(m), LaurentSeries::constant(1.0 / m)) * u;
}

namespace {

// Constraints on X = l^-1 = sum_{k=-D}^{0} X_k z^k for g = l w d u:
//   X_0 lower unipotent,
//   Y = w^-1 X w has no positive modes and Y_0 lower unipotent (so that
//       w^-1 l w is again of exterior type),
//   Z = w^-1 X g has no negative modes and Z_0(2,1) = 0 (Z = d u).
struct System {
  int D;
  int ypos;            // positive Y degrees checked: 1..ypos
  int zlo;             // negative Z degrees checked: zlo..-1
  LoopMatrix winv, wrep;
  const LoopMatrix* g;

  std::size_t unknowns() const { return 4 * static_cast<std::size_t>(D + 1); }

  LoopMatrix unpack(const Eigen::VectorXcd& x) const {
    LoopMatrix X;
    for (int e = 0; e < 4; ++e) {
      std::vector<cplx> c(static_cast<std::size_t>(D + 1));
      for (int k = 0; k <= D; ++k) c[static_cast<std::size_t>(k)] = x(e * (D + 1) + k);
      X.at(e / 2, e % 2) = LaurentSeries(-D, std::move(c));
    }
    return X;
  }

  std::vector<cplx> constraints(const LoopMatrix& X) const {
    std::vector<cplx> out;
    out.push_back(X.e11[0]);
    out.push_back(X.e12[0]);
    out.push_back(X.e22[0]);
    const LoopMatrix Y = winv * X * wrep;
    for (int e = 0; e < 4; ++e) {
      const auto& y = Y.at(e / 2, e % 2);
      for (int k = 1; k <= ypos; ++k) out.push_back(y[k]);
    }
    out.push_back(Y.e11[0]);
    out.push_back(Y.e12[0]);
    out.push_back(Y.e22[0]);
    const LoopMatrix Z = winv * X * (*g);
    for (int e = 0; e < 4; ++e) {
      const auto& zz = Z.at(e / 2, e % 2);
      for (int k = zlo; k <= -1; ++k) out.push_back(zz[k]);
    }
    out.push_back(Z.e21[0]);
    return out;
  }

  std::vector<cplx> target() const {
    std::vector<cplx> t(constraints(LoopMatrix()).size(), 0.0);
    t[0] = 1.0;
    t[2] = 1.0;
    const std::size_t y0 = 3 + 4 * static_cast<std::size_t>(ypos);
    t[y0] = 1.0;
    t[y0 + 2] = 1.0;
    return t;
  }
};

// Zeroes coefficients that are roundoff relative to the whole matrix.
LoopMatrix chop(const LoopMatrix& m, double tol) {
  LoopMatrix r = m;
  for (int e = 0; e < 4; ++e) {
    const auto& f = m.at(e / 2, e % 2);
    std::vector<cplx> c = f.coeffs();
    for (auto& v : c)
      if (std::abs(v) < tol) v = 0.0;
    r.at(e / 2, e % 2) = LaurentSeries(f.min_deg(), std::move(c));
  }
  return r;
}

}  // namespace

FactorStatus factor_with(const LoopMatrix& g, const WeylElement& w, const FactorOptions& opt,
                         BirkhoffFactors& out, int window) {
  const int span = g.max_deg() - g.min_deg();
  const int nn = std::abs(w.n);
  System sys;
  sys.D = window > 0 ? window : span + 2 * nn + 2;
  sys.ypos = 2 * nn + 1;
  sys.zlo = g.min_deg() - sys.D - nn - 1;
  sys.winv = w.representative_inverse();
  sys.wrep = w.representative();
  sys.g = &g;

  const auto t = sys.target();
  const std::size_t nu = sys.unknowns();
  Eigen::MatrixXcd A(static_cast<long>(t.size()), static_cast<long>(nu));
  for (std::size_t j = 0; j < nu; ++j) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<long>(nu));
    e(static_cast<long>(j)) = 1.0;
    const auto col = sys.constraints(sys.unpack(e));
    for (std::size_t i = 0; i < col.size(); ++i) A(static_cast<long>(i), static_cast<long>(j)) = col[i];
  }
  Eigen::VectorXcd b(static_cast<long>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) b(static_cast<long>(i)) = t[i];

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXcd x = svd.solve(b);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) > 0.0 ? sv(sv.size() - 1) / sv(0) : 0.0;
  const double residual = (A * x - b).norm();

  out = BirkhoffFactors{};
  out.w = w;
  out.residual = residual;
  out.conditioning = cond;
  const double scale = std::max(1.0, g.max_abs());
  if (residual > opt.residual_tol * scale || cond < opt.singular_tol) return FactorStatus::Rejected;

  const LoopMatrix X = sys.unpack(x);
  const LoopMatrix Z = sys.winv * X * g;
  const cplx m = Z.e11[0];
  if (std::abs(m) < 1e-300) return FactorStatus::Rejected;
  const int hi = std::max(0, Z.max_deg());
  LoopMatrix u;
  u.e11 = (Z.e11 * (1.0 / m)).clamp(0, hi);
  u.e12 = (Z.e12 * (1.0 / m)).clamp(0, hi);
  u.e21 = (Z.e21 * m).clamp(0, hi);
  u.e22 = (Z.e22 * m).clamp(0, hi);
  constexpr double kChop = 1e-14;
  out.u = chop(u, kChop * std::max(1.0, u.max_abs()));
  out.l = adjugate(X).clamp(-sys.D, 0);
  out.l = chop(out.l, kChop * std::max(1.0, out.l.max_abs()));
  out.l.group_hint.reset();
  out.a0 = std::abs(m);
  out.m0 = m / std::abs(m);
  out.reconstruction_defect = coeff_distance(out.product(), g);
  return cond < opt.marginal_tol ? FactorStatus::Marginal : FactorStatus::Accepted;
}

BirkhoffFactors triangular_factorization(const LoopMatrix& g, const FactorOptions& opt) {
  const int span = g.max_deg() - g.min_deg();
  BirkhoffFactors f;
  for (int window : {0, 2 * span + 2}) {
    const auto st = factor_with(g, WeylElement::identity(), opt, f, window);
    if (st == FactorStatus::Accepted) return f;
    if (st == FactorStatus::Marginal) {
      std::ostringstream os;
      os << "w = 1 is admissible only with sigma_min/sigma_max = " << f.conditioning;
      fail(ErrorCode::NumericalBreakdown, os.str());
    }
  }
  std::ostringstream os;
  os << "no triangular factorization (residual " << f.residual << ", sigma_min/sigma_max "
     << f.conditioning << ")";
  fail(ErrorCode::NotInTopStratum, os.str());
}

BirkhoffFactors birkhoff_factorization(const LoopMatrix& g, const FactorOptions& opt) {
  const int bound = g.max_deg() - g.min_deg() + 2;
  bool have_marginal = false;
  BirkhoffFactors marginal;
  for (int step = 0; step <= 2 * bound; ++step) {
    const int n = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    for (bool flip : {false, true}) {
      BirkhoffFactors f;
      const auto st = factor_with(g, WeylElement{n, flip}, opt, f);
      if (st == FactorStatus::Rejected) continue;
      if (st == FactorStatus::Accepted && !have_marginal) return f;
      std::ostringstream os;
      if (have_marginal) {
        os << "candidates " << marginal.w.label() << " (sigma ratio " << marginal.conditioning
           << ") and " << f.w.label() << " (sigma ratio " << f.conditioning << ")";
        fail(ErrorCode::NumericalBreakdown, os.str());
      }
      have_marginal = true;
      marginal = f;
    }
  }
  if (have_marginal) {
    std::ostringstream os;
    os << "only marginal candidate " << marginal.w.label() << " (sigma ratio "
       << marginal.conditioning << ")";
    fail(ErrorCode::NumericalBreakdown, os.str());
  }
  fail(ErrorCode::SearchExhausted, "no middle term with |n| <= " + std::to_string(bound));
}

WeylElement stratum(const LoopMatrix& g, const FactorOptions& opt) {
  return birkhoff_factorization(g, opt).w;
}

LoopMatrix counterexample_loop(int trunc) {
  if (trunc < 16) fail(ErrorCode::TruncationTooSmall, "trunc must be >= 16");
  const auto z = LaurentSeries::monomial(1), zi = LaurentSeries::monomial(-1);
  const auto one = LaurentSeries::constant(1.0);
  const LaurentSeries f = LaurentSeries::constant(3.0) - z - zi;
  // Square root of f through the positive split of f, halved.
  const auto sp = scalar_birkhoff(f, ScalarKind::Positive, trunc);
  const LaurentSeries chi_m = sp.psi_minus * cplx(0.5), chi_p = sp.psi_plus * cplx(0.5);
  const cplx e0 = std::exp(0.5 * sp.psi_zero);
  const LaurentSeries s = exp_trunc(chi_m + chi_p, trunc) * e0;
  const LaurentSeries b = exp_trunc(chi_m - chi_p, trunc) * (zi - one);
  const LaurentSeries c = exp_trunc(chi_p - chi_m, trunc) * (z - one);
  LoopMatrix core;
  core.e11 = s;
  core.e12 = b;
  core.e21 = c;
  core.e22 = s;
  const LoopMatrix d = LoopMatrix::diag(exp_trunc(zi - z, trunc), exp_trunc(z - zi, trunc));
  LoopMatrix g = (d * core).clamp(-trunc, trunc);
  g.group_hint = Group::SU11;
  return g;
}

double tricondition_residual(int trunc, double perturb) {
  if (trunc < 16) fail(ErrorCode::TruncationTooSmall, "trunc must be >= 16");
  const auto z = LaurentSeries::monomial(1), zi = LaurentSeries::monomial(-1);
  const LaurentSeries b2 = zi - LaurentSeries::constant(1.0);
  std::vector<cplx> fc(static_cast<std::size_t>(trunc + 1));
  // (1 - e^{-2z}) / z = sum_{k>=0} -(-2)^{k+1} / (k+1)! z^k
  double term = 1.0;
  for (int k = 0; k <= trunc; ++k) {
    term *= -2.0 / (k + 1);
    fc[static_cast<std::size_t>(k)] = -term;
  }
  fc[0] -= 1.0;
  fc[0] += perturb;
  const LaurentSeries F(0, std::move(fc));
  const LaurentSeries e2 = exp_trunc(z * cplx(2.0), trunc);
  const LaurentSeries inner = F + star(b2) * hardy_project(b2 * F, HardyPart::StrictMinus);
  const LaurentSeries r = hardy_project(e2 * inner, HardyPart::Plus);
  double s = 0.0;
  for (const auto& v : r.coeffs()) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace loopfact
