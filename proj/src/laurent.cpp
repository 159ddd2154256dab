#include "loopfact/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "loopfact/errors.hpp"
#include "loopfact/fourier.hpp"
#include "loopfact/kernels.hpp"

namespace loopfact {

LaurentSeries::LaurentSeries(int min_deg, std::vector<cplx> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentSeries LaurentSeries::constant(cplx c) { return LaurentSeries(0, {c}); }

LaurentSeries LaurentSeries::monomial(int k, cplx c) { return LaurentSeries(k, {c}); }

void LaurentSeries::normalize() {
  double mx = 0.0;
  for (const auto& c : coeffs_) mx = std::max(mx, std::abs(c));
  if (mx == 0.0) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  const double cut = kDropRelative * mx;
  for (auto& c : coeffs_)
    if (std::abs(c) < cut) c = 0.0;
  std::size_t lo = 0, hi = coeffs_.size();
  while (lo < hi && coeffs_[lo] == cplx(0.0)) ++lo;
  while (hi > lo && coeffs_[hi - 1] == cplx(0.0)) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<cplx>(coeffs_.begin() + static_cast<long>(lo),
                                coeffs_.begin() + static_cast<long>(hi));
    min_deg_ += static_cast<int>(lo);
  }
}

cplx LaurentSeries::operator[](int k) const {
  const long j = static_cast<long>(k) - min_deg_;
  if (j < 0 || j >= static_cast<long>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)];
}

LaurentSeries LaurentSeries::clamp(int lo, int hi) const {
  if (is_zero() || lo > hi) return {};
  const int a = std::max(lo, min_deg()), b = std::min(hi, max_deg());
  if (a > b) return {};
  return LaurentSeries(a, std::vector<cplx>(coeffs_.begin() + (a - min_deg_),
                                            coeffs_.begin() + (b - min_deg_) + 1));
}

double LaurentSeries::max_abs() const {
  double mx = 0.0;
  for (const auto& c : coeffs_) mx = std::max(mx, std::abs(c));
  return mx;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_deg(), o.min_deg()), hi = std::max(max_deg(), o.max_deg());
  std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j + (min_deg_ - lo)] += coeffs_[j];
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[j + (o.min_deg_ - lo)] += o.coeffs_[j];
  min_deg_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> c(a.size() + b.size() - 1);
  kernels::convolve(a.coeffs_.data(), a.size(), b.coeffs_.data(), b.size(), c.data());
  return LaurentSeries(a.min_deg_ + b.min_deg_, std::move(c));
}

LaurentSeries arith(const LaurentSeries& f, const LaurentSeries& g, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
  }
  return {};
}

LaurentSeries star(const LaurentSeries& f) {
  if (f.is_zero()) return {};
  std::vector<cplx> c(f.coeffs().rbegin(), f.coeffs().rend());
  for (auto& v : c) v = std::conj(v);
  return LaurentSeries(-f.max_deg(), std::move(c));
}

LaurentSeries hardy_project(const LaurentSeries& f, HardyPart part) {
  if (f.is_zero()) return {};
  switch (part) {
    case HardyPart::Plus: return f.clamp(0, std::max(0, f.max_deg()));
    case HardyPart::Minus: return f.clamp(std::min(0, f.min_deg()), 0);
    case HardyPart::StrictMinus: return f.clamp(std::min(-1, f.min_deg()), -1);
  }
  return {};
}

std::vector<cplx> eval_circle(const LaurentSeries& f, int num_samples) {
  if (num_samples < 1) fail(ErrorCode::InvalidArgument, "num_samples must be >= 1");
  std::vector<cplx> out(static_cast<std::size_t>(num_samples));
  kernels::eval_circle(f.coeffs().data(), f.size(), f.min_deg(), out.size(), out.data());
  return out;
}

LaurentSeries fit_series(const std::vector<cplx>& samples, int trunc) {
  const int m = static_cast<int>(samples.size());
  if (m == 0) return {};
  trunc = std::min(trunc, (m - 1) / 2);
  const auto c = fourier_coefficients(samples);
  std::vector<cplx> out(static_cast<std::size_t>(2 * trunc + 1));
  for (int k = -trunc; k <= trunc; ++k) out[static_cast<std::size_t>(k + trunc)] = c[static_cast<std::size_t>((k % m + m) % m)];
  return LaurentSeries(-trunc, std::move(out));
}

LaurentSeries exp_trunc(const LaurentSeries& chi, int max_deg) {
  if (max_deg < 0) fail(ErrorCode::InvalidArgument, "max_deg must be >= 0");
  if (chi.is_zero()) return LaurentSeries::constant(1.0);
  const int window = 2 * max_deg + 8;
  const LaurentSeries x = chi.clamp(-window, window);
  LaurentSeries sum = LaurentSeries::constant(1.0);
  LaurentSeries term = sum;
  for (int k = 1; k < 1000; ++k) {
    term = (term * x).clamp(-window, window) * cplx(1.0 / k);
    if (term.is_zero()) break;
    sum += term;
    if (term.max_abs() < 1e-18 * sum.max_abs() && k > 2) break;
  }
  return sum.clamp(-max_deg, max_deg);
}

int winding_number(const std::vector<cplx>& samples) {
  const std::size_t m = samples.size();
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) total += std::arg(samples[(k + 1) % m] / samples[k]);
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

std::vector<cplx> continuous_log(const std::vector<cplx>& samples) {
  std::vector<cplx> out(samples.size());
  if (samples.empty()) return out;
  double phase = std::arg(samples[0]);
  out[0] = {std::log(std::abs(samples[0])), phase};
  for (std::size_t k = 1; k < samples.size(); ++k) {
    phase += std::arg(samples[k] / samples[k - 1]);
    out[k] = {std::log(std::abs(samples[k])), phase};
  }
  return out;
}

namespace {

std::size_t pow2_at_least(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

TriangularScalarFactors scalar_birkhoff(const LaurentSeries& f, ScalarKind kind, int trunc) {
  if (trunc < 1) fail(ErrorCode::InvalidArgument, "trunc must be >= 1");
  const int span = f.is_zero() ? 0 : f.max_deg() - f.min_deg();
  const std::size_t m = pow2_at_least(std::max<std::size_t>(64, 4 * static_cast<std::size_t>(span + trunc)));
  return scalar_birkhoff_samples(eval_circle(f, static_cast<int>(m)), kind, trunc);
}

TriangularScalarFactors scalar_birkhoff_samples(const std::vector<cplx>& samples, ScalarKind kind,
                                                int trunc) {
  const int m = static_cast<int>(samples.size());
  if (m <= 2 * trunc) fail(ErrorCode::TruncationTooSmall, "need more than 2*trunc samples");
  double scale = 0.0;
  for (const auto& v : samples) scale = std::max(scale, std::abs(v));
  for (int k = 0; k < m; ++k) {
    const double r = std::abs(samples[static_cast<std::size_t>(k)]);
    if (scale == 0.0 || r <= 1e-13 * scale)
      fail(ErrorCode::VanishesOnCircle, "|f| = " + std::to_string(r) + " at sample " + std::to_string(k));
  }
  for (const auto& v : samples) {
    if (kind == ScalarKind::Positive && (v.real() <= 0.0 || std::abs(v.imag()) > 1e-8 * std::abs(v)))
      fail(ErrorCode::NotPositive, "boundary values must be real and positive");
    if (kind == ScalarKind::Unimodular && std::abs(std::abs(v) - 1.0) > 1e-8)
      fail(ErrorCode::NotUnimodular, "boundary values must have modulus 1");
  }
  const int w = winding_number(samples);
  if (w != 0) fail(ErrorCode::WindingNonzero, "winding number " + std::to_string(w));

  const auto c = fourier_coefficients(continuous_log(samples));
  const auto at = [&](int k) { return c[static_cast<std::size_t>((k % m + m) % m)]; };
  std::vector<cplx> plus(static_cast<std::size_t>(trunc));
  for (int k = 1; k <= trunc; ++k) {
    plus[static_cast<std::size_t>(k - 1)] = kind == ScalarKind::Positive
                                                ? 0.5 * (at(k) + std::conj(at(-k)))
                                                : 0.5 * (at(k) - std::conj(at(-k)));
  }
  TriangularScalarFactors out;
  out.psi_plus = LaurentSeries(1, std::move(plus));
  if (kind == ScalarKind::Positive) {
    out.psi_minus = star(out.psi_plus);
    out.psi_zero = at(0).real();
  } else {
    out.psi_minus = -star(out.psi_plus);
    out.psi_zero = cplx(0.0, at(0).imag());
  }
  const auto v = eval_circle(out.psi_minus + out.psi_plus, m);
  double res = 0.0;
  for (int k = 0; k < m; ++k) {
    const auto s = samples[static_cast<std::size_t>(k)];
    res = std::max(res, std::abs(std::exp(v[static_cast<std::size_t>(k)] + out.psi_zero) - s) / std::abs(s));
  }
  out.residual = res;
  return out;
}

}  // namespace loopfact
