#include "loopfact/dets.hpp"

#include <algorithm>
#include <cmath>

#include "loopfact/errors.hpp"
#include "loopfact/toeplitz.hpp"

namespace loopfact {

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

double DetReport::max_relative_error() const {
  double m = 0.0;
  for (const auto& [k, v] : relative_errors) m = std::max(m, v);
  return m;
}

double det_formula(const RootSubgroupData& data, bool shifted) {
  const int s = shifted ? 1 : 0;
  double log_v = 0.0;
  for (std::size_t i = 0; i < data.etas.size(); ++i) {
    const double r2 = std::norm(data.etas[i]);
    if (!(r2 < 1.0)) fail(ErrorCode::ParameterOnOrOutsideDisk, "|eta| >= 1");
    log_v -= static_cast<double>(static_cast<int>(i) + s) * std::log1p(-r2);
  }
  for (std::size_t j = 0; j < data.zetas.size(); ++j) {
    const double r2 = std::norm(data.zetas[j]);
    if (!(r2 < 1.0)) fail(ErrorCode::ParameterOnOrOutsideDisk, "|zeta| >= 1");
    log_v -= static_cast<double>(static_cast<int>(j) + 1 - s) * std::log1p(-r2);
  }
  for (int k = 1; k <= std::max(0, data.chi.max_deg()); ++k) log_v -= 2.0 * k * std::norm(data.chi[k]);
  return std::exp(log_v);
}

namespace {

void fill_errors(DetReport& r) {
  r.relative_errors["operator"] = relative_error(r.operator_value, r.formula_value);
  r.relative_errors["shifted_operator"] = relative_error(r.shifted_operator, r.shifted_formula);
  r.relative_errors["a0_sq_operator"] = relative_error(r.a0_sq_operator, r.a0_sq_formula);
  r.relative_errors["a0_sq_factorization"] = relative_error(r.a0_sq_factorization, r.a0_sq_formula);
}

}  // namespace

DetReport szego_widom_check(const LaurentSeries& chi, int trunc) {
  const RootSubgroupData data = make_data({}, {}, chi);
  const LoopMatrix g = synth_full(data, trunc);
  const LoopMatrix gi = LoopMatrix::diag(g.e22, g.e11);
  DetReport r;
  r.formula_value = det_formula(data, false);
  r.shifted_formula = det_formula(data, true);
  r.operator_value = det_AA(g, gi, false);
  r.shifted_operator = det_AA(g, gi, true);
  r.a0_sq_formula = 1.0;
  r.a0_sq_operator = r.shifted_operator / r.operator_value;
  const auto f = triangular_factorization(g);
  r.a0_sq_factorization = f.a0 * f.a0;
  fill_errors(r);
  return r;
}

DetReport a0_ratio_check(const RootSubgroupData& data, int trunc) {
  const LoopMatrix g = synth_full(data, trunc);
  const LoopMatrix gi = adjugate(g);
  DetReport r;
  r.formula_value = det_formula(data, false);
  r.shifted_formula = det_formula(data, true);
  r.operator_value = det_AA(g, gi, false);
  r.shifted_operator = det_AA(g, gi, true);
  r.a0_sq_formula = r.shifted_formula / r.formula_value;
  r.a0_sq_operator = r.shifted_operator / r.operator_value;
  const auto f = triangular_factorization(g);
  r.a0_sq_factorization = f.a0 * f.a0;
  fill_errors(r);
  return r;
}

}  // namespace loopfact
