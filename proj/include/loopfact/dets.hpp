#pragma once

#include <map>
#include <string>

#include "loopfact/rootsub.hpp"

namespace loopfact {

struct DetReport {
  double formula_value = 1.0;
  double operator_value = 1.0;
  double shifted_formula = 1.0;
  double shifted_operator = 1.0;
  double a0_sq_formula = 1.0;
  double a0_sq_operator = 1.0;
  double a0_sq_factorization = 1.0;
  /// Relative deviations from the formula values, keyed by comparison name.
  std::map<std::string, double> relative_errors;

  double max_relative_error() const;
};

/// Closed-form product for det(A(g) A(g^-1)) (or the shifted determinant)
/// of the loop synthesized from data.
double det_formula(const RootSubgroupData& data, bool shifted);

/// Torus loop diag(e^chi, e^-chi): closed form against the operator value.
DetReport szego_widom_check(const LaurentSeries& chi, int trunc = kDefaultTrunc);

/// a0^2 from the formula ratio, the operator ratio and the triangular factorization.
DetReport a0_ratio_check(const RootSubgroupData& data, int trunc = kDefaultTrunc);

double relative_error(double value, double reference);

}  // namespace loopfact
