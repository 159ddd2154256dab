#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "loopfact/errors.hpp"
#include "loopfact/rootsub.hpp"

namespace testutil {

using loopfact::cplx;

inline void expect_code(loopfact::ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << loopfact::error_name(code);
  } catch (const loopfact::LoopError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Small generator set for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  cplx complex(double r) { return {uniform(-r, r), uniform(-r, r)}; }

  // Uniform in the disk of radius r.
  cplx disk(double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    const double th = uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(rho, th);
  }

  std::vector<cplx> disks(int n, double r) {
    std::vector<cplx> v;
    for (int k = 0; k < n; ++k) v.push_back(disk(r));
    return v;
  }

  loopfact::LaurentSeries series(int lo, int hi, double r) {
    std::vector<cplx> c;
    for (int k = lo; k <= hi; ++k) c.push_back(complex(r));
    return {lo, c};
  }

  loopfact::LoopMatrix loop(int lo, int hi, double r) {
    loopfact::LoopMatrix g;
    g.e11 = series(lo, hi, r);
    g.e12 = series(lo, hi, r);
    g.e21 = series(lo, hi, r);
    g.e22 = series(lo, hi, r);
    return g;
  }

  // chi with |chi_j| <= r / j, degree <= deg.
  loopfact::LaurentSeries chi(int deg, double r) {
    std::vector<cplx> c;
    for (int j = 1; j <= deg; ++j) c.push_back(disk(r / j));
    return loopfact::imaginary_chi(c);
  }

  loopfact::RootSubgroupData data(int max_chain, double r, int chi_deg, double chi_r) {
    return loopfact::make_data(disks(integer(0, max_chain), r), disks(integer(0, max_chain), r),
                               chi(integer(0, chi_deg), chi_r), uniform(-3.0, 3.0));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testutil
