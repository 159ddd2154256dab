#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "loopfact/fourier.hpp"
#include "loopfact/kernels.hpp"
#include "loopfact/laurent.hpp"
#include "test_util.hpp"

using namespace loopfact;
namespace K = loopfact::kernels;

namespace {

std::vector<cplx> random_vec(testutil::Gen& g, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = g.complex(1.0);
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

TEST(Kernels, ScalarConvolveMatchesDefinition) {
  const std::vector<cplx> a{1.0, 2.0, {0.0, 1.0}};
  const std::vector<cplx> b{1.0, -1.0};
  std::vector<cplx> out(4);
  K::scalar::convolve(a.data(), a.size(), b.data(), b.size(), out.data());
  const std::vector<cplx> expect{1.0, 1.0, {-2.0, 1.0}, {0.0, -1.0}};
  EXPECT_LT(max_diff(out, expect), 1e-15);
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!K::avx2::available()) GTEST_SKIP() << "no AVX2 on this machine";
  testutil::Gen g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t na = static_cast<std::size_t>(g.integer(1, 70));
    const std::size_t nb = static_cast<std::size_t>(g.integer(1, 70));
    const auto a = random_vec(g, na), b = random_vec(g, nb);
    std::vector<cplx> s(na + nb - 1), v(na + nb - 1);
    K::scalar::convolve(a.data(), na, b.data(), nb, s.data());
    K::avx2::convolve(a.data(), na, b.data(), nb, v.data());
    EXPECT_LT(max_diff(s, v), 1e-12);

    const std::size_t m = static_cast<std::size_t>(g.integer(1, 300));
    const int lo = g.integer(-20, 5);
    std::vector<cplx> es(m), ev(m);
    K::scalar::eval_circle(a.data(), na, lo, m, es.data());
    K::avx2::eval_circle(a.data(), na, lo, m, ev.data());
    EXPECT_LT(max_diff(es, ev), 1e-12);

    const auto c = random_vec(g, na);
    std::vector<cplx> ps(na), pv(na);
    K::scalar::pointwise_mul(a.data(), c.data(), ps.data(), na);
    K::avx2::pointwise_mul(a.data(), c.data(), pv.data(), na);
    EXPECT_LT(max_diff(ps, pv), 1e-14);
    K::scalar::pointwise_muladd(a.data(), c.data(), ps.data(), na);
    K::avx2::pointwise_muladd(a.data(), c.data(), pv.data(), na);
    EXPECT_LT(max_diff(ps, pv), 1e-14);
  }
}

TEST(Kernels, DispatchMatchesScalar) {
  testutil::Gen g(11);
  const auto a = random_vec(g, 33), b = random_vec(g, 17);
  std::vector<cplx> s(49), d(49);
  K::scalar::convolve(a.data(), 33, b.data(), 17, s.data());
  K::convolve(a.data(), 33, b.data(), 17, d.data());
  EXPECT_LT(max_diff(s, d), 1e-12);
  const char* name = K::isa_name(K::active_isa());
  EXPECT_TRUE(std::string(name) == "scalar" || std::string(name) == "avx2") << name;
  const char* force = std::getenv("LOOPFACT_FORCE_SCALAR");
  if (force && std::string(force) == "1") EXPECT_EQ(K::active_isa(), K::Isa::Scalar);
}

TEST(Kernels, EvalCircleDirect) {
  // 2 z^-1 + 3 z^2 at theta_k.
  const std::vector<cplx> c{2.0, 0.0, 0.0, 3.0};
  std::vector<cplx> out(5);
  K::scalar::eval_circle(c.data(), c.size(), -1, 5, out.data());
  for (int k = 0; k < 5; ++k) {
    const cplx zk = std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0);
    EXPECT_LT(std::abs(out[k] - (2.0 / zk + 3.0 * zk * zk)), 1e-13);
  }
}

TEST(Fourier, RoundTripAndKnownCoefficients) {
  testutil::Gen g(3);
  const auto x = random_vec(g, 48);
  EXPECT_LT(max_diff(fourier_synthesis(fourier_coefficients(x)), x), 1e-14);
  const LaurentSeries f(0, {1.0, 0.0, {0.0, 2.0}});
  const auto c = fourier_coefficients(eval_circle(f, 8));
  EXPECT_LT(std::abs(c[0] - 1.0), 1e-15);
  EXPECT_LT(std::abs(c[2] - cplx(0.0, 2.0)), 1e-15);
  EXPECT_LT(std::abs(c[1]), 1e-15);
}
