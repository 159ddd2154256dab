#include <gtest/gtest.h>

#include "loopfact/loop2.hpp"
#include "loopfact/rootsub.hpp"
#include "test_util.hpp"

using namespace loopfact;
using testutil::expect_code;

namespace {

const LaurentSeries z = LaurentSeries::monomial(1);
const LaurentSeries zi = LaurentSeries::monomial(-1);

LoopMatrix example_loop(cplx zeta, int n) {
  LoopMatrix g;
  const double a = a_disk(zeta);
  g.e11 = LaurentSeries::constant(a);
  g.e12 = LaurentSeries::monomial(-n, a * zeta);
  g.e21 = LaurentSeries::monomial(n, a * std::conj(zeta));
  g.e22 = LaurentSeries::constant(a);
  return g;
}

}  // namespace

TEST(Loop2, Inverse) {
  EXPECT_EQ(inverse(LoopMatrix::identity()).e11, LoopMatrix::identity().e11);
  EXPECT_EQ(coeff_distance(inverse(LoopMatrix::identity()), LoopMatrix::identity()), 0.0);
  const LoopMatrix d = LoopMatrix::diag(z, zi);
  EXPECT_EQ(coeff_distance(inverse(d), LoopMatrix::diag(zi, z)), 0.0);
  const LoopMatrix g = synth_g2({0.3, {0.1, 0.4}});
  // Pointwise numeric inversion at 64 samples.
  const auto gv = g.eval(64);
  const auto iv = inverse(g).eval(64);
  for (int k = 0; k < 64; ++k) EXPECT_LT((gv[k].inverse() - iv[k]).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(coeff_distance(group_ops(g, LoopMatrix::identity(), GroupOp::InverseOfFirst), inverse(g)), 0.0);
  EXPECT_LT(coeff_distance(group_ops(g, inverse(g), GroupOp::Mul), LoopMatrix::identity()), 1e-12);
}

TEST(Loop2, InverseRejectsDetNotOne) {
  expect_code(ErrorCode::DetNotOne, [] { inverse(LoopMatrix::diag(LaurentSeries::constant(2.0), LaurentSeries::constant(1.0))); });
}

TEST(Loop2, SigmaAndTheta) {
  EXPECT_EQ(coeff_distance(sigma(LoopMatrix::identity()), LoopMatrix::identity()), 0.0);
  const LoopMatrix d = LoopMatrix::diag(z, zi);
  EXPECT_EQ(coeff_distance(sigma(d), d), 0.0);
  const LoopMatrix g = example_loop({0.3, 0.4}, 2);
  EXPECT_LT(coeff_distance(sigma(g), g), 1e-15);
  LoopMatrix h;
  h.e11 = LaurentSeries::constant(1.0);
  h.e12 = z;
  h.e21 = zi * cplx(2.0);
  h.e22 = LaurentSeries::constant(3.0);
  const LoopMatrix t = theta(h);
  EXPECT_EQ(t.e12, -z);
  EXPECT_EQ(t.e21, zi * cplx(-2.0));
  EXPECT_EQ(t.e11, h.e11);
  EXPECT_EQ(t.e22, h.e22);
  const LoopMatrix hs = hermitian_star(h);
  EXPECT_EQ(hs.e12, star(h.e21));
  EXPECT_EQ(hs.e21, star(h.e12));
}

TEST(Loop2, Membership) {
  const LoopMatrix g = example_loop({0.3, 0.4}, 2);
  EXPECT_TRUE(membership(g, Group::SU11).member);
  for (Group grp : {Group::SU11, Group::SU2, Group::SL2C}) EXPECT_TRUE(membership(LoopMatrix::identity(), grp).member);
  Mat2 m;
  m << 2.0, 0.0, 0.0, 0.5;
  const LoopMatrix c = LoopMatrix::constant(m);
  const auto su = membership(c, Group::SU11);
  EXPECT_FALSE(su.member);
  EXPECT_NEAR(su.defect, 3.0, 1e-12);
  EXPECT_TRUE(membership(c, Group::SL2C).member);
  EXPECT_FALSE(membership(g, Group::SU2).member);
}

TEST(Loop2, GroupNames) {
  EXPECT_EQ(parse_group("SU11"), Group::SU11);
  EXPECT_EQ(parse_group("SL2C"), Group::SL2C);
  EXPECT_FALSE(parse_group("SO3").has_value());
  EXPECT_STREQ(group_name(Group::SU2), "SU2");
}

TEST(Loop2, PolarConstant) {
  const double a = a_disk(0.5);
  EXPECT_NEAR(a, 1.1547005383792517, 1e-15);
  Mat2 m;
  m << a, a * 0.5, a * 0.5, a;
  const auto p = polar_su11(LoopMatrix::constant(m));
  EXPECT_LT(std::abs(p.lambda[0] - 1.0), 1e-12);
  EXPECT_LT(p.lambda.clamp(-1000, -1).max_abs() + p.lambda.clamp(1, 1000).max_abs(), 1e-12);
  EXPECT_LT(std::abs(p.core.e11[0] - a), 1e-12);
  EXPECT_LT(std::abs(p.core.e12[0] - 0.5 * a), 1e-12);
  EXPECT_LT(p.residual, 1e-12);
}

TEST(Loop2, PolarIdentityAndTorus) {
  const auto p = polar_su11(LoopMatrix::identity());
  EXPECT_LT(std::abs(p.lambda[0] - 1.0), 1e-12);
  EXPECT_LT(p.core.e12.max_abs(), 1e-12);
  const auto q = polar_su11(LoopMatrix::diag(z, zi));
  EXPECT_LT(std::abs(q.lambda[1] - 1.0), 1e-12);
  EXPECT_LT(std::abs(q.lambda[0]), 1e-12);
  EXPECT_LT(coeff_distance(q.core, LoopMatrix::identity()), 1e-12);
  EXPECT_LT(std::abs(q.lambda_inv[-1] - 1.0), 1e-12);
}

TEST(Loop2, PolarRejectsNegativeTrunc) {
  expect_code(ErrorCode::InvalidArgument, [] { polar_su11(LoopMatrix::identity(), 256, -1); });
}

TEST(Loop2, Winding) {
  EXPECT_EQ(winding_component(LoopMatrix::diag(z, zi)), 1);
  EXPECT_EQ(winding_component(LoopMatrix::identity()), 0);
  EXPECT_EQ(winding_component(example_loop({0.6, -0.2}, 3)), 0);
  EXPECT_EQ(winding_component(example_loop(0.5, 1) * LoopMatrix::diag(zi * zi, z * z)), -2);
}

TEST(Loop2, Iwasawa) {
  const auto id = iwasawa_su11(Mat2::Identity());
  EXPECT_LT((id.n_plus - Mat2::Identity()).norm(), 1e-15);
  EXPECT_NEAR(id.a_pos, 1.0, 1e-15);
  EXPECT_LT((id.g0 - Mat2::Identity()).norm(), 1e-15);

  const Mat2 su = q_factor({0.3, -0.5});
  const auto s = iwasawa_su11(su);
  EXPECT_LT((s.n_plus - Mat2::Identity()).norm(), 1e-12);
  EXPECT_NEAR(s.a_pos, 1.0, 1e-12);
  EXPECT_LT((s.g0 - su).norm(), 1e-12);

  Mat2 n;
  n << 1.0, 1.0, 0.0, 1.0;
  const auto t = iwasawa_su11(n);
  EXPECT_LT((t.n_plus - n).norm(), 1e-14);
  EXPECT_NEAR(t.a_pos, 1.0, 1e-14);
  EXPECT_LT((t.g0 - Mat2::Identity()).norm(), 1e-14);
}

TEST(Loop2, DegreesAndDet) {
  LoopMatrix g = example_loop(0.5, 2);
  EXPECT_EQ(g.min_deg(), -2);
  EXPECT_EQ(g.max_deg(), 2);
  EXPECT_LT(std::abs(g.coeff(-2)(0, 1) - a_disk(0.5) * 0.5), 1e-15);
  EXPECT_LT((g.det() - LaurentSeries::constant(1.0)).max_abs(), 1e-15);
}
