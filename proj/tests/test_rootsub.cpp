#include <gtest/gtest.h>

#include "loopfact/birkhoff.hpp"
#include "loopfact/rootsub.hpp"
#include "test_util.hpp"

using namespace loopfact;
using testutil::expect_code;

namespace {

const LaurentSeries z = LaurentSeries::monomial(1);
const LaurentSeries zi = LaurentSeries::monomial(-1);

}  // namespace

TEST(RootSub, QFactor) {
  EXPECT_LT((q_factor(0.0) - Mat2::Identity()).norm(), 1e-15);
  Mat2 expect;
  expect << 1.25, 0.75, 0.75, 1.25;
  EXPECT_LT((q_factor(0.6) - expect).norm(), 1e-14);
  testutil::Gen gen(1);
  for (int t = 0; t < 50; ++t) EXPECT_LT(std::abs(q_factor(gen.disk(0.95)).determinant() - 1.0), 1e-12);
  expect_code(ErrorCode::ParameterOnOrOutsideDisk, [] { q_factor(1.0); });
}

TEST(RootSub, SynthBasics) {
  EXPECT_EQ(coeff_distance(synth_g2({}), LoopMatrix::identity()), 0.0);
  EXPECT_EQ(coeff_distance(synth_g1({}), LoopMatrix::identity()), 0.0);
  const double a = a_disk(0.5);
  const auto g = synth_g2({0.5});
  EXPECT_LT(std::abs(g.e11[0] - a), 1e-15);
  EXPECT_LT(std::abs(g.e12[-1] - 0.5 * a), 1e-15);
  EXPECT_LT(std::abs(g.e21[1] - 0.5 * a), 1e-15);
  EXPECT_LT(std::abs(g.e22[0] - a), 1e-15);
  EXPECT_EQ(g.min_deg(), -1);
  EXPECT_EQ(g.max_deg(), 1);
}

TEST(RootSub, SynthFull) {
  EXPECT_LT(coeff_distance(synth_full(make_data({}, {}, {})), LoopMatrix::identity()), 1e-15);
  const auto d = make_data({0.5}, {}, {});
  const auto g = synth_full(d);
  EXPECT_LT(membership(g, Group::SU11).defect, 1e-10);
  EXPECT_LT(coeff_distance(g, sigma(inverse(synth_g1({0.5})))), 1e-14);
}

TEST(RootSub, HermitianConjugateExample) {
  const cplx z1(0.3, 0.2), z2(-0.4, 0.1);
  const auto f = triangular_factorization(hermitian_star(synth_g2({z1, z2})));
  const cplx x1 = std::conj(z1) * (1.0 - std::norm(z2)), x2 = std::conj(z2);
  EXPECT_LT(std::abs(f.u.e21[1] - x1), 1e-12);
  EXPECT_LT(std::abs(f.u.e21[2] - x2), 1e-12);
  EXPECT_LT(f.u.e12.max_abs(), 1e-12);
  EXPECT_NEAR(std::abs(f.u.e21[2]), std::abs(z2), 1e-12);
}

TEST(RootSub, G1LowerFactorExample) {
  // Our sign: l21 = eta_1 z^-1 + eta_0 (1 - |eta_1|^2), so y = conj of these
  // with a plus sign; the moduli match either convention.
  const cplx e0(0.3, 0.1), e1(-0.2, 0.4);
  const auto f = triangular_factorization(synth_g1({e0, e1}));
  const cplx y1 = std::conj(f.l.e21[-1]), y0 = std::conj(f.l.e21[0]);
  EXPECT_NEAR(std::abs(y1), std::abs(e1), 1e-12);
  EXPECT_NEAR(std::abs(y0), std::abs(e0) * (1.0 - std::norm(e1)), 1e-12);
  EXPECT_LT(std::abs(y1 - std::conj(e1)), 1e-12);
  EXPECT_LT(std::abs(y0 - std::conj(e0) * (1.0 - std::norm(e1))), 1e-12);
  EXPECT_LT(f.l.e12.max_abs(), 1e-12);
  EXPECT_NEAR(f.a0, a_disk(e0) * a_disk(e1), 1e-12);
}

TEST(RootSub, ProductFormulas) {
  const std::vector<cplx> etas{0.4, {0.1, -0.5}, -0.3};
  const std::vector<cplx> zetas{{0.2, 0.2}, 0.6};
  EXPECT_NEAR(triangular_factorization(synth_g1(etas)).a0, a_disk(etas[0]) * a_disk(etas[1]) * a_disk(etas[2]), 1e-12);
  EXPECT_NEAR(triangular_factorization(synth_g2(zetas)).a0, 1.0 / (a_disk(zetas[0]) * a_disk(zetas[1])), 1e-12);
  const auto d = make_data(etas, zetas, imaginary_chi({0.1, {0.0, 0.05}}), 0.7);
  const auto f = triangular_factorization(synth_full(d));
  EXPECT_NEAR(f.a0, a_disk(etas[0]) * a_disk(etas[1]) * a_disk(etas[2]) / (a_disk(zetas[0]) * a_disk(zetas[1])),
              1e-9);
}

TEST(RootSub, AnalyzeRoundTrips) {
  const std::vector<cplx> zetas{0.5, {0.0, 0.3}};
  const auto zr = analyze_g2(synth_g2(zetas), 2);
  ASSERT_EQ(zr.size(), 2u);
  for (int k = 0; k < 2; ++k) EXPECT_LT(std::abs(zr[k] - zetas[k]), 1e-10);
  const std::vector<cplx> etas{0.4, -0.2};
  const auto er = analyze_g1(synth_g1(etas), 1);
  ASSERT_EQ(er.size(), 2u);
  for (int k = 0; k < 2; ++k) EXPECT_LT(std::abs(er[k] - etas[k]), 1e-10);
  EXPECT_TRUE(analyze_g2(LoopMatrix::identity(), 0).empty());
  EXPECT_TRUE(analyze_g1(LoopMatrix::identity(), -1).empty());
  // a1 recomputed from the recovered etas.
  EXPECT_NEAR(a_disk(er[0]) * a_disk(er[1]), triangular_factorization(synth_g1(etas)).a0, 1e-10);
}

TEST(RootSub, AnalyzeRejectsOutsideImage) {
  // n = 2 loop with numerator and denominator of a2^2 both negative.
  const double x1 = 1.2, x2 = 1.3, den = 1.0 - x2 * x2, a2sq = (den * den - x1 * x1) / den, a2 = std::sqrt(a2sq);
  ASSERT_LT(den, 0.0);
  LoopMatrix lft = LoopMatrix::identity();
  lft.e12 = LaurentSeries(-2, {x2, x1});
  LoopMatrix right;
  right.e11 = LaurentSeries(0, {1.0, -x1 * x2 / a2sq});
  right.e12 = LaurentSeries::constant(-x1 * x1 * x2 / (a2sq * den));
  right.e21 = LaurentSeries(1, {x1 / den, x2});
  right.e22 = LaurentSeries(0, {1.0, x1 * x2 / den});
  const LoopMatrix g2 = lft * LoopMatrix::diag(LaurentSeries::constant(a2), LaurentSeries::constant(1.0 / a2)) * right;
  expect_code(ErrorCode::NotInImage, [&] { analyze_g2(g2, 2); });
}

TEST(RootSub, MakeDataValidation) {
  expect_code(ErrorCode::ParameterOnOrOutsideDisk, [] { make_data({1.0}, {}, {}); });
  expect_code(ErrorCode::ParameterOnOrOutsideDisk, [] { make_data({}, {0.2, {0.0, 1.5}}, {}); });
  expect_code(ErrorCode::InvalidArgument, [&] { make_data({}, {}, z + zi); });
  const auto d = make_data({}, {}, imaginary_chi({0.1}) + LaurentSeries::constant(cplx(0.0, 0.25)), 0.5);
  EXPECT_NEAR(d.chi0_im, 0.75, 1e-15);
  EXPECT_EQ(d.chi[0], cplx(0.0));
}

TEST(PartialRSF, TorusLoop) {
  const LaurentSeries chi = imaginary_chi({0.1});
  const auto g = LoopMatrix::diag(exp_trunc(chi, 32), exp_trunc(-chi, 32));
  const auto p = partial_rsf(g);
  EXPECT_LT(coeff_distance(p.g1, LoopMatrix::identity()), 1e-10);
  EXPECT_LT(coeff_distance(p.g2, LoopMatrix::identity()), 1e-10);
  EXPECT_LT((p.chi - chi).max_abs(), 1e-10);
  EXPECT_NEAR(p.chi0_im, 0.0, 1e-10);
  EXPECT_LT(p.reconstruction_defect, 1e-10);
}

TEST(PartialRSF, RoundTrip) {
  const auto d = make_data({0.3, {0.1, 0.2}}, {{-0.2, 0.3}}, imaginary_chi({0.2, {0.0, -0.1}}), 1.1);
  const auto g = synth_full(d);
  const auto p = partial_rsf(g);
  EXPECT_LT(p.reconstruction_defect, 1e-6);
  EXPECT_LT((p.chi - d.chi).max_abs(), 1e-6);
  EXPECT_NEAR(p.chi0_im, d.chi0_im, 1e-6);
  EXPECT_LT(sample_distance(p.g1, synth_g1(d.etas)), 1e-6);
  EXPECT_LT(sample_distance(p.g2, synth_g2(d.zetas)), 1e-6);
  EXPECT_LT(p.boundary_sup_l, 1.0);
  EXPECT_LT(p.boundary_sup_u, 1.0);
}

TEST(PartialRSF, BoundaryConditionFails) {
  const auto g = hermitian_star(synth_g2({0.9, 0.95}));
  expect_code(ErrorCode::BoundaryConditionFails, [&] { partial_rsf(g); });
}
