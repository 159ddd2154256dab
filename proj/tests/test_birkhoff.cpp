#include <gtest/gtest.h>

#include "loopfact/birkhoff.hpp"
#include "loopfact/rootsub.hpp"
#include "test_util.hpp"

using namespace loopfact;
using testutil::expect_code;

namespace {

const LaurentSeries z = LaurentSeries::monomial(1);
const LaurentSeries zi = LaurentSeries::monomial(-1);
const LaurentSeries one = LaurentSeries::constant(1.0);

LoopMatrix family(cplx c0, cplx c1) {
  LoopMatrix g = LoopMatrix::diag(zi, z);
  g.e21 = LaurentSeries(0, {c0, c1});
  return g;
}

LoopMatrix n2_example(double x1, double x2) {
  const double den = 1.0 - x2 * x2, a2sq = (den * den - x1 * x1) / den, a2 = std::sqrt(a2sq);
  LoopMatrix lft = LoopMatrix::identity();
  lft.e12 = LaurentSeries(-2, {x2, x1});
  LoopMatrix right;
  right.e11 = LaurentSeries(0, {1.0, -x1 * x2 / a2sq});
  right.e12 = LaurentSeries::constant(-x1 * x1 * x2 / (a2sq * den));
  right.e21 = LaurentSeries(1, {x1 / den, x2});
  right.e22 = LaurentSeries(0, {1.0, x1 * x2 / den});
  return lft * LoopMatrix::diag(LaurentSeries::constant(a2), LaurentSeries::constant(1.0 / a2)) * right;
}

}  // namespace

TEST(Weyl, Representatives) {
  EXPECT_EQ(coeff_distance(WeylElement::identity().representative(), LoopMatrix::identity()), 0.0);
  EXPECT_EQ(coeff_distance((WeylElement{-1, false}).representative(), LoopMatrix::diag(zi, z)), 0.0);
  const LoopMatrix r1 = WeylElement::r1().representative();
  EXPECT_EQ(r1.e12, -one);
  EXPECT_EQ(r1.e21, one);
  const LoopMatrix r0 = WeylElement::r0().representative();
  EXPECT_EQ(r0.e12, -zi);
  EXPECT_EQ(r0.e21, z);
  EXPECT_TRUE(WeylElement::r0() * WeylElement::r1() == (WeylElement{-1, false}));
  EXPECT_EQ(WeylElement::r0().label(), "r0");
  EXPECT_EQ((WeylElement{2, true}).label(), "(n=2,flip=true)");
}

TEST(Weyl, GroupLaw) {
  for (int n = -3; n <= 3; ++n)
    for (bool f : {false, true}) {
      const WeylElement w{n, f};
      EXPECT_TRUE(w * w.inverse() == WeylElement::identity());
      EXPECT_LT(coeff_distance(w.representative() * w.representative_inverse(), LoopMatrix::identity()), 1e-15);
      for (int m = -2; m <= 2; ++m)
        for (bool h : {false, true}) {
          const WeylElement v{m, h};
          const LoopMatrix p = w.representative() * v.representative();
          const LoopMatrix q = (w * v).representative();
          // R^2 = -1, so representatives multiply up to sign.
          EXPECT_LT(std::min(coeff_distance(p, q), coeff_distance(p, q * cplx(-1.0))), 1e-15);
        }
    }
}

TEST(Triangular, Identity) {
  const auto f = triangular_factorization(LoopMatrix::identity());
  EXPECT_LT(coeff_distance(f.l, LoopMatrix::identity()), 1e-14);
  EXPECT_LT(coeff_distance(f.u, LoopMatrix::identity()), 1e-14);
  EXPECT_LT(std::abs(f.m0 - 1.0), 1e-14);
  EXPECT_NEAR(f.a0, 1.0, 1e-14);
}

TEST(Triangular, TopCaseOfFamily) {
  const auto f = triangular_factorization(family(2.0, 1.0));
  EXPECT_NEAR(f.a0, 0.5, 1e-12);
  EXPECT_LT(std::abs(f.m0 - (-1.0)), 1e-12);
  EXPECT_LT(std::abs(f.u.e12[0] - 1.0), 1e-12);  // 1/c1
  EXPECT_LT(f.reconstruction_defect, 1e-12);
}

TEST(Triangular, N2ExampleMiddleScalar) {
  const double x1 = 0.3, x2 = 0.4, den = 1.0 - x2 * x2;
  const double a2sq = (den * den - x1 * x1) / den;
  const auto f = triangular_factorization(n2_example(x1, x2));
  EXPECT_NEAR(f.a0 * f.a0, a2sq, 1e-12);
  EXPECT_LT(std::abs(f.m0 - 1.0), 1e-12);
}

TEST(Triangular, DegenerateCasesRejected) {
  expect_code(ErrorCode::NotInTopStratum, [] { triangular_factorization(family(0.0, 0.0)); });
  expect_code(ErrorCode::NotInTopStratum, [] { triangular_factorization(family(1.0, 0.0)); });
}

TEST(Birkhoff, FourCases) {
  EXPECT_TRUE(stratum(family(2.0, 1.0)) == WeylElement::identity());

  const auto r1 = birkhoff_factorization(family(3.0, 0.0));
  EXPECT_TRUE(r1.w == WeylElement::r1());
  EXPECT_NEAR(r1.a0, 3.0, 1e-12);
  EXPECT_LT(std::abs(r1.l.e12[-1] - 1.0 / 3.0), 1e-12);
  EXPECT_LT(r1.reconstruction_defect, 1e-12);

  const auto r0 = birkhoff_factorization(family(0.0, 3.0));
  EXPECT_TRUE(r0.w == WeylElement::r0());
  EXPECT_NEAR(r0.a0, 3.0, 1e-12);
  EXPECT_LT(std::abs(r0.l.e12[-2] - 1.0 / 3.0), 1e-12);
  EXPECT_LT(std::abs(r0.u.e12[0] - 1.0 / 3.0), 1e-12);

  const auto d = birkhoff_factorization(family(0.0, 0.0));
  EXPECT_TRUE(d.w == (WeylElement{-1, false}));
  EXPECT_EQ(d.w.label(), "r0r1");
  EXPECT_LT(coeff_distance(d.l, LoopMatrix::identity()), 1e-12);
  EXPECT_LT(coeff_distance(d.u, LoopMatrix::identity()), 1e-12);
  EXPECT_NEAR(d.a0, 1.0, 1e-12);
}

TEST(Birkhoff, ExampleLoopsInTopStratum) {
  for (cplx zeta : {cplx(0.5), cplx(0.3, 0.4), cplx(-0.9)})
    for (int n = 1; n <= 3; ++n) {
      LoopMatrix g;
      const double a = a_disk(zeta);
      g.e11 = LaurentSeries::constant(a);
      g.e12 = LaurentSeries::monomial(-n, a * zeta);
      g.e21 = LaurentSeries::monomial(n, a * std::conj(zeta));
      g.e22 = LaurentSeries::constant(a);
      EXPECT_TRUE(stratum(g) == WeylElement::identity());
    }
}

TEST(Birkhoff, TranslationShift) {
  LoopMatrix lo = LoopMatrix::identity();
  lo.e21 = zi * cplx(0.5);
  EXPECT_TRUE(stratum(lo) == WeylElement::identity());
  for (int k = 1; k <= 3; ++k) {
    const LoopMatrix shift = LoopMatrix::diag(LaurentSeries::monomial(k), LaurentSeries::monomial(-k));
    EXPECT_TRUE(stratum(lo * shift) == (WeylElement{k, false})) << k;
    EXPECT_TRUE(stratum(family(0.0, 0.0) * shift) == (WeylElement{k - 1, false})) << k;
  }
}

TEST(Birkhoff, NonIdentityComponentWitness) {
  // c0 != 0, c1 = 0: stratum r1, and g11 = 1/z winds once negatively. The
  // loop is not SU(1,1)-valued, so the index is read off g11 directly.
  const LoopMatrix g = family(1.0, 0.0);
  EXPECT_TRUE(stratum(g) == WeylElement::r1());
  EXPECT_EQ(winding_number(eval_circle(g.e11, 256)), -1);
  expect_code(ErrorCode::NotSU11, [&] { winding_component(g); });
}

TEST(Birkhoff, UniquenessOnRefactoring) {
  testutil::Gen gen(17);
  for (int t = 0; t < 20; ++t) {
    const auto g = synth_full(gen.data(3, 0.7, 2, 0.3), 24);
    const auto f = triangular_factorization(g);
    const auto f2 = triangular_factorization(f.product());
    EXPECT_TRUE(f2.w == f.w);
    EXPECT_NEAR(f2.a0, f.a0, 1e-9);
    EXPECT_LT(std::abs(f2.m0 - f.m0), 1e-9);
    EXPECT_LT(sample_distance(f.product(), g), 1e-8);
  }
}

TEST(Counterexample, Loop) {
  const auto g = counterexample_loop(32);
  EXPECT_LE(membership(g, Group::SU11, 256, 1e-8).defect, 1e-8);
  EXPECT_EQ(winding_component(g), 0);
  // Truncation oracle: 32 and 48 agree to far below the membership tolerance.
  EXPECT_LT(coeff_distance(g, counterexample_loop(48)), 1e-8);
}

TEST(Counterexample, TriconditionResidual) {
  const double r16 = tricondition_residual(16), r32 = tricondition_residual(32);
  EXPECT_LT(r32, 1e-8);
  EXPECT_LT(r32, r16);
  EXPECT_GT(tricondition_residual(32, 1.0), 0.1);
}
