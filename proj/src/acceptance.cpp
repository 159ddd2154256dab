#include "loopfact/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "loopfact/birkhoff.hpp"
#include "loopfact/dets.hpp"
#include "loopfact/errors.hpp"
#include "loopfact/kernels.hpp"
#include "loopfact/rootsub.hpp"
#include "loopfact/toeplitz.hpp"

namespace loopfact {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  /// Uniform on the closed disk of radius r.
  cplx disk(double r) {
    const double rr = r * std::sqrt(uniform(0.0, 1.0));
    return std::polar(rr, uniform(-std::numbers::pi, std::numbers::pi));
  }
  std::vector<cplx> disks(int count, double r) {
    std::vector<cplx> v(static_cast<std::size_t>(count));
    for (auto& x : v) x = disk(r);
    return v;
  }
  LaurentSeries series(int lo, int hi, double r) {
    std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1));
    for (auto& x : c) x = disk(r);
    return LaurentSeries(lo, std::move(c));
  }
  LoopMatrix loop(int lo, int hi, double r) {
    LoopMatrix g;
    g.e11 = series(lo, hi, r);
    g.e12 = series(lo, hi, r);
    g.e21 = series(lo, hi, r);
    g.e22 = series(lo, hi, r);
    return g;
  }

 private:
  std::mt19937_64 eng_;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

// Runs body, turning an escaped exception into a failure with its message.
CriterionResult run(int id, const char* name, double budget,
                    const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.seconds = since(t0);
  if (r.seconds > budget) {
    r.pass = false;
    r.detail += "; runtime " + sci(r.seconds) + " s exceeds " + sci(budget) + " s";
  }
  return r;
}

// Draws shared by the determinant and a0^2 criteria. Every tenth draw has
// only eta_0, the next one only chi.
constexpr int kDetTrunc = 22;
constexpr int kDenseN = 32;

std::vector<RootSubgroupData> det_draws(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RootSubgroupData> out;
  for (int i = 0; i < 100; ++i) {
    if (i % 10 == 0) {
      out.push_back(make_data({rng.disk(0.7)}, {}, {}));
      continue;
    }
    std::vector<cplx> chi_c(static_cast<std::size_t>(rng.integer(i % 10 == 1 ? 1 : 0, 4)));
    for (std::size_t j = 0; j < chi_c.size(); ++j) chi_c[j] = rng.disk(0.2 / static_cast<double>(j + 1));
    const LaurentSeries chi = imaginary_chi(chi_c);
    if (i % 10 == 1) {
      out.push_back(make_data({}, {}, chi));
      continue;
    }
    const int ne = rng.integer(0, 3), nz = rng.integer(0, 3);
    out.push_back(make_data(rng.disks(ne, 0.7), rng.disks(nz, 0.7), chi, rng.uniform(-3.0, 3.0)));
  }
  return out;
}

Mat2 mat(cplx a, cplx b, cplx c, cplx d) { return (Mat2() << a, b, c, d).finished(); }

LoopMatrix family(cplx c0, cplx c1) {
  LoopMatrix g;
  g.e11 = LaurentSeries::monomial(-1);
  g.e21 = LaurentSeries(0, {c0, c1});
  g.e22 = LaurentSeries::monomial(1);
  return g;
}

double middle_distance(const BirkhoffFactors& f, cplx d11) {
  const cplx m = f.m0 * f.a0;
  return std::max(std::abs(m - d11), std::abs(1.0 / m - 1.0 / d11));
}

}  // namespace

CriterionResult criterion_products(std::uint64_t seed) {
  return run(1, "root subgroup product formulas", 10.0, [&](CriterionResult& r) {
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
      const auto etas = rng.disks(rng.integer(1, 7), 0.8);
      const auto zetas = rng.disks(rng.integer(1, 6), 0.8);
      double p1 = 1.0, p2 = 1.0;
      for (auto e : etas) p1 *= a_disk(e);
      for (auto z : zetas) p2 *= a_disk(z);
      const auto f1 = triangular_factorization(synth_g1(etas));
      const auto f2 = triangular_factorization(synth_g2(zetas));
      worst = std::max({worst, relative_error(f1.a0, p1), relative_error(f2.a0, 1.0 / p2)});
    }
    r.pass = worst <= 1e-9;
    r.detail = "500 draws, max relative error " + sci(worst) + " (tol 1e-9)";
  });
}

CriterionResult criterion_dets(std::uint64_t seed) {
  return run(2, "three-way determinant agreement", 30.0, [&](CriterionResult& r) {
    double worst = 0.0, worst_sharp = 0.0, worst_sw = 0.0;
    for (const auto& d : det_draws(seed)) {
      const LoopMatrix g = synth_full(d, kDetTrunc);
      const LoopMatrix gi = adjugate(g);
      for (bool shifted : {false, true}) {
        const double f = det_formula(d, shifted);
        const double op = det_AA(g, gi, shifted);
        const double dense = det_section_oracle(g, kDenseN, shifted);
        worst = std::max({worst, relative_error(op, f), relative_error(dense, f)});
        if (d.zetas.empty() && d.chi.is_zero() && d.etas.size() == 1) {
          const double expect = shifted ? 1.0 / (1.0 - std::norm(d.etas[0])) : 1.0;
          worst_sharp = std::max({worst_sharp, relative_error(f, expect), relative_error(op, expect),
                                  relative_error(dense, expect)});
        }
      }
      if (d.etas.empty() && d.zetas.empty() && !d.chi.is_zero()) {
        double s = 0.0;
        for (int j = 1; j <= d.chi.max_deg(); ++j) s += 2.0 * j * std::norm(d.chi[j]);
        const auto rep = szego_widom_check(d.chi, kDetTrunc);
        worst_sw = std::max({worst_sw, relative_error(rep.formula_value, std::exp(-s)),
                             relative_error(rep.operator_value, std::exp(-s)),
                             rep.relative_errors.at("operator")});
      }
    }
    r.pass = worst <= 1e-6 && worst_sharp <= 1e-6 && worst_sw <= 1e-6;
    r.detail = "100 draws, max relative error " + sci(worst) + ", eta_0-only cases " + sci(worst_sharp) +
               ", torus cases " + sci(worst_sw) + " (tol 1e-6)";
  });
}

CriterionResult criterion_a0(std::uint64_t seed) {
  return run(3, "a0^2 ratio identity", 30.0, [&](CriterionResult& r) {
    double worst = 0.0;
    for (const auto& d : det_draws(seed)) {
      const auto rep = a0_ratio_check(d, kDetTrunc);
      double zp = 1.0, ep = 1.0;
      for (auto z : d.zetas) zp *= 1.0 - std::norm(z);
      for (auto e : d.etas) ep *= 1.0 - std::norm(e);
      worst = std::max({worst, relative_error(rep.a0_sq_formula, zp / ep),
                        relative_error(rep.a0_sq_operator, zp / ep),
                        relative_error(rep.a0_sq_factorization, zp / ep)});
    }
    r.pass = worst <= 1e-6;
    r.detail = "100 draws, formula/operator/factorization max relative error " + sci(worst) + " (tol 1e-6)";
  });
}

CriterionResult criterion_lemma(std::uint64_t seed) {
  return run(4, "section invertibility criteria", 20.0, [&](CriterionResult& r) {
    Rng rng(seed);
    constexpr int N = 16;
    constexpr double threshold = 1e-8, band_lo = 1e-10, band_hi = 1e-6;
    int compared = 0, agree = 0, marginal = 0, singular_cases = 0;
    std::string first_bad;
    for (int n = 1; n <= 3; ++n) {
      for (int t = 0; t < 200; ++t) {
        std::vector<cplx> c = rng.disks(2 * n, 1.0);
        auto ck = [&](int k) -> cplx& { return c[static_cast<std::size_t>(k + n - 1)]; };
        // A quarter of the draws put A' on its singular set, a quarter A''.
        const int mode = t % 4;
        if (mode == 1 || mode == 2) {
          const int diag = mode == 1 ? 0 : 1;
          ck(diag) = 0.0;
          const auto lm = lemma_matrices(c, n);
          const Eigen::MatrixXcd& A = mode == 1 ? lm.A_prime : lm.A_dprime;
          Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
          ck(diag) = -es.eigenvalues()(rng.integer(0, n - 1));
        }
        LoopMatrix tri;
        tri.e11 = LaurentSeries::monomial(-n);
        tri.e21 = LaurentSeries(-n + 1, c);
        tri.e22 = LaurentSeries::monomial(n);
        const auto lm = lemma_matrices(triangular_coefficients(tri, n), n);
        for (bool shifted : {false, true}) {
          const double det = std::abs((shifted ? lm.A_dprime : lm.A_prime).determinant());
          if (det >= band_lo && det <= band_hi) {
            ++marginal;
            continue;
          }
          const bool predicted = det > band_hi;
          if (!predicted) ++singular_cases;
          const double smin = kernel_svd(tall_section(tri, N, shifted)).front();
          const bool observed = smin > threshold;
          ++compared;
          if (predicted == observed) {
            ++agree;
          } else if (first_bad.empty()) {
            first_bad = "n=" + std::to_string(n) + (shifted ? " shifted" : "") + " |det|=" + sci(det) +
                        " sigma_min=" + sci(smin);
          }
        }
      }
    }
    const int total = compared + marginal;
    const double marginal_frac = static_cast<double>(marginal) / total;
    r.pass = agree == compared && marginal_frac < 0.02;
    r.detail = std::to_string(agree) + "/" + std::to_string(compared) + " agree (" +
               std::to_string(singular_cases) + " singular), marginal " + std::to_string(marginal) + "/" +
               std::to_string(total);
    if (!first_bad.empty()) r.detail += "; first disagreement " + first_bad;
  });
}

CriterionResult criterion_strata(std::uint64_t seed) {
  return run(5, "four-case stratum table", 30.0, [&](CriterionResult& r) {
    const auto z = LaurentSeries::monomial(1), zi = LaurentSeries::monomial(-1);
    const auto one = LaurentSeries::constant(1.0);
    auto L = [](LaurentSeries a, LaurentSeries b, LaurentSeries c, LaurentSeries d) {
      LoopMatrix m;
      m.e11 = std::move(a);
      m.e12 = std::move(b);
      m.e21 = std::move(c);
      m.e22 = std::move(d);
      return m;
    };
    const LaurentSeries zero;
    std::ostringstream det;
    bool ok = true;
    double worst = 0.0;

    auto check = [&](const char* tag, cplx c0, cplx c1, WeylElement w, const LoopMatrix& l, cplx d11,
                     const LoopMatrix& u) {
      const auto f = birkhoff_factorization(family(c0, c1));
      const double dl = coeff_distance(f.l, l), du = coeff_distance(f.u, u), dm = middle_distance(f, d11);
      const double e = std::max({dl, du, dm});
      worst = std::max(worst, e);
      if (!(f.w == w) || e > 1e-10) {
        ok = false;
        det << tag << ": got " << f.w.label() << " with factor error " << sci(e) << "; ";
      }
    };

    // c0 = 2, c1 = 1: top stratum.
    {
      const cplx c0 = 2.0, c1 = 1.0;
      const LoopMatrix l = L(one - zi * (c0 / c1), zi * (1.0 / c0), LaurentSeries::constant(-c0 * c0 / c1), one);
      const LoopMatrix u = L(one, LaurentSeries::constant(1.0 / c1), z * (-c1 * c1 / c0), one - z * (c1 / c0));
      check("(2,1)", c0, c1, WeylElement::identity(), l, -c1 / c0, u);
      // With 1/c0 in the upper-right entry of u the product misses g.
      LoopMatrix u_lit = u;
      u_lit.e12 = LaurentSeries::constant(1.0 / c0);
      const LoopMatrix mid = LoopMatrix::diag(LaurentSeries::constant(-c1 / c0), LaurentSeries::constant(-c0 / c1));
      det << "literal u12 = 1/c0 leaves defect " << sci(coeff_distance(l * mid * u_lit, family(c0, c1)))
          << "; ";
    }
    // c1 = 0: r1, middle diag(c0, 1/c0). Checked at c0 = 1 and c0 = 3.
    for (cplx c0 : {cplx(1.0), cplx(3.0)}) {
      const LoopMatrix l = L(one, zi * (1.0 / c0), zero, one);
      const LoopMatrix u = L(one, z * (1.0 / c0), zero, one);
      check(c0 == 1.0 ? "(1,0)" : "(3,0)", c0, 0.0, WeylElement::r1(), l, c0, u);
    }
    // c0 = 0: r0, middle diag(c1, 1/c1). Checked at c1 = 1 and c1 = 3.
    for (cplx c1 : {cplx(1.0), cplx(3.0)}) {
      const LoopMatrix l = L(one, LaurentSeries::monomial(-2, 1.0 / c1), zero, one);
      const LoopMatrix u = L(one, LaurentSeries::constant(1.0 / c1), zero, one);
      check(c1 == 1.0 ? "(0,1)" : "(0,3)", 0.0, c1, WeylElement::r0(), l, c1, u);
    }
    check("(0,0)", 0.0, 0.0, WeylElement{-1, false}, LoopMatrix::identity(), 1.0, LoopMatrix::identity());

    // Random points of each case land in the predicted stratum.
    Rng rng(seed);
    int placed = 0, total = 0;
    for (int t = 0; t < 30; ++t) {
      const cplx a = rng.disk(2.0) + 0.1, b = rng.disk(2.0) + 0.1;
      const std::pair<cplx, cplx> cases[3] = {{a, b}, {a, 0.0}, {0.0, b}};
      const WeylElement expect[3] = {WeylElement::identity(), WeylElement::r1(), WeylElement::r0()};
      for (int k = 0; k < 3; ++k) {
        ++total;
        if (stratum(family(cases[k].first, cases[k].second)) == expect[k]) ++placed;
      }
    }
    if (placed != total) ok = false;
    det << "random strata " << placed << "/" << total << "; display max error " << sci(worst)
        << " (tol 1e-10)";
    r.pass = ok;
    r.detail = det.str();
  });
}

CriterionResult criterion_dichotomy(std::uint64_t) {
  return run(6, "n = 2 dichotomy", 30.0, [&](CriterionResult& r) {
    int good = 0, good_ok = 0, bad = 0, bad_ok = 0, skipped = 0;
    std::string first_bad;
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double x1 = -1.5 + 0.15 * i, x2 = -1.5 + 0.15 * j;
        const double den = 1.0 - x2 * x2, num = den * den - x1 * x1;
        if (!((num > 0 && den > 0) || (num < 0 && den < 0))) {
          ++skipped;
          continue;
        }
        const double a2sq = num / den, a2 = std::sqrt(a2sq);
        LoopMatrix lft = LoopMatrix::identity();
        lft.e12 = LaurentSeries(-2, {x2, x1});
        LoopMatrix right;
        right.e11 = LaurentSeries(0, {1.0, -x1 * x2 / a2sq});
        right.e12 = LaurentSeries::constant(-x1 * x1 * x2 / (a2sq * den));
        right.e21 = LaurentSeries(1, {x1 / den, x2});
        right.e22 = LaurentSeries(0, {1.0, x1 * x2 / den});
        const LoopMatrix g2 =
            lft * LoopMatrix::diag(LaurentSeries::constant(a2), LaurentSeries::constant(1.0 / a2)) * right;
        const bool positive = num > 0;
        (positive ? good : bad)++;
        std::string outcome;
        try {
          const auto zetas = analyze_g2(g2, 2);
          if (positive && coeff_distance(synth_g2(zetas), g2) <= 1e-8 && std::abs(zetas[1] - x2) <= 1e-10)
            ++good_ok;
          else
            outcome = "factored";
        } catch (const LoopError& e) {
          if (!positive && e.code() == ErrorCode::NotInImage)
            ++bad_ok;
          else
            outcome = error_name(e.code());
        }
        if (!outcome.empty() && first_bad.empty())
          first_bad = "(" + std::to_string(x1) + ", " + std::to_string(x2) + "): " + outcome;
      }
    r.pass = good_ok == good && bad_ok == bad && good > 0 && bad > 0;
    r.detail = "factorable " + std::to_string(good_ok) + "/" + std::to_string(good) + ", NotInImage " +
               std::to_string(bad_ok) + "/" + std::to_string(bad) + ", skipped " + std::to_string(skipped);
    if (!first_bad.empty()) r.detail += "; first mismatch " + first_bad;
  });
}

CriterionResult criterion_counterexample(std::uint64_t seed) {
  return run(7, "identity-component loop outside the top stratum", 60.0, [&](CriterionResult& r) {
    const LoopMatrix g = counterexample_loop(32);
    const auto mem = membership(g, Group::SU11, kDefaultSamples, 1e-6);
    const int wind = winding_component(g);
    const double res = tricondition_residual(32), res_pert = tricondition_residual(32, 1.0);
    const double smin = kernel_svd(tall_section(g, 64, false)).front();

    Rng rng(seed);
    double control_min = 1e300;
    for (int t = 0; t < 50; ++t) {
      std::vector<cplx> chi_c = rng.disks(rng.integer(0, 2), 0.3);
      const auto d = make_data(rng.disks(rng.integer(0, 3), 0.5), rng.disks(rng.integer(0, 3), 0.5),
                               imaginary_chi(chi_c), rng.uniform(-3.0, 3.0));
      const LoopMatrix c = synth_full(d, 24);
      if (winding_component(c) != 0) fail(ErrorCode::NotIdentityComponent, "control loop winds");
      control_min = std::min(control_min, kernel_svd(tall_section(c, 64, false)).front());
    }
    r.pass = mem.member && wind == 0 && res < 1e-8 && smin < 1e-4 && control_min > 1e-2;
    r.detail = "SU11 defect " + sci(mem.defect) + ", winding " + std::to_string(wind) + ", residual " +
               sci(res) + " (perturbed " + sci(res_pert) + "), sigma_min " + sci(smin) +
               ", control min " + sci(control_min);
  });
}

CriterionResult criterion_partial_rsf(std::uint64_t seed) {
  return run(8, "partial factorization roundtrip", 120.0, [&](CriterionResult& r) {
    Rng rng(seed);
    double worst_rec = 0.0, worst_chi = 0.0;
    for (int t = 0; t < 100; ++t) {
      std::vector<cplx> chi_c = rng.disks(rng.integer(0, 3), 0.6);
      const auto d = make_data(rng.disks(rng.integer(0, 3), 0.6), rng.disks(rng.integer(0, 3), 0.6),
                               imaginary_chi(chi_c), rng.uniform(-3.0, 3.0));
      const LoopMatrix g = synth_full(d, 32);
      const auto p = partial_rsf(g, 32, 512);
      worst_rec = std::max(worst_rec, p.reconstruction_defect);
      double e = std::abs(std::remainder(p.chi0_im - d.chi0_im, 2.0 * std::numbers::pi));
      for (int k = -32; k <= 32; ++k) e = std::max(e, std::abs(p.chi[k] - d.chi[k]));
      worst_chi = std::max(worst_chi, e);
    }
    std::string adversarial = "no error";
    bool adv_ok = false;
    try {
      partial_rsf(hermitian_star(synth_g2({0.9, 0.95})), 32, 512);
    } catch (const LoopError& e) {
      adversarial = error_name(e.code());
      adv_ok = e.code() == ErrorCode::BoundaryConditionFails;
    }
    r.pass = worst_rec <= 1e-6 && worst_chi <= 1e-6 && adv_ok;
    r.detail = "100 instances, reconstruction " + sci(worst_rec) + ", chi " + sci(worst_chi) +
               " (tol 1e-6); adversarial instance: " + adversarial;
  });
}

CriterionResult criterion_structural(std::uint64_t seed) {
  return run(9, "structural properties", 30.0, [&](CriterionResult& r) {
    Rng rng(seed);
    constexpr int cases = 1000;
    std::ostringstream det;
    bool ok = true;
    auto report = [&](const char* suite, double worst, double tol) {
      if (!(worst <= tol)) ok = false;
      det << suite << " " << sci(worst) << "; ";
    };

    double inv = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int lo = rng.integer(-5, 2);
      const LaurentSeries f = rng.series(lo, lo + rng.integer(0, 6), 1.0);
      const LoopMatrix g = rng.loop(lo, lo + 3, 1.0);
      inv = std::max({inv, (star(star(f)) - f).max_abs(), coeff_distance(sigma(sigma(g)), g),
                      coeff_distance(theta(theta(g)), g),
                      coeff_distance(hermitian_star(hermitian_star(g)), g)});
    }
    report("involutions", inv, 0.0);

    double hardy = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int lo = rng.integer(-6, 3);
      const LaurentSeries f = rng.series(lo, lo + rng.integer(0, 8), 1.0);
      const auto p = hardy_project(f, HardyPart::Plus), sm = hardy_project(f, HardyPart::StrictMinus);
      const auto m = hardy_project(f, HardyPart::Minus);
      hardy = std::max({hardy, (p + sm - f).max_abs(), (hardy_project(p, HardyPart::Plus) - p).max_abs(),
                        (m - sm - LaurentSeries::constant(f[0])).max_abs(),
                        hardy_project(p, HardyPart::StrictMinus).max_abs(),
                        hardy_project(sm, HardyPart::Plus).max_abs()});
    }
    report("Hardy partition", hardy, 0.0);

    double group = 0.0, weyl_bad = 0.0;
    for (int t = 0; t < cases; ++t) {
      const auto d = [&] {
        return make_data(rng.disks(rng.integer(0, 2), 0.7), rng.disks(rng.integer(0, 2), 0.7), {});
      };
      const LoopMatrix a = synth_full(d()), b = synth_full(d()), c = synth_full(d());
      const double scale = std::max({1.0, a.max_abs() * b.max_abs() * c.max_abs()});
      group = std::max({group, coeff_distance((a * b) * c, a * (b * c)) / scale,
                        coeff_distance(inverse(a) * a, LoopMatrix::identity()) / std::max(1.0, a.max_abs() * a.max_abs()),
                        1.0 - static_cast<double>(membership(a * b, Group::SU11).member)});
      const WeylElement u{rng.integer(-3, 3), rng.integer(0, 1) == 1};
      const WeylElement v{rng.integer(-3, 3), rng.integer(0, 1) == 1};
      const WeylElement w{rng.integer(-3, 3), rng.integer(0, 1) == 1};
      const LoopMatrix prod = u.representative() * v.representative();
      const LoopMatrix rep = (u * v).representative();
      const double sign_err = std::min(coeff_distance(prod, rep), coeff_distance(prod, rep * cplx(-1.0)));
      const bool laws = (u * v) * w == u * (v * w) && u * u.inverse() == WeylElement::identity() &&
                        coeff_distance(u.representative() * u.representative_inverse(), LoopMatrix::identity()) == 0.0;
      weyl_bad = std::max({weyl_bad, sign_err, laws ? 0.0 : 1.0});
    }
    report("group laws", group, 1e-12);
    report("Weyl group", weyl_bad, 0.0);

    double polar = 0.0, iwa = 0.0;
    int wind_bad = 0;
    for (int t = 0; t < cases; ++t) {
      // Degree span at most 12.
      const auto d = make_data(rng.disks(rng.integer(0, 3), 0.6), rng.disks(rng.integer(0, 2), 0.6), {},
                               rng.uniform(-3.0, 3.0));
      const LoopMatrix g = synth_full(d);
      polar = std::max(polar, polar_su11(g, kDefaultSamples, 256).residual);
      const int k = rng.integer(-3, 3);
      const LoopMatrix shift = LoopMatrix::diag(LaurentSeries::monomial(k), LaurentSeries::monomial(-k));
      if (winding_component(shift * g) != k + winding_component(g)) ++wind_bad;
      // M = n a g0 with n upper unipotent, a > 0 and g0 in SU(1,1).
      const cplx zeta = rng.disk(0.9), x = rng.disk(2.0), ph = std::polar(1.0, rng.uniform(-3.0, 3.0));
      const Mat2 g0 = q_factor(zeta) * mat(ph, 0.0, 0.0, std::conj(ph));
      const double a = std::exp(rng.uniform(-1.5, 1.5));
      const Mat2 M = mat(1.0, x, 0.0, 1.0) * mat(a, 0.0, 0.0, 1.0 / a) * g0;
      const auto tri = iwasawa_su11(M);
      const Mat2 back = tri.n_plus * mat(tri.a_pos, 0.0, 0.0, 1.0 / tri.a_pos) * tri.g0;
      iwa = std::max({iwa, (back - M).cwiseAbs().maxCoeff(), std::abs(tri.a_pos - a) / a,
                      (tri.g0 - g0).cwiseAbs().maxCoeff()});
    }
    report("polar", polar, 1e-8);
    report("winding additivity failures", wind_bad, 0.0);
    report("Iwasawa", iwa, 1e-10);

    double kern = 0.0;
    if (kernels::avx2::available()) {
      for (int t = 0; t < cases; ++t) {
        const std::size_t na = static_cast<std::size_t>(rng.integer(1, 40));
        const std::size_t nb = static_cast<std::size_t>(rng.integer(1, 40));
        std::vector<cplx> a(na), b(nb), o1(na + nb - 1), o2(na + nb - 1);
        for (auto& v : a) v = rng.disk(1.0);
        for (auto& v : b) v = rng.disk(1.0);
        kernels::scalar::convolve(a.data(), na, b.data(), nb, o1.data());
        kernels::avx2::convolve(a.data(), na, b.data(), nb, o2.data());
        for (std::size_t k = 0; k < o1.size(); ++k) kern = std::max(kern, std::abs(o1[k] - o2[k]));
        const std::size_t m = static_cast<std::size_t>(rng.integer(1, 64));
        std::vector<cplx> e1(m), e2(m);
        const int md = rng.integer(-20, 20);
        kernels::scalar::eval_circle(a.data(), na, md, m, e1.data());
        kernels::avx2::eval_circle(a.data(), na, md, m, e2.data());
        for (std::size_t k = 0; k < m; ++k) kern = std::max(kern, std::abs(e1[k] - e2[k]));
      }
      report("scalar/AVX2 kernels", kern, 1e-12);
    } else {
      det << "scalar/AVX2 kernels skipped (no AVX2); ";
    }
    det << std::to_string(cases) << " cases per suite";
    r.pass = ok;
    r.detail = det.str();
  });
}

std::vector<std::string> suite_names() {
  return {"products", "dets",      "a0",          "lemma",      "strata",
          "dichotomy", "counterexample", "partial-rsf", "structural", "all"};
}

std::vector<CriterionResult> run_suite(const std::string& name, std::uint64_t seed) {
  using Fn = CriterionResult (*)(std::uint64_t);
  const std::pair<const char*, Fn> table[] = {
      {"products", criterion_products},   {"dets", criterion_dets},
      {"a0", criterion_a0},               {"lemma", criterion_lemma},
      {"strata", criterion_strata},       {"dichotomy", criterion_dichotomy},
      {"counterexample", criterion_counterexample}, {"partial-rsf", criterion_partial_rsf},
      {"structural", criterion_structural}};
  std::vector<CriterionResult> out;
  for (const auto& [n, fn] : table)
    if (name == "all" || name == n) out.push_back(fn(seed));
  if (out.empty()) fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
     << ") [" << std::fixed << std::setprecision(2) << r.seconds << " s]";
  return os.str();
}

}  // namespace loopfact
