#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "loopfact/acceptance.hpp"
#include "loopfact/birkhoff.hpp"
#include "loopfact/dets.hpp"
#include "loopfact/errors.hpp"
#include "loopfact/json_io.hpp"
#include "loopfact/rootsub.hpp"
#include "loopfact/toeplitz.hpp"

using namespace loopfact;

namespace {

struct CommandConfig {
  std::string in, out;
  int trunc = kDefaultTrunc;
  int samples = kDefaultSamples;
  double tol = 1e-8;
  std::uint64_t seed = 20240611;
};

// Accepts 0.5, -2, 0.3i, -i, 0.1+0.2i, 1e-3-4e-2i.
cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += ch;
  auto bad = [&]() -> cplx { fail(ErrorCode::InvalidArgument, "cannot parse complex number '" + raw + "'"); };
  auto num = [&](const std::string& t, double unit) {
    if (t.empty() || t == "+") return unit;
    if (t == "-") return -unit;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      bad();
    }
    if (pos != t.size()) bad();
    return v;
  };
  if (s.empty()) bad();
  if (s.back() != 'i') return {num(s, 0.0), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, num(body, 1.0)};
  return {num(body.substr(0, split), 0.0), num(body.substr(split), 1.0)};
}

std::vector<cplx> parse_list(const std::vector<std::string>& items) {
  std::vector<cplx> v;
  for (const auto& s : items) v.push_back(parse_complex(s));
  return v;
}

std::string fmt(cplx c) {
  std::ostringstream os;
  os << std::setprecision(12) << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

void emit(const CommandConfig& cfg, const json& j) {
  if (cfg.out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(cfg.out, j);
}

LoopMatrix read_loop(const CommandConfig& cfg) {
  if (cfg.in.empty()) fail(ErrorCode::InvalidArgument, "--in is required");
  return loop_from_json(read_json_file(cfg.in));
}

void require_defect(double defect, double tol, const char* what) {
  if (defect > tol) {
    std::ostringstream os;
    os << what << " " << defect << " exceeds tolerance " << tol;
    fail(ErrorCode::NumericalBreakdown, os.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorizations of loops in SU(1,1)"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto common = [&](CLI::App* sub, bool with_in) {
    if (with_in) sub->add_option("--in", cfg.in, "input JSON file")->required();
    sub->add_option("--out", cfg.out, "output JSON file (stdout when omitted)");
  };
  auto knobs = [&](CLI::App* sub) {
    sub->add_option("--trunc", cfg.trunc, "Fourier truncation")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "samples on the circle")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "acceptance tolerance")->capture_default_str();
  };

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a loop from root subgroup data");
  std::vector<std::string> etas_s, zetas_s, chi_s, family_s;
  std::string kind = "full", data_path;
  double chi0 = 0.0;
  synth->add_option("--etas", etas_s, "eta_0, eta_1, ...")->delimiter(',');
  synth->add_option("--zetas", zetas_s, "zeta_1, zeta_2, ...")->delimiter(',');
  synth->add_option("--chi", chi_s, "coefficients of z^1, z^2, ... of chi")->delimiter(',');
  synth->add_option("--chi0", chi0, "imaginary zero mode of chi");
  synth->add_option("--data", data_path, "root subgroup data JSON (instead of the list flags)");
  synth->add_option("--kind", kind, "full, g1 or g2")->check(CLI::IsMember({"full", "g1", "g2"}))->capture_default_str();
  synth->add_option("--family", family_s, "c0,c1: the loop [[1/z, 0], [c0 + c1 z, z]]")->delimiter(',')->expected(2);
  common(synth, false);
  knobs(synth);

  // factor
  auto* factor = app.add_subcommand("factor", "triangular or Birkhoff factorization");
  std::string mode = "triangular";
  factor->add_option("--mode", mode, "triangular or birkhoff")
      ->check(CLI::IsMember({"triangular", "birkhoff"}))
      ->capture_default_str();
  common(factor, true);
  knobs(factor);

  // stratum
  auto* strat = app.add_subcommand("stratum", "Birkhoff stratum of a loop");
  std::string dump_path;
  int section_n = 16;
  bool shifted = false;
  strat->add_option("--dump-section", dump_path, "also write the finite Toeplitz section");
  strat->add_option("--section-n", section_n, "section truncation for --dump-section")->capture_default_str();
  strat->add_flag("--shifted", shifted, "dump the shifted section");
  common(strat, true);
  knobs(strat);

  // det
  auto* det = app.add_subcommand("det", "determinant formulas for root subgroup data");
  common(det, true);
  knobs(det);

  // polar
  auto* polar = app.add_subcommand("polar", "pointwise polar decomposition");
  common(polar, true);
  knobs(polar);

  // partial-rsf
  auto* prsf = app.add_subcommand("partial-rsf", "partial root subgroup factorization");
  common(prsf, true);
  knobs(prsf);

  // counterexample
  auto* cex = app.add_subcommand("counterexample", "identity-component loop without triangular factorization");
  int cex_n = 64;
  cex->add_option("--section-n", cex_n, "section truncation for the singular value")->capture_default_str();
  common(cex, false);
  knobs(cex);

  // verify
  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()))->capture_default_str();
  verify->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*synth) {
      LoopMatrix g;
      if (!family_s.empty()) {
        g.e11 = LaurentSeries::monomial(-1);
        g.e21 = LaurentSeries(0, {parse_complex(family_s[0]), parse_complex(family_s[1])});
        g.e22 = LaurentSeries::monomial(1);
      } else {
        RootSubgroupData d = data_path.empty()
                                 ? make_data(parse_list(etas_s), parse_list(zetas_s),
                                             imaginary_chi(parse_list(chi_s)), chi0)
                                 : data_from_json(read_json_file(data_path));
        if (kind == "g1")
          g = synth_g1(d.etas);
        else if (kind == "g2")
          g = synth_g2(d.zetas);
        else
          g = synth_full(d, cfg.trunc);
      }
      emit(cfg, to_json(g));
      return 0;
    }
    if (*factor) {
      const LoopMatrix g = read_loop(cfg);
      const auto f = mode == "triangular" ? triangular_factorization(g) : birkhoff_factorization(g);
      require_defect(f.reconstruction_defect, cfg.tol, "reconstruction defect");
      if (!cfg.out.empty()) write_json_file(cfg.out, to_json(f));
      std::cout << "w = " << f.w.label() << "\nm0 = " << fmt(f.m0) << "\na0 = " << std::setprecision(15)
                << f.a0 << "\nsigma ratio = " << f.conditioning << "\nresidual = " << f.residual
                << "\nreconstruction defect = " << f.reconstruction_defect << "\n";
      return 0;
    }
    if (*strat) {
      const LoopMatrix g = read_loop(cfg);
      const auto f = birkhoff_factorization(g);
      if (!dump_path.empty()) write_json_file(dump_path, to_json(section(g, section_n, shifted)));
      if (!cfg.out.empty()) write_json_file(cfg.out, json{{"w", to_json(f.w)}, {"label", f.w.label()}});
      std::cout << f.w.label() << "\n";
      return 0;
    }
    if (*det) {
      const auto d = data_from_json(read_json_file(cfg.in));
      const auto rep = a0_ratio_check(d, cfg.trunc);
      if (!cfg.out.empty()) write_json_file(cfg.out, to_json(rep));
      std::cout << std::setprecision(15) << "det(A A) formula = " << rep.formula_value
                << "\ndet(A A) operator = " << rep.operator_value << "\ndet(A1 A1) formula = "
                << rep.shifted_formula << "\ndet(A1 A1) operator = " << rep.shifted_operator
                << "\na0^2 formula = " << rep.a0_sq_formula << "\na0^2 operator = " << rep.a0_sq_operator
                << "\na0^2 factorization = " << rep.a0_sq_factorization
                << "\nmax relative error = " << rep.max_relative_error() << "\n";
      return 0;
    }
    if (*polar) {
      const auto p = polar_su11(read_loop(cfg), cfg.samples, cfg.trunc);
      require_defect(p.residual, cfg.tol, "polar residual");
      emit(cfg, to_json(p));
      return 0;
    }
    if (*prsf) {
      const auto g = read_loop(cfg);
      // partial_rsf needs more samples than 2 * trunc; the CLI default of 256 is raised to 512.
      const int samples = std::max(cfg.samples, 512);
      const auto p = partial_rsf(g, cfg.trunc, samples);
      require_defect(p.reconstruction_defect, cfg.tol, "reconstruction defect");
      emit(cfg, to_json(p));
      return 0;
    }
    if (*cex) {
      const LoopMatrix g = counterexample_loop(cfg.trunc);
      const auto mem = membership(g, Group::SU11, cfg.samples, std::max(cfg.tol, 1e-6));
      const double smin = kernel_svd(tall_section(g, cex_n, false)).front();
      if (!cfg.out.empty()) write_json_file(cfg.out, to_json(g));
      std::cout << std::setprecision(6) << "SU11 defect = " << mem.defect << (mem.member ? "" : " (not a member)")
                << "\nwinding = " << winding_component(g, cfg.samples)
                << "\ntricondition residual = " << tricondition_residual(cfg.trunc)
                << "\nperturbed residual = " << tricondition_residual(cfg.trunc, 1.0)
                << "\nsigma_min(N = " << cex_n << ") = " << smin << "\n";
      return 0;
    }
    if (*verify) {
      const auto results = run_suite(suite, cfg.seed);
      const CriterionResult* first_fail = nullptr;
      for (const auto& r : results) {
        std::cout << format_result(r) << std::endl;
        if (!r.pass && !first_fail) first_fail = &r;
      }
      if (first_fail) {
        std::cerr << "first failure: criterion " << first_fail->id << ": " << first_fail->detail << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const LoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}
