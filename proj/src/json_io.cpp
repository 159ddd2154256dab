#include "loopfact/json_io.hpp"

#include <fstream>
#include <sstream>

#include "loopfact/errors.hpp"

namespace loopfact {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidArgument, "malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

json complex_list(const std::vector<cplx>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

std::vector<cplx> complex_list_from(const json& j) {
  if (!j.is_array()) bad("expected a list of [re, im] pairs");
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

}  // namespace

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("complex numbers are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const LaurentSeries& f) {
  return json{{"min_deg", f.min_deg()}, {"coeffs", complex_list(f.coeffs())}};
}

LaurentSeries laurent_from_json(const json& j) {
  const auto& md = field(j, "min_deg");
  if (!md.is_number_integer()) bad("min_deg must be an integer");
  return LaurentSeries(md.get<int>(), complex_list_from(field(j, "coeffs")));
}

json to_json(const LoopMatrix& g) {
  json j{{"e11", to_json(g.e11)}, {"e12", to_json(g.e12)}, {"e21", to_json(g.e21)}, {"e22", to_json(g.e22)}};
  j["group_hint"] = g.group_hint ? json(group_name(*g.group_hint)) : json(nullptr);
  return j;
}

LoopMatrix loop_from_json(const json& j) {
  LoopMatrix g;
  g.e11 = laurent_from_json(field(j, "e11"));
  g.e12 = laurent_from_json(field(j, "e12"));
  g.e21 = laurent_from_json(field(j, "e21"));
  g.e22 = laurent_from_json(field(j, "e22"));
  if (j.contains("group_hint") && !j["group_hint"].is_null()) {
    if (!j["group_hint"].is_string()) bad("group_hint must be a string or null");
    g.group_hint = parse_group(j["group_hint"].get<std::string>());
    if (!g.group_hint) bad("group_hint must be SU11, SU2 or SL2C");
  }
  return g;
}

json to_json(const WeylElement& w) { return json{{"n", w.n}, {"flip", w.flip}}; }

WeylElement weyl_from_json(const json& j) {
  const auto& n = field(j, "n");
  const auto& f = field(j, "flip");
  if (!n.is_number_integer() || !f.is_boolean()) bad("w is {\"n\": int, \"flip\": bool}");
  return {n.get<int>(), f.get<bool>()};
}

json to_json(const BirkhoffFactors& f) {
  return json{{"l", to_json(f.l)},
              {"w", to_json(f.w)},
              {"m0", to_json(f.m0)},
              {"a0", f.a0},
              {"u", to_json(f.u)},
              {"residual", f.residual},
              {"conditioning", f.conditioning},
              {"reconstruction_defect", f.reconstruction_defect}};
}

BirkhoffFactors factors_from_json(const json& j) {
  BirkhoffFactors f;
  f.l = loop_from_json(field(j, "l"));
  f.w = weyl_from_json(field(j, "w"));
  f.m0 = complex_from_json(field(j, "m0"));
  f.a0 = number(field(j, "a0"), "a0");
  f.u = loop_from_json(field(j, "u"));
  if (j.contains("residual")) f.residual = number(j["residual"], "residual");
  if (j.contains("conditioning")) f.conditioning = number(j["conditioning"], "conditioning");
  if (j.contains("reconstruction_defect"))
    f.reconstruction_defect = number(j["reconstruction_defect"], "reconstruction_defect");
  return f;
}

json to_json(const RootSubgroupData& d) {
  return json{{"etas", complex_list(d.etas)},
              {"zetas", complex_list(d.zetas)},
              {"chi", to_json(d.chi)},
              {"chi0_im", d.chi0_im}};
}

RootSubgroupData data_from_json(const json& j) {
  std::vector<cplx> etas, zetas;
  LaurentSeries chi;
  double chi0 = 0.0;
  if (j.contains("etas")) etas = complex_list_from(j["etas"]);
  if (j.contains("zetas")) zetas = complex_list_from(j["zetas"]);
  if (j.contains("chi")) chi = laurent_from_json(j["chi"]);
  if (j.contains("chi0_im")) chi0 = number(j["chi0_im"], "chi0_im");
  return make_data(std::move(etas), std::move(zetas), std::move(chi), chi0);
}

json to_json(const DetReport& r) {
  json j{{"formula_value", r.formula_value},
         {"operator_value", r.operator_value},
         {"shifted_formula", r.shifted_formula},
         {"shifted_operator", r.shifted_operator},
         {"a0_sq_formula", r.a0_sq_formula},
         {"a0_sq_operator", r.a0_sq_operator},
         {"a0_sq_factorization", r.a0_sq_factorization}};
  for (const auto& [k, v] : r.relative_errors) j["relative_error_" + k] = v;
  return j;
}

DetReport det_report_from_json(const json& j) {
  DetReport r;
  r.formula_value = number(field(j, "formula_value"), "formula_value");
  r.operator_value = number(field(j, "operator_value"), "operator_value");
  r.shifted_formula = number(field(j, "shifted_formula"), "shifted_formula");
  r.shifted_operator = number(field(j, "shifted_operator"), "shifted_operator");
  r.a0_sq_formula = number(field(j, "a0_sq_formula"), "a0_sq_formula");
  r.a0_sq_operator = number(field(j, "a0_sq_operator"), "a0_sq_operator");
  r.a0_sq_factorization = number(field(j, "a0_sq_factorization"), "a0_sq_factorization");
  const std::string prefix = "relative_error_";
  for (const auto& [k, v] : j.items())
    if (k.rfind(prefix, 0) == 0) r.relative_errors[k.substr(prefix.size())] = number(v, "relative error");
  return r;
}

json to_json(const ToeplitzSection& s) {
  json rows = json::array();
  for (long r = 0; r < s.matrix.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < s.matrix.cols(); ++c) row.push_back(to_json(cplx(s.matrix(r, c))));
    rows.push_back(row);
  }
  return json{{"trunc", s.trunc},
              {"shifted", s.shifted},
              {"row_extension", s.row_extension},
              {"rows", s.matrix.rows()},
              {"cols", s.matrix.cols()},
              {"matrix", rows}};
}

json to_json(const TriangularScalarFactors& t) {
  return json{{"psi_minus", to_json(t.psi_minus)},
              {"psi_zero", to_json(t.psi_zero)},
              {"psi_plus", to_json(t.psi_plus)},
              {"residual", t.residual}};
}

json to_json(const PolarPair& p) {
  return json{{"lambda", to_json(p.lambda)},
              {"lambda_inv", to_json(p.lambda_inv)},
              {"core", to_json(p.core)},
              {"residual", p.residual}};
}

json to_json(const PartialRSF& p) {
  return json{{"g1", to_json(p.g1)},
              {"g2", to_json(p.g2)},
              {"chi", to_json(p.chi)},
              {"chi0_im", p.chi0_im},
              {"boundary_sup_l", p.boundary_sup_l},
              {"boundary_sup_u", p.boundary_sup_u},
              {"diagonal_defect", p.diagonal_defect},
              {"reconstruction_defect", p.reconstruction_defect},
              {"factors", to_json(p.factors)}};
}

PartialRSF partial_rsf_from_json(const json& j) {
  PartialRSF p;
  p.g1 = loop_from_json(field(j, "g1"));
  p.g2 = loop_from_json(field(j, "g2"));
  p.chi = laurent_from_json(field(j, "chi"));
  p.chi0_im = number(field(j, "chi0_im"), "chi0_im");
  p.boundary_sup_l = number(field(j, "boundary_sup_l"), "boundary_sup_l");
  p.boundary_sup_u = number(field(j, "boundary_sup_u"), "boundary_sup_u");
  p.diagonal_defect = number(field(j, "diagonal_defect"), "diagonal_defect");
  p.reconstruction_defect = number(field(j, "reconstruction_defect"), "reconstruction_defect");
  p.factors = factors_from_json(field(j, "factors"));
  return p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace loopfact
