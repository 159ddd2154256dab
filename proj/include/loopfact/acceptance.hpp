#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loopfact {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

CriterionResult criterion_products(std::uint64_t seed);
CriterionResult criterion_dets(std::uint64_t seed);
CriterionResult criterion_a0(std::uint64_t seed);
CriterionResult criterion_lemma(std::uint64_t seed);
CriterionResult criterion_strata(std::uint64_t seed);
CriterionResult criterion_dichotomy(std::uint64_t seed);
CriterionResult criterion_counterexample(std::uint64_t seed);
CriterionResult criterion_partial_rsf(std::uint64_t seed);
CriterionResult criterion_structural(std::uint64_t seed);

/// Suite names: products, dets, a0, lemma, strata, dichotomy, counterexample,
/// partial-rsf, structural, all. InvalidArgument for anything else.
std::vector<CriterionResult> run_suite(const std::string& name, std::uint64_t seed);

std::vector<std::string> suite_names();

/// "criterion N: PASS|FAIL name (detail) [t s]"
std::string format_result(const CriterionResult& r);

}  // namespace loopfact
