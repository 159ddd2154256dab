#pragma once

#include <json.hpp>
#include <string>

#include "loopfact/birkhoff.hpp"
#include "loopfact/dets.hpp"
#include "loopfact/rootsub.hpp"
#include "loopfact/toeplitz.hpp"

namespace loopfact {

using nlohmann::json;

json to_json(cplx c);
json to_json(const LaurentSeries& f);
json to_json(const LoopMatrix& g);
json to_json(const WeylElement& w);
json to_json(const BirkhoffFactors& f);
json to_json(const RootSubgroupData& d);
json to_json(const DetReport& r);
json to_json(const ToeplitzSection& s);
json to_json(const TriangularScalarFactors& t);
json to_json(const PolarPair& p);
json to_json(const PartialRSF& p);

// Parsers throw LoopError(InvalidArgument) on malformed input.
cplx complex_from_json(const json& j);
LaurentSeries laurent_from_json(const json& j);
LoopMatrix loop_from_json(const json& j);
WeylElement weyl_from_json(const json& j);
BirkhoffFactors factors_from_json(const json& j);
RootSubgroupData data_from_json(const json& j);
DetReport det_report_from_json(const json& j);
PartialRSF partial_rsf_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace loopfact
