#pragma once

#include <json.hpp>

#include "gk/blueprint.hpp"
#include "gk/classifier.hpp"
#include "gk/prime_graph.hpp"
#include "gk/spectra.hpp"

namespace gk {

using json = nlohmann::json;

json graph_to_json(const PrimeGraph& g);
PrimeGraph graph_from_json(const json& j);

json blueprint_to_json(const SolvableBlueprint& b);
SolvableBlueprint blueprint_from_json(const json& j);

json spectrum_to_json(const SpectrumResult& s);

json descriptor_to_json(const AlmostSimpleDescriptor& d);
AlmostSimpleDescriptor descriptor_from_json(const json& j);

json verdict_to_json(const Verdict& v);
json realization_report_to_json(const RealizationReport& r);
json realizability_to_json(const RealizabilityReport& r, const PrimeGraph& g);

}  // namespace gk
