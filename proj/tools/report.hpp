#pragma once

#include <vector>

#include "json.hpp"
#include "monideal/closure.hpp"
#include "monideal/criteria.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"
#include "monideal/properties.hpp"

namespace monideal::cli {

using nlohmann::json;

inline constexpr int kReportSchema = 1;

json ideal_json(const MonomialIdeal& I);
json prime_json(const PrimeSupport& p, const std::vector<std::string>& names);
json primes_json(const std::vector<PrimeSupport>& ps, const std::vector<std::string>& names);
json normality_json(const NormalityReport& r, const std::vector<std::string>& names);
json closedness_json(const ClosednessResult& r, const std::vector<std::string>& names);
json profile_json(const AssProfile& p, const std::vector<std::string>& names);
json verdict_json(const PropertyVerdict& v, const std::vector<std::string>& names);
json criterion_json(const CriterionReport& r);
json graph_json(const SimpleGraph& G);
json vertex_sets_json(const std::vector<VertexSet>& sets);

}  // namespace monideal::cli
