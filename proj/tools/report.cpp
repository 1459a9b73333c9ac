#include "report.hpp"

#include <algorithm>
#include <bit>

#include "monideal/ideal_io.hpp"

namespace monideal::cli {

json ideal_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(format_monomial(g, I.variable_names()));
  return {{"vars", I.variable_names()}, {"generators", gens}};
}

json prime_json(const PrimeSupport& p, const std::vector<std::string>& names) {
  json vars = json::array();
  for (auto i : p.indices()) vars.push_back(names.at(i));
  return vars;
}

json primes_json(const std::vector<PrimeSupport>& ps, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(prime_json(p, names));
  return out;
}

json normality_json(const NormalityReport& r, const std::vector<std::string>& names) {
  json powers = json::array();
  for (const auto& p : r.powers_checked) {
    powers.push_back({{"t", p.t}, {"integrally_closed", p.integrally_closed}});
  }
  json j = {{"normal", r.normal},
            {"powers_checked", powers},
            {"bound_used", r.bound_used},
            {"decision_bound", r.decision_bound},
            {"decision_bound_covered", r.bound_used >= r.decision_bound},
            {"verified_up_to", r.verified_up_to()},
            {"timed_out", r.timed_out},
            {"decision_bound_note",
             "the n-1 termination bound is an external result, not derived here"}};
  if (r.failure_witness) {
    j["failure_witness"] = {{"t", r.failure_witness->first},
                            {"monomial", format_monomial(r.failure_witness->second, names)}};
  } else {
    j["failure_witness"] = nullptr;
  }
  return j;
}

json closedness_json(const ClosednessResult& r, const std::vector<std::string>& names) {
  json j = {{"integrally_closed", r.integrally_closed}};
  j["witness"] = r.witness ? json(format_monomial(*r.witness, names)) : json(nullptr);
  return j;
}

json profile_json(const AssProfile& p, const std::vector<std::string>& names) {
  json per = json::array();
  const auto full = PrimeSupport::full(names.size());
  for (const auto& [k, ass] : p.per_power) {
    const bool has_m = std::find(ass.begin(), ass.end(), full) != ass.end();
    per.push_back({{"k", k}, {"ass", primes_json(ass, names)}, {"maximal_ideal_associated", has_m}});
  }
  return {{"per_power", per}, {"min_primes", primes_json(p.min_primes, names)}, {"bound", p.bound}};
}

json verdict_json(const PropertyVerdict& v, const std::vector<std::string>& names) {
  json j = {{"property", to_string(v.property)},
            {"holds", v.holds},
            {"holds_up_to", v.holds_up_to},
            {"bound", v.bound},
            {"bounded", true},
            {"notes", v.notes}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    json cj = {{"k", c.k}, {"what", c.what}, {"primes", primes_json(c.primes, names)}};
    cj["ideal"] = c.ideal ? ideal_json(c.ideal->with_names(names)) : json(nullptr);
    j["counterexample"] = cj;
  } else {
    j["counterexample"] = nullptr;
  }
  if (!v.evidence.empty()) {
    json ev = json::array();
    for (const auto& [k, ass] : v.evidence) ev.push_back({{"k", k}, {"ass", primes_json(ass, names)}});
    j["evidence"] = ev;
  }
  if (v.threshold) j["threshold"] = *v.threshold;
  if (v.extra_prime) j["extra_prime"] = prime_json(*v.extra_prime, names);
  if (v.localizations_ntf) j["localizations_ntf"] = *v.localizations_ntf;
  return j;
}

json criterion_json(const CriterionReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) {
    hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  }
  json j = {{"kind", std::string(to_string(r.kind))},
            {"hypotheses", hyps},
            {"applicable", r.applicable},
            {"verdict", std::string(to_string(r.verdict))}};
  j["L"] = r.L ? ideal_json(*r.L) : json(nullptr);
  j["conclusion"] = r.conclusion && r.L
                        ? normality_json(*r.conclusion, r.L->variable_names())
                        : json(nullptr);
  return j;
}

json graph_json(const SimpleGraph& G) {
  json edges = json::array();
  for (const auto& [u, v] : G.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", G.vertex_count()}, {"edges", edges}};
}

json vertex_sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (auto s : sets) {
    json one = json::array();
    for (; s != 0; s &= s - 1) one.push_back(std::countr_zero(s) + 1);
    out.push_back(one);
  }
  return out;
}

}  // namespace monideal::cli
