#pragma once

#include <json.hpp>

#include "coxlift/glp.hpp"
#include "coxlift/qpoly.hpp"
#include "coxlift/sweep.hpp"
#include "coxlift/text.hpp"

namespace coxlift {

inline nlohmann::json to_json(const SweepScope& scope) {
  nlohmann::json j;
  j["mode"] = scope.exhaustive ? "exhaustive" : "sampled";
  if (!scope.exhaustive) {
    j["count"] = scope.count;
    j["seed"] = scope.seed;
  }
  if (scope.max_length) j["max_length"] = *scope.max_length;
  return j;
}

inline nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) failures.push_back({{"u", f.u}, {"v", f.v}, {"detail", f.detail}});
  return {{"label", r.label},         {"property", r.property}, {"scope", to_json(r.scope)},
          {"pairs_checked", r.pairs_checked}, {"failures", failures},     {"elapsed_ms", r.elapsed_ms}};
}

/// Ascending coefficients as decimal strings, so big values survive.
inline nlohmann::json to_json(const QPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

inline nlohmann::json reflections_json(const std::vector<Reflection>& ts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : ts) out.push_back(to_string(t));
  return out;
}

template <CoxeterGroup G>
nlohmann::json to_json(const G& g, const element_t<G>& u, const element_t<G>& v, const GlpVerdict& verdict) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : verdict.witnesses)
    witnesses.push_back({{"t", to_string(w.t)},
                         {"t_element", format_element(g, g.reflection_element(w.t))},
                         {"u_covered_by_ut", w.u_covered_by_ut},
                         {"ut_leq_v", w.ut_leq_v},
                         {"u_leq_vt", w.u_leq_vt},
                         {"vt_covered_by_v", w.vt_covered_by_v}});
  nlohmann::json j{{"label", to_string(g.label())},
                   {"u", format_element(g, u)},
                   {"v", format_element(g, v)},
                   {"holds", verdict.holds},
                   {"ad", reflections_json(ad_set(g, u, v))},
                   {"minimal_reflections", reflections_json(verdict.minimal_reflections)},
                   {"witnesses", witnesses}};
  j["failure_detail"] = verdict.failure_detail ? nlohmann::json(*verdict.failure_detail) : nlohmann::json(nullptr);
  return j;
}

}  // namespace coxlift
