#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coxlift/bruhat.hpp"
#include "coxlift/closed_forms.hpp"
#include "coxlift/enumerate.hpp"
#include "coxlift/roots.hpp"

namespace coxlift {

/// The four conjuncts of the generalized lifting property for one t.
struct GlpWitness {
  Reflection t;
  bool u_covered_by_ut = false;
  bool ut_leq_v = false;
  bool u_leq_vt = false;
  bool vt_covered_by_v = false;

  [[nodiscard]] bool holds() const { return u_covered_by_ut && ut_leq_v && u_leq_vt && vt_covered_by_v; }
  [[nodiscard]] std::string first_failure() const {
    if (!u_covered_by_ut) return "u is not covered by ut";
    if (!ut_leq_v) return "ut is not below v";
    if (!u_leq_vt) return "u is not below vt";
    if (!vt_covered_by_v) return "vt is not covered by v";
    return {};
  }
};

struct GlpVerdict {
  bool holds = false;
  std::vector<Reflection> minimal_reflections;
  std::vector<GlpWitness> witnesses;
  std::optional<std::string> failure_detail;
};

/// The minimal elements of AD(u,v) for the root order; every one of them, no
/// tie-breaking.
template <CoxeterGroup G>
std::vector<Reflection> minimal_ad(const G& g, const element_t<G>& u, const element_t<G>& v,
                                   const RootPoset<G>* table = nullptr) {
  RootOracle<G> order{g, table};
  auto ad = ad_set(g, u, v);
  std::vector<Reflection> out;
  for (const auto& t : ad) {
    bool minimal = true;
    for (const auto& r : ad)
      if (r != t && order.leq(r, t)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(t);
  }
  return out;
}

/// u is covered by ut and vt is covered by v, in lengths.
template <CoxeterGroup G>
bool covering_property(const G& g, const element_t<G>& u, const element_t<G>& v, const Reflection& t) {
  if (!g.is_inversion(v, t) || g.is_inversion(u, t)) throw PreconditionError(to_string(t) + " is not in AD(u,v)");
  return g.length(g.right_multiply(u, t)) == g.length(u) + 1 && g.length(g.right_multiply(v, t)) == g.length(v) - 1;
}

template <CoxeterGroup G>
GlpWitness glp_witness(const G& g, const element_t<G>& u, const element_t<G>& v, const Reflection& t) {
  auto ut = g.right_multiply(u, t);
  auto vt = g.right_multiply(v, t);
  GlpWitness w{t};
  w.u_covered_by_ut = covers(g, u, ut);
  w.ut_leq_v = leq(g, ut, v);
  w.u_leq_vt = leq(g, u, vt);
  w.vt_covered_by_v = covers(g, vt, v);
  return w;
}

/// Evaluates the four conjuncts for every minimal t in AD(u,v).
template <CoxeterGroup G>
GlpVerdict glp_verdict(const G& g, const element_t<G>& u, const element_t<G>& v, const RootPoset<G>* table = nullptr) {
  if (!less(g, u, v)) throw PreconditionError("glp_verdict needs u < v");
  GlpVerdict verdict;
  verdict.minimal_reflections = minimal_ad(g, u, v, table);
  verdict.holds = !verdict.minimal_reflections.empty();
  if (!verdict.holds) verdict.failure_detail = "AD(u,v) is empty";
  for (const auto& t : verdict.minimal_reflections) {
    auto w = glp_witness(g, u, v, t);
    if (!w.holds() && verdict.holds) {
      verdict.holds = false;
      verdict.failure_detail = to_string(t) + ": " + w.first_failure();
    }
    verdict.witnesses.push_back(w);
  }
  return verdict;
}

/// The simple reflection of the inductive step, from the closed rules.
template <CoxeterGroup G>
Reflection select_s(const G& g, const Reflection& t) {
  return closed::select_s(g.label(), t);
}

/// For t minimal in AD(u,v) and every r in D(t) \ {t}:
/// r in A(u) <=> r in A(v) <=> r^t in D(v) <=> r^t in D(u).
template <CoxeterGroup G>
bool tt_star_check(const G& g, const element_t<G>& u, const element_t<G>& v, const Reflection& t,
                   const RootPoset<G>* table = nullptr) {
  auto minimal = minimal_ad(g, u, v, table);
  if (std::find(minimal.begin(), minimal.end(), t) == minimal.end())
    throw PreconditionError(to_string(t) + " is not minimal in AD(u,v)");
  RootOracle<G> order{g, table};
  for (const auto& r : g.inversions(g.reflection_element(t))) {
    if (r == t) continue;
    auto rt = order.conjugate(r, t);
    bool a = !g.is_inversion(u, r);
    bool b = !g.is_inversion(v, r);
    bool c = g.is_inversion(v, rt);
    bool d = g.is_inversion(u, rt);
    if (a != b || b != c || c != d) return false;
  }
  return true;
}

/// First interval u < v (v in breadth-first order, then u in the same order)
/// with l(v) <= max_length whose GLP verdict fails.
template <CoxeterGroup G>
std::optional<std::pair<element_t<G>, element_t<G>>> find_failure(const G& g, int max_length,
                                                                  const RootPoset<G>* table = nullptr) {
  auto elems = enumerate(g, max_length);
  for (const auto& v : elems)
    for (const auto& u : elems) {
      if (g.length(u) >= g.length(v)) break;
      if (leq(g, u, v) && !glp_verdict(g, u, v, table).holds) return std::make_pair(u, v);
    }
  return std::nullopt;
}

}  // namespace coxlift
