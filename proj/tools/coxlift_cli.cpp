#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "coxlift/coxlift.hpp"
#include "coxlift/json_io.hpp"

using namespace coxlift;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string group;
  std::string u;
  std::string v;
  std::string property = "glp";
  std::string s;
  bool exhaustive = false;
  std::optional<std::size_t> sample;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> max_length;
  bool json = false;
  int threads = 1;
  int affine = 3;
};

template <CoxeterGroup G>
std::string word_text(const G& g, const element_t<G>& w) {
  auto word = reduced_word(g, w);
  if (g.rank() == 2 && g.label().family != Family::AffineA) {
    if (word.empty()) return "e";
    std::string out;
    for (int s : word) out += s == 0 ? 's' : 't';
    return out;
  }
  return format_word(g, word);
}

template <CoxeterGroup G>
std::string describe(const G& g, const element_t<G>& w) {
  auto text = format_element(g, w);
  auto word = word_text(g, w);
  if (text.ends_with(word)) return text;
  return text + " = " + word;
}

template <CoxeterGroup G>
std::string reflection_text(const G& g, const Reflection& t) {
  return to_string(t) + " = " + describe(g, g.reflection_element(t));
}

template <CoxeterGroup G>
element_t<G> need_element(const G& g, const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidArgument(std::string("missing --") + flag);
  return parse_element(g, text);
}

template <CoxeterGroup G>
json names_json(const G& g, const std::vector<int>& gens) {
  json out = json::array();
  for (int s : gens) out.push_back(g.generator_name(s));
  return out;
}

template <CoxeterGroup G>
int cmd_elem(const G& g, const Options& o) {
  auto w = need_element(g, o.u, "u");
  if (!o.v.empty()) w = g.multiply(w, parse_element(g, o.v));
  auto inv = g.inverse(w);
  auto dr = right_descents(g, w), dl = left_descents(g, w);
  auto d = d_set(g, w);
  if (o.json) {
    json ds = json::array();
    for (const auto& t : d) ds.push_back(to_string(t));
    std::cout << json{{"label", to_string(g.label())},
                      {"element", format_element(g, w)},
                      {"word", format_word(g, reduced_word(g, w))},
                      {"inverse", format_element(g, inv)},
                      {"length", g.length(w)},
                      {"right_descents", names_json(g, dr)},
                      {"left_descents", names_json(g, dl)},
                      {"inversions", ds}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "element  " << format_element(g, w) << "\n"
            << "word     " << format_word(g, reduced_word(g, w)) << "\n"
            << "inverse  " << format_element(g, inv) << "\n"
            << "length   " << g.length(w) << "\n"
            << "D_R      " << names_json(g, dr).dump() << "\n"
            << "D_L      " << names_json(g, dl).dump() << "\n"
            << "D(w)     ";
  for (const auto& t : d) std::cout << to_string(t) << " ";
  std::cout << "\n";
  return kOk;
}

template <CoxeterGroup G>
int cmd_leq(const G& g, const Options& o) {
  auto u = need_element(g, o.u, "u");
  auto v = need_element(g, o.v, "v");
  bool le = leq(g, u, v);
  if (o.json)
    std::cout << json{{"u", format_element(g, u)}, {"v", format_element(g, v)}, {"leq", le}, {"covers", covers(g, u, v)}}.dump(2)
              << "\n";
  else
    std::cout << (le ? "true" : "false") << (covers(g, u, v) ? " (cover)" : "") << "\n";
  return kOk;
}

template <CoxeterGroup G>
int cmd_interval(const G& g, const Options& o) {
  auto u = need_element(g, o.u, "u");
  auto v = need_element(g, o.v, "v");
  auto members = interval(g, u, v);
  if (o.json) {
    json out = json::array();
    for (const auto& z : members) out.push_back(format_element(g, z));
    std::cout << json{{"u", format_element(g, u)}, {"v", format_element(g, v)}, {"size", members.size()}, {"elements", out}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << members.size() << " elements\n";
  for (const auto& z : members) std::cout << "  " << g.length(z) << "  " << describe(g, z) << "\n";
  return kOk;
}

template <CoxeterGroup G>
std::unique_ptr<RootPoset<G>> maybe_table(const G& g) {
  if constexpr (FiniteCoxeterGroup<G>)
    return std::make_unique<RootPoset<G>>(g);
  else
    return nullptr;
}

template <CoxeterGroup G>
int cmd_glp(const G& g, const Options& o) {
  auto u = need_element(g, o.u, "u");
  auto v = need_element(g, o.v, "v");
  auto table = maybe_table(g);
  auto verdict = glp_verdict(g, u, v, table.get());
  if (o.json) {
    std::cout << to_json(g, u, v, verdict).dump(2) << "\n";
    return verdict.holds ? kOk : kPropertyFailed;
  }
  std::cout << "u = " << describe(g, u) << "  (length " << g.length(u) << ")\n"
            << "v = " << describe(g, v) << "  (length " << g.length(v) << ")\n"
            << "AD(u,v):\n";
  for (const auto& t : ad_set(g, u, v)) std::cout << "  " << reflection_text(g, t) << "\n";
  for (const auto& w : verdict.witnesses) {
    auto ut = g.right_multiply(u, w.t);
    auto vt = g.right_multiply(v, w.t);
    std::cout << "minimal " << to_string(w.t) << ": l(ut)=" << g.length(ut) << " l(vt)=" << g.length(vt)
              << "  u<|ut " << w.u_covered_by_ut << "  ut<=v " << w.ut_leq_v << "  u<=vt " << w.u_leq_vt
              << "  vt<|v " << w.vt_covered_by_v << "\n";
  }
  std::cout << "GLP " << (verdict.holds ? "holds" : "fails");
  if (verdict.failure_detail) std::cout << ": " << *verdict.failure_detail;
  std::cout << "\n";
  return verdict.holds ? kOk : kPropertyFailed;
}

template <CoxeterGroup G>
int cmd_rpoly(const G& g, const Options& o) {
  auto u = need_element(g, o.u, "u");
  auto v = need_element(g, o.v, "v");
  std::optional<int> cap = o.max_length;
  if (!g.label().is_finite() && !cap) cap = g.length(v);
  RPolynomials<G> r(g, DescentChoice::Smallest, cap);
  const auto& p = r(u, v);
  if (o.json)
    std::cout << json{{"u", format_element(g, u)}, {"v", format_element(g, v)}, {"coefficients", to_json(p)}}.dump(2)
              << "\n";
  else
    std::cout << p.to_string() << "\n";
  return kOk;
}

template <CoxeterGroup G>
int cmd_sweep(const G& g, const Options& o) {
  SweepReport report;
  if (o.property == "glp_s_interval") {
    if (o.s.empty()) throw InvalidArgument("glp_s_interval needs --s");
    auto names = generator_names(g);
    auto it = names.find(o.s);
    if (it == names.end()) throw InvalidArgument("unknown generator '" + o.s + "'");
    report = glp_s_interval_check(g, it->second, o.max_length);
  } else {
    auto p = parse_property(o.property);
    SweepScope scope = o.sample ? SweepScope::sampled(*o.sample, o.seed, o.max_length) : SweepScope::whole(o.max_length);
    report = sweep(g, p, scope, o.threads);
  }
  if (o.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.label << " " << report.property << " "
              << (report.scope.exhaustive ? "exhaustive" : "sampled " + std::to_string(report.scope.count)) << ": "
              << report.pairs_checked << " checked, " << report.failures.size() << " failures, "
              << static_cast<long>(report.elapsed_ms) << " ms\n";
    for (const auto& f : report.failures) std::cout << "  " << f.u << "  " << f.v << "  " << f.detail << "\n";
  }
  return report.passed() ? kOk : kPropertyFailed;
}

template <CoxeterGroup G>
int cmd_find_failure(const G& g, const Options& o) {
  if (!o.max_length) throw InvalidArgument("find-failure needs --max-length");
  std::optional<std::pair<element_t<G>, element_t<G>>> found;
  if constexpr (FiniteCoxeterGroup<G>) {
    RootPoset<G> table(g);
    found = find_failure(g, *o.max_length, &table);
  } else {
    found = find_failure(g, *o.max_length);
  }
  if (o.json) {
    json j{{"label", to_string(g.label())}, {"max_length", *o.max_length}};
    if (found)
      j["interval"] = {{"u", format_element(g, found->first)}, {"v", format_element(g, found->second)}};
    else
      j["interval"] = nullptr;
    std::cout << j.dump(2) << "\n";
  } else if (found) {
    std::cout << "failing interval u = " << describe(g, found->first) << ", v = " << describe(g, found->second) << "\n";
  } else {
    std::cout << "no failing interval with l(v) <= " << *o.max_length << "\n";
  }
  return found ? kPropertyFailed : kOk;
}

int cmd_counterexample(const Options& o) {
  AffineSymmetricGroup g(o.affine);
  auto ce = alcove::counterexample(g);
  auto ad = ad_set(g, ce.u, ce.v);
  std::vector<Reflection> ts = ce.ts;
  std::sort(ts.begin(), ts.end());
  const bool ad_matches = ad == ts;
  bool no_covering = true;
  for (const auto& t : ad) no_covering = no_covering && !covering_property(g, ce.u, ce.v, t);
  auto verdict = glp_verdict(g, ce.u, ce.v);
  const bool certified = ad_matches && no_covering && !verdict.holds;
  if (o.json) {
    json tj = json::array();
    for (std::size_t i = 0; i < ce.ts.size(); ++i) {
      const auto& t = ce.ts[i];
      tj.push_back({{"t", to_string(t)},
                    {"l_ut", g.length(g.right_multiply(ce.u, t))},
                    {"l_vt", g.length(g.right_multiply(ce.v, t))}});
    }
    std::cout << json{{"n", o.affine},
                      {"u", format_element(g, ce.u)},
                      {"v", format_element(g, ce.v)},
                      {"l_u", g.length(ce.u)},
                      {"l_v", g.length(ce.v)},
                      {"ts", tj},
                      {"ad_equals_ts", ad_matches},
                      {"covering_fails_for_all", no_covering},
                      {"glp_holds", verdict.holds},
                      {"certified", certified}}
                     .dump(2)
              << "\n";
    return certified ? kOk : kPropertyFailed;
  }
  std::cout << "u = " << format_element(g, ce.u) << "  l(u) = " << g.length(ce.u) << "\n"
            << "v = " << format_element(g, ce.v) << "  l(v) = " << g.length(ce.v) << "\n";
  for (std::size_t i = 0; i < ce.ts.size(); ++i) {
    const auto& t = ce.ts[i];
    std::cout << "t" << i + 1 << " = " << to_string(t) << "  l(ut) = " << g.length(g.right_multiply(ce.u, t))
              << "  l(vt) = " << g.length(g.right_multiply(ce.v, t)) << "\n";
  }
  std::cout << "AD(u,v) = {t1..t" << o.affine << "}: " << (ad_matches ? "yes" : "no") << "\n"
            << "covering property fails for every t in AD: " << (no_covering ? "yes" : "no") << "\n"
            << (certified ? "covering failure certified" : "NOT certified") << "\n";
  return certified ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter group element algebra, Bruhat intervals and generalized lifting checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "group label: A3, B2, D4, E6, E8, affA3, ...");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto add_pair = [&](CLI::App* sub, bool need_v) {
    sub->add_option("--u", o.u, "element, e.g. D4:[-2,-1,3,4] or w(s1 s2)")->required();
    auto* v = sub->add_option("--v", o.v, "second element");
    if (need_v) v->required();
  };

  auto* elem = app.add_subcommand("elem", "parse an element (times --v if given): word, inverse, length, descents");
  add_common(elem);
  add_pair(elem, false);
  auto* leq_cmd = app.add_subcommand("leq", "Bruhat comparison u <= v");
  add_common(leq_cmd);
  add_pair(leq_cmd, true);
  auto* interval_cmd = app.add_subcommand("interval", "all z with u <= z <= v");
  add_common(interval_cmd);
  add_pair(interval_cmd, true);
  auto* glp = app.add_subcommand("glp", "generalized lifting verdict for u < v (exit 1 if it fails)");
  add_common(glp);
  add_pair(glp, true);
  auto* rpoly = app.add_subcommand("rpoly", "R-polynomial R_{u,v}");
  add_common(rpoly);
  add_pair(rpoly, true);
  rpoly->add_option("--max-length", o.max_length, "memoization length cap (affine groups)");

  auto* sweep_cmd = app.add_subcommand("sweep", "check a property over all or sampled pairs (exit 1 on failures)");
  add_common(sweep_cmd);
  sweep_cmd
      ->add_option("--property", o.property,
                   "glp, covering, tt_star, lifting, remark_count, length_eq_dsize, rpoly_generalized, glp_s_interval")
      ->required();
  auto* ex = sweep_cmd->add_flag("--exhaustive", o.exhaustive, "all pairs (default)");
  sweep_cmd->add_option("--sample", o.sample, "number of fixed-seed samples")->excludes(ex);
  sweep_cmd->add_option("--seed", o.seed, "sampling seed")->default_val(kDefaultSeed);
  sweep_cmd->add_option("--max-length", o.max_length, "length cap; required for affine groups");
  sweep_cmd->add_option("--threads", o.threads, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--s", o.s, "generator name for glp_s_interval");

  auto* ff = app.add_subcommand("find-failure", "first interval with l(v) <= max length failing GLP (exit 1 if found)");
  add_common(ff);
  ff->add_option("--max-length", o.max_length, "length bound")->required();

  auto* ce = app.add_subcommand("counterexample", "the affine interval family without the covering property");
  ce->add_option("--affine", o.affine, "n >= 3")->required()->check(CLI::Range(3, 64));
  ce->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ce->parsed()) return cmd_counterexample(o);
    if (o.group.empty()) throw InvalidArgument("missing --group");
    auto group = make_group(parse_label(o.group));
    return std::visit(
        [&](const auto& g) -> int {
          if (elem->parsed()) return cmd_elem(g, o);
          if (leq_cmd->parsed()) return cmd_leq(g, o);
          if (interval_cmd->parsed()) return cmd_interval(g, o);
          if (glp->parsed()) return cmd_glp(g, o);
          if (rpoly->parsed()) return cmd_rpoly(g, o);
          if (sweep_cmd->parsed()) return cmd_sweep(g, o);
          return cmd_find_failure(g, o);
        },
        group);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
