#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <iterator>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "coxlift/bruhat.hpp"
#include "coxlift/glp.hpp"
#include "coxlift/rpoly.hpp"
#include "coxlift/sampling.hpp"
#include "coxlift/text.hpp"

namespace coxlift {

enum class Property { Glp, Covering, TtStar, Lifting, RemarkCount, LengthEqDsize, RpolyGeneralized };

inline const std::vector<std::pair<Property, std::string>>& property_names() {
  static const std::vector<std::pair<Property, std::string>> names{
      {Property::Glp, "glp"},
      {Property::Covering, "covering"},
      {Property::TtStar, "tt_star"},
      {Property::Lifting, "lifting"},
      {Property::RemarkCount, "remark_count"},
      {Property::LengthEqDsize, "length_eq_dsize"},
      {Property::RpolyGeneralized, "rpoly_generalized"},
  };
  return names;
}

inline std::string to_string(Property p) {
  for (const auto& [q, name] : property_names())
    if (q == p) return name;
  return "?";
}

inline Property parse_property(std::string_view text) {
  for (const auto& [p, name] : property_names())
    if (name == text) return p;
  throw ParseError("unknown property '" + std::string(text) + "'");
}

struct SweepScope {
  bool exhaustive = true;
  std::size_t count = 0;  // sampled only
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> max_length;  // required for affine groups

  static SweepScope whole(std::optional<int> max_length = std::nullopt) { return {true, 0, kDefaultSeed, max_length}; }
  static SweepScope sampled(std::size_t count, std::uint64_t seed = kDefaultSeed,
                            std::optional<int> max_length = std::nullopt) {
    return {false, count, seed, max_length};
  }
};

struct SweepFailure {
  std::string u;
  std::string v;
  std::string detail;

  auto operator<=>(const SweepFailure&) const = default;
};

struct SweepReport {
  std::string label;
  std::string property;
  SweepScope scope;
  std::uint64_t pairs_checked = 0;
  std::vector<SweepFailure> failures;
  double elapsed_ms = 0;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

namespace detail {

/// What one property counts as a case and how it is checked. Cases are
/// ordered pairs; length_eq_dsize uses u = v.
template <CoxeterGroup G>
class PropertyChecker {
 public:
  using Element = element_t<G>;

  PropertyChecker(const G& g, Property p, const RootPoset<G>* table, std::optional<int> max_length)
      : g_(g), p_(p), table_(table), max_length_(max_length) {
    if (p_ == Property::RpolyGeneralized) {
      if (!g.label().is_finite() || !g.label().is_simply_laced())
        throw Unsupported("rpoly_generalized needs a finite simply-laced group");
      r_ = std::make_unique<RPolynomials<G>>(g);
    }
  }

  [[nodiscard]] bool single_element() const { return p_ == Property::LengthEqDsize; }

  /// Whether (u,v) belongs to the property's domain in exhaustive mode.
  bool in_domain(const Element& u, const Element& v) const {
    switch (p_) {
      case Property::Glp:
      case Property::Lifting:
      case Property::RpolyGeneralized:
        return g_.length(u) < g_.length(v) && leq(g_, u, v);
      case Property::Covering:
      case Property::TtStar:
        return !ad_set(g_, u, v).empty();
      case Property::RemarkCount:
      case Property::LengthEqDsize:
        return true;
    }
    return false;
  }

  /// Draws one sampled case.
  std::pair<Element, Element> sample(int diameter, Rng& rng) const {
    switch (p_) {
      case Property::Glp:
      case Property::Lifting:
      case Property::RpolyGeneralized:
        return random_less_pair(g_, diameter, rng);
      case Property::Covering:
      case Property::TtStar:
        return random_ad_pair(g_, diameter, rng);
      case Property::RemarkCount: {
        auto u = random_element(g_, diameter, rng);
        return {u, random_element(g_, diameter, rng)};
      }
      case Property::LengthEqDsize: {
        auto w = random_element(g_, diameter, rng);
        return {w, w};
      }
    }
    throw Error("unreachable");
  }

  /// Failure detail, or nothing when the case passes.
  std::optional<std::string> check(const Element& u, const Element& v) {
    switch (p_) {
      case Property::Glp: {
        auto verdict = glp_verdict(g_, u, v, table_);
        if (verdict.holds) return std::nullopt;
        return verdict.failure_detail;
      }
      case Property::Covering:
        for (const auto& t : minimal_ad(g_, u, v, table_))
          if (!covering_property(g_, u, v, t)) return "covering fails for " + to_string(t);
        return std::nullopt;
      case Property::TtStar:
        for (const auto& t : minimal_ad(g_, u, v, table_))
          if (!tt_star_check(g_, u, v, t, table_)) return "equivalence fails for " + to_string(t);
        return std::nullopt;
      case Property::Lifting:
        for (int s = 0; s < g_.rank(); ++s)
          if (g_.is_right_descent(v, s) && !g_.is_right_descent(u, s) && !lifting_check(g_, u, v, s))
            return "lifting fails for " + g_.generator_name(s);
        return std::nullopt;
      case Property::RemarkCount:
        return remark_count(u, v);
      case Property::LengthEqDsize:
        return length_eq_dsize(u);
      case Property::RpolyGeneralized:
        for (const auto& t : minimal_ad(g_, u, v, table_))
          if (!generalized_step_check(g_, *r_, u, v, t, table_)) return "identity fails for " + to_string(t);
        return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  /// |AD(u,v)| = l(v) - l(u) + |D(u) \ D(v)|, and |AD| = 1 forces l(u,v) = 1 when u < v.
  std::optional<std::string> remark_count(const Element& u, const Element& v) const {
    auto du = d_set(g_, u);
    auto dv = d_set(g_, v);
    std::vector<Reflection> only_u;
    std::set_difference(du.begin(), du.end(), dv.begin(), dv.end(), std::back_inserter(only_u));
    const auto ad = static_cast<long>(ad_set(g_, u, v).size());
    const long lu = g_.length(u), lv = g_.length(v);
    if (ad != lv - lu + static_cast<long>(only_u.size()))
      return "|AD| = " + std::to_string(ad) + " but l(v)-l(u)+|D(u)\\D(v)| = " +
             std::to_string(lv - lu + static_cast<long>(only_u.size()));
    if (ad == 1 && lv - lu != 1 && less(g_, u, v)) return "|AD| = 1 with l(u,v) = " + std::to_string(lv - lu);
    return std::nullopt;
  }

  /// l(w) against the number of reflections shortening w, found by trying
  /// every candidate reflection, and against a reduced word.
  std::optional<std::string> length_eq_dsize(const Element& w) const {
    const int len = g_.length(w);
    long count = 0;
    auto test = [&](const Reflection& t) {
      if (g_.length(g_.right_multiply(w, t)) < len) ++count;
    };
    if constexpr (FiniteCoxeterGroup<G>) {
      for (const auto& t : g_.reflections()) test(t);
    } else {
      const int n = g_.rank();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (std::int64_t m = -(len + 1); m <= len + 1; ++m) test(Reflection::affine(i, j, m));
    }
    const auto word = static_cast<long>(reduced_word(g_, w).size());
    const auto listed = static_cast<long>(g_.inversions(w).size());
    if (count != len || word != len || listed != len)
      return "l = " + std::to_string(len) + ", |D| = " + std::to_string(count) + ", reduced word " +
             std::to_string(word) + ", inversions " + std::to_string(listed);
    return std::nullopt;
  }

  const G& g_;
  Property p_;
  const RootPoset<G>* table_;
  std::optional<int> max_length_;
  std::unique_ptr<RPolynomials<G>> r_;
};

/// Runs `work(worker_index, checker)` on `threads` workers, each with its own
/// checker, and rethrows the first exception.
template <CoxeterGroup G, class Work>
void run_workers(const G& g, Property p, const RootPoset<G>* table, std::optional<int> max_length, int threads,
                 Work&& work) {
  threads = std::max(1, threads);
  std::vector<std::unique_ptr<PropertyChecker<G>>> checkers;
  for (int k = 0; k < threads; ++k) checkers.push_back(std::make_unique<PropertyChecker<G>>(g, p, table, max_length));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (int k = 0; k < threads; ++k)
    pool.emplace_back([&, k] {
      try {
        work(k, *checkers[static_cast<std::size_t>(k)]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Checks a property over all cases of a finite group (or all elements up to
/// scope.max_length), or over scope.count fixed-seed samples. The report is
/// the same for every thread count.
template <CoxeterGroup G>
SweepReport sweep(const G& g, Property p, const SweepScope& scope, int threads = 1,
                  const RootPoset<G>* table = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  if (scope.exhaustive && !g.label().is_finite() && !scope.max_length)
    throw InvalidArgument("exhaustive sweep of " + to_string(g.label()) + " needs a max length");
  if (!scope.exhaustive && scope.count == 0) throw InvalidArgument("sampled sweep needs a positive count");
  std::unique_ptr<RootPoset<G>> own_table;
  if constexpr (FiniteCoxeterGroup<G>) {
    if (!table) {
      own_table = std::make_unique<RootPoset<G>>(g);
      table = own_table.get();
    }
  }
  threads = std::max(1, threads);

  using Element = element_t<G>;
  using Case = std::pair<Element, Element>;
  struct Found {
    Element u, v;
    std::string detail;
  };
  std::vector<std::vector<Found>> found(static_cast<std::size_t>(threads));
  std::vector<std::uint64_t> checked(static_cast<std::size_t>(threads), 0);

  if (scope.exhaustive) {
    const auto elems = enumerate(g, scope.max_length);
    detail::run_workers(g, p, table, scope.max_length, threads, [&](int k, detail::PropertyChecker<G>& checker) {
      auto& out = found[static_cast<std::size_t>(k)];
      auto& n = checked[static_cast<std::size_t>(k)];
      for (std::size_t a = static_cast<std::size_t>(k); a < elems.size(); a += static_cast<std::size_t>(threads)) {
        const auto& v = elems[a];
        if (checker.single_element()) {
          ++n;
          if (auto d = checker.check(v, v)) out.push_back({v, v, *d});
          continue;
        }
        for (const auto& u : elems) {
          if (!checker.in_domain(u, v)) continue;
          ++n;
          if (auto d = checker.check(u, v)) out.push_back({u, v, *d});
        }
      }
    });
  } else {
    const int diameter = sampling_diameter(g, scope.max_length);
    Rng rng(scope.seed);
    std::vector<Case> cases;
    {
      detail::PropertyChecker<G> sampler(g, p == Property::RpolyGeneralized ? Property::Glp : p, table,
                                         scope.max_length);
      for (std::size_t k = 0; k < scope.count; ++k) cases.push_back(sampler.sample(diameter, rng));
    }
    detail::run_workers(g, p, table, scope.max_length, threads, [&](int k, detail::PropertyChecker<G>& checker) {
      auto& out = found[static_cast<std::size_t>(k)];
      for (std::size_t a = static_cast<std::size_t>(k); a < cases.size(); a += static_cast<std::size_t>(threads)) {
        ++checked[static_cast<std::size_t>(k)];
        const auto& [u, v] = cases[a];
        if (auto d = checker.check(u, v)) out.push_back({u, v, *d});
      }
    });
  }

  std::vector<Found> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end(),
            [](const Found& a, const Found& b) { return std::tie(a.u, a.v, a.detail) < std::tie(b.u, b.v, b.detail); });
  SweepReport report{to_string(g.label()), to_string(p), scope, 0, {}, 0};
  for (auto n : checked) report.pairs_checked += n;
  for (const auto& f : all) report.failures.push_back({format_element(g, f.u), format_element(g, f.v), f.detail});
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// GLP on every interval [s,u] with s < u and l(u) <= max_length (whole group
/// when finite and no cap is given).
template <CoxeterGroup G>
SweepReport glp_s_interval_check(const G& g, int s, std::optional<int> max_length,
                                 const RootPoset<G>* table = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  if (!g.label().is_simply_laced()) throw Unsupported("glp_s_interval_check needs a simply-laced group");
  if (s < 0 || s >= g.rank()) throw InvalidArgument("generator index out of range");
  std::unique_ptr<RootPoset<G>> own_table;
  if constexpr (FiniteCoxeterGroup<G>) {
    if (!table) {
      own_table = std::make_unique<RootPoset<G>>(g);
      table = own_table.get();
    }
  }
  SweepReport report{to_string(g.label()), "glp_s_interval", SweepScope::whole(max_length), 0, {}, 0};
  const auto gen = generator(g, s);
  for (const auto& u : enumerate(g, max_length)) {
    if (!less(g, gen, u)) continue;
    ++report.pairs_checked;
    auto verdict = glp_verdict(g, gen, u, table);
    if (!verdict.holds) report.failures.push_back({format_element(g, gen), format_element(g, u), *verdict.failure_detail});
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace coxlift
