#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace coxlift {

using Rational = boost::rational<std::int64_t>;

/// Coefficients of a root over the simple roots of a group, in the group's
/// generator order.
using RootVector = std::vector<Rational>;

inline RootVector zero_root(std::size_t rank) { return RootVector(rank, Rational(0)); }

inline bool is_nonnegative(const RootVector& v) {
  for (const auto& c : v)
    if (c.numerator() < 0) return false;
  return true;
}

inline bool is_zero(const RootVector& v) {
  for (const auto& c : v)
    if (c.numerator() != 0) return false;
  return true;
}

/// True iff big - small has only nonnegative coefficients.
inline bool dominates(const RootVector& big, const RootVector& small) {
  for (std::size_t k = 0; k < big.size(); ++k)
    if (big[k] < small[k]) return false;
  return true;
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::string to_string(const RootVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += to_string(v[k]);
  }
  return out + ")";
}

}  // namespace coxlift
