#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxlift {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in q; coefficients in ascending degree with no
/// trailing zeros (the zero polynomial has none).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial constant(long v) { return QPolynomial(std::vector<BigInt>{BigInt(v)}); }
  static QPolynomial q() { return QPolynomial(std::vector<BigInt>{0, 1}); }

  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
    return QPolynomial(std::move(out));
  }
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return QPolynomial(std::move(out));
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return QPolynomial(std::move(out));
  }

  /// Descending degree, e.g. "q^3 - 2q^2 + q - 1"; "0" for zero.
  [[nodiscard]] std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      const BigInt& c = c_[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mag != 1 || d == 0) out += mag.str();
      if (d >= 1) out += "q";
      if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

}  // namespace coxlift
