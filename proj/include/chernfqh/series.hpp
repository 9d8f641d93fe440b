#pragma once

#include "chernfqh/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chernfqh {

/// Formal power series c_0 + c_1 x + ... + c_T x^T, exact in every degree <= T.
/// Binary operations between different orders truncate to the smaller one.
template <typename Scalar>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1, Scalar(0)) {}
  explicit TruncatedSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncatedSeries constant(const Scalar& value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
  }
  /// The series `scale * x`.
  static TruncatedSeries variable(int order, const Scalar& scale = Scalar(1)) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = scale;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  Scalar& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  TruncatedSeries truncated(int order) const {
    check_order(order);
    std::vector<Scalar> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
    c.resize(static_cast<std::size_t>(order) + 1, Scalar(0));
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int t = std::min(a.order(), b.order());
    TruncatedSeries r(t);
    for (int i = 0; i <= t; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int t = std::min(a.order(), b.order());
    TruncatedSeries r(t);
    for (int i = 0; i <= t; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int t = std::min(a.order(), b.order());
    TruncatedSeries r(t);
    for (int i = 0; i <= t; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= t; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend TruncatedSeries operator*(const Scalar& s, TruncatedSeries a) {
    for (auto& c : a.c_) c *= s;
    return a;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    return order;
  }

  std::vector<Scalar> c_;
};

/// Multiplicative inverse; requires a non-zero constant term.
template <typename Scalar>
TruncatedSeries<Scalar> inverse(const TruncatedSeries<Scalar>& s) {
  if (s[0] == 0) throw std::domain_error("series inverse needs a non-zero constant term");
  const int t = s.order();
  TruncatedSeries<Scalar> r(t);
  r[0] = Scalar(1) / s[0];
  for (int n = 1; n <= t; ++n) {
    Scalar acc(0);
    for (int j = 1; j <= n; ++j) acc += s[j] * r[n - j];
    r[n] = -acc / s[0];
  }
  return r;
}

/// Non-negative powers by repeated squaring; negative powers through inverse().
template <typename Scalar>
TruncatedSeries<Scalar> pow(TruncatedSeries<Scalar> base, long long exponent) {
  if (exponent < 0) {
    base = inverse(base);
    exponent = -exponent;
  }
  auto result = TruncatedSeries<Scalar>::constant(Scalar(1), base.order());
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// exp(s) for s with zero constant term.
template <typename Scalar>
TruncatedSeries<Scalar> exp(const TruncatedSeries<Scalar>& s) {
  if (s[0] != 0) throw std::domain_error("series exp needs a zero constant term");
  const int t = s.order();
  // E' = s' E, solved degree by degree.
  TruncatedSeries<Scalar> e(t);
  e[0] = Scalar(1);
  for (int n = 1; n <= t; ++n) {
    Scalar acc(0);
    for (int j = 1; j <= n; ++j) acc += Scalar(j) * s[j] * e[n - j];
    e[n] = acc / Scalar(n);
  }
  return e;
}

using RatSeries = TruncatedSeries<Rational>;

/// Coefficients of x / (1 - e^{-x}) through degree `order`.
RatSeries todd_series(int order);

/// [x^r] td(x)^{r+1} e^{px} (td(x)/x - 1)^a, by exact series expansion.
/// Works at truncation r + a: the pole of (td/x - 1)^a is cleared by x^a.
Rational coeff_extract(int r, long long p, int a);

/// Generalized binomial top(top-1)...(top-bottom+1)/bottom!, zero for bottom < 0.
/// top may be negative.
Integer binomial(const Integer& top, long long bottom);

/// Verbatim convention: zero when bottom < 0 or top <= 0, standard otherwise.
Integer paper_binomial(const Integer& top, long long bottom);

/// Convention used by the closed-form evaluator: zero for a negative lower entry,
/// the generalized binomial otherwise. Agrees with coeff_extract(r, p, a) at
/// (top, bottom) = (r + p, p - a) whenever r + p >= 0; in particular it keeps
/// binom(0, 0) = 1, where the verbatim convention gives 0.
inline Integer layer_binomial(const Integer& top, long long bottom) { return binomial(top, bottom); }

/// Polynomial sum_a coeff[a] x^a with trailing zeros trimmed.
struct LayerPolynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Rational operator[](int a) const {
    return a >= 0 && a < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(a)] : Rational(0);
  }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  friend bool operator==(const LayerPolynomial&, const LayerPolynomial&) = default;
};

/// f(x) = sum_{a>=0} (1/a!) binom(n - g + p, p - a) x^a, via layer_binomial.
LayerPolynomial f_polynomial(long long n, int g, long long p);

/// Same polynomial from pure series extraction:
/// coefficient a is (1/a!) [x^{n-g}] e^{px} td^{n+1-g} (td/x - 1)^a, for a <= max_a.
LayerPolynomial series_oracle_f(long long n, int g, long long p, int max_a);

}  // namespace chernfqh
