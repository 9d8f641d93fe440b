#include "chernfqh/series.hpp"

#include <string>

namespace chernfqh {

RatSeries todd_series(int order) {
  // (1 - e^{-x}) / x = sum_j (-1)^j x^j / (j+1)!, then invert.
  RatSeries denom(order);
  for (int j = 0; j <= order; ++j) {
    Rational c = Rational(1) / factorial(static_cast<unsigned>(j + 1));
    denom[j] = (j % 2 == 0) ? c : Rational(-c);
  }
  return inverse(denom);
}

Rational coeff_extract(int r, long long p, int a) {
  if (r < 0 || a < 0) throw std::invalid_argument("coeff_extract needs r >= 0 and a >= 0");
  const int t = r + a;
  const RatSeries td = todd_series(t);
  const RatSeries x = RatSeries::variable(t);
  // td^{r+1} e^{px} (td - x)^a, read at x^{r+a}.
  RatSeries s = pow(td, r + 1) * exp(RatSeries::variable(t, Rational(p))) * pow(td - x, a);
  return s[t];
}

Integer binomial(const Integer& top, long long bottom) {
  if (bottom < 0) return Integer(0);
  Integer num = 1;
  Integer den = 1;
  for (long long j = 0; j < bottom; ++j) {
    num *= top - j;
    den *= j + 1;
  }
  return num / den;
}

Integer paper_binomial(const Integer& top, long long bottom) {
  if (bottom < 0 || top <= 0) return Integer(0);
  return binomial(top, bottom);
}

LayerPolynomial f_polynomial(long long n, int g, long long p) {
  LayerPolynomial f;
  const Integer top = Integer(n) - g + p;
  for (long long a = 0; a <= p; ++a) {
    f.coeffs.push_back(Rational(layer_binomial(top, p - a)) / factorial(static_cast<unsigned>(a)));
  }
  f.trim();
  return f;
}

LayerPolynomial series_oracle_f(long long n, int g, long long p, int max_a) {
  if (n - g < 0) throw std::invalid_argument("series_oracle_f needs n - g >= 0");
  LayerPolynomial f;
  for (int a = 0; a <= max_a; ++a) {
    f.coeffs.push_back(coeff_extract(static_cast<int>(n - g), p, a) / factorial(static_cast<unsigned>(a)));
  }
  f.trim();
  return f;
}

}  // namespace chernfqh
