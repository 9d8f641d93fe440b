#include "chernfqh/series.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace chernfqh;

TEST_CASE("series arithmetic") {
  const RatSeries x = RatSeries::variable(2);
  CHECK(exp(x) == RatSeries({Rational(1), Rational(1), Rational(1, 2)}));
  CHECK_THROWS_AS(exp(RatSeries::constant(1, 3)), std::domain_error);
  CHECK_THROWS_AS(inverse(RatSeries::variable(3)), std::domain_error);

  const RatSeries td = todd_series(6);
  CHECK(td * inverse(td) == RatSeries::constant(1, 6));
  CHECK(pow(td, 0) == RatSeries::constant(1, 6));
  CHECK(pow(td, 3) * pow(td, -3) == RatSeries::constant(1, 6));
  CHECK(pow(td, 2) == td * td);

  // Mixed orders truncate to the smaller one.
  CHECK((todd_series(3) + todd_series(5)).order() == 3);
  CHECK((todd_series(3) * todd_series(5)).order() == 3);

  // exp(a + b) = exp(a) exp(b)
  const RatSeries a = RatSeries::variable(8, Rational(3, 2));
  const RatSeries b = x.truncated(8) * x.truncated(8) - RatSeries::variable(8, 2);
  CHECK(exp(a + b) == exp(a) * exp(b));
}

TEST_CASE("Todd series") {
  CHECK(todd_series(0) == RatSeries::constant(1, 0));
  CHECK(todd_series(2) == RatSeries({Rational(1), Rational(1, 2), Rational(1, 12)}));
  const RatSeries t4 = todd_series(4);
  CHECK(t4[3] == 0);
  CHECK(t4[4] == Rational(-1, 720));

  const int order = 20;
  const RatSeries td = todd_series(order);
  CHECK(td.coefficients() == oracle::todd_coefficients(order));
  for (int j = 3; j <= order; j += 2) CHECK(td[j] == 0);

  // td(x) (1 - e^{-x}) = x
  const RatSeries one_minus = RatSeries::constant(1, order) - exp(RatSeries::variable(order, -1));
  CHECK(td * one_minus == RatSeries::variable(order));
}

TEST_CASE("coefficient extraction examples") {
  CHECK(coeff_extract(0, 0, 0) == 1);
  CHECK(coeff_extract(2, 3, 1) == 10);
  CHECK(coeff_extract(3, 1, 2) == 0);
  CHECK_THROWS_AS(coeff_extract(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("coefficient extraction is a generalized binomial") {
  // By residues the extraction equals binom(r + p, r + a) for every integer p.
  for (int r = 0; r <= 6; ++r)
    for (int p = -4; p <= 6; ++p)
      for (int a = 0; a <= 4; ++a) {
        CAPTURE(r);
        CAPTURE(p);
        CAPTURE(a);
        CHECK(coeff_extract(r, p, a) == oracle::falling_binomial(r + p, r + a));
      }
}

TEST_CASE("binomial conventions") {
  CHECK(paper_binomial(5, 2) == 10);
  CHECK(paper_binomial(4, -1) == 0);
  CHECK(paper_binomial(0, 0) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(7, -1) == 0);
  CHECK(layer_binomial(0, 0) == 1);

  // Where the two conventions differ, and which one the series supports.
  for (int r = 0; r <= 8; ++r)
    for (int p = -3; p <= 8; ++p)
      for (int a = 0; a <= 5; ++a) {
        const Rational truth = coeff_extract(r, p, a);
        const bool paper_ok = Rational(paper_binomial(r + p, p - a)) == truth;
        const bool layer_ok = Rational(layer_binomial(r + p, p - a)) == truth;
        CAPTURE(r);
        CAPTURE(p);
        CAPTURE(a);
        if (r + p > 0) {
          CHECK(paper_ok);
          CHECK(layer_ok);
        } else if (r + p == 0) {
          CHECK(layer_ok);
          CHECK(paper_ok == (p - a != 0));
        } else {
          // Negative upper entry: both conventions vanish, the series does not always.
          CHECK(layer_binomial(r + p, p - a) == 0);
        }
      }
}

TEST_CASE("layer polynomials") {
  CHECK(f_polynomial(5, 1, 0) == LayerPolynomial{{Rational(1)}});
  CHECK(f_polynomial(5, 1, 1) == LayerPolynomial{{Rational(5), Rational(1)}});  // binom(5, 1) + binom(5, 0) x
  CHECK(f_polynomial(4, 2, -1).is_zero());
  const LayerPolynomial f = f_polynomial(5, 1, 2);
  CHECK(f.degree() == 2);
  CHECK(f[0] == 15);  // binom(6, 2)
  CHECK(f[1] == 6);
  CHECK(f[2] == Rational(1, 2));

  for (long long n = 3; n <= 8; ++n)
    for (int g = 0; g <= 2; ++g)
      for (long long p = 0; p <= 4; ++p) {
        CAPTURE(n);
        CAPTURE(g);
        CAPTURE(p);
        CHECK(series_oracle_f(n, g, p, static_cast<int>(p) + 2) == f_polynomial(n, g, p));
      }
}
