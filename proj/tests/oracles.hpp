#pragma once

// Independent reference computations used by the unit suites and the acceptance run.
// None of these call into the code paths they are compared against.

#include "chernfqh/grassmann.hpp"
#include "chernfqh/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using chernfqh::Integer;
using chernfqh::Rational;

// Leibniz sum over all permutations.
inline Integer permutation_det(const chernfqh::IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = 1;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += (inversions % 2) ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline chernfqh::IntMatrix submatrix(const chernfqh::IntMatrix& m, const std::vector<int>& keep) {
  const int n = static_cast<int>(keep.size());
  chernfqh::IntMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

// Every principal minor by the Leibniz sum.
inline bool psd_by_minors(const chernfqh::IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  for (unsigned s = 1; s < (1u << n); ++s) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) keep.push_back(i);
    if (permutation_det(submatrix(m, keep)) < 0) return false;
  }
  return true;
}

inline chernfqh::IntSymMatrix random_symmetric(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  chernfqh::IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return chernfqh::IntSymMatrix(m);
}

// Bernoulli numbers from sum_{j<=m} binom(m+1, j) B_j = 0, with B_1 = -1/2.
inline std::vector<Rational> bernoulli(int count) {
  std::vector<Rational> b(static_cast<std::size_t>(count) + 1);
  b[0] = 1;
  for (int m = 1; m <= count; ++m) {
    Rational sum = 0;
    Integer binom = 1;  // binom(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -sum / Rational(m + 1);
  }
  return b;
}

// x / (1 - e^{-x}) = sum_j B_j^+ x^j / j!, where B_1^+ = +1/2.
inline std::vector<Rational> todd_coefficients(int order) {
  auto b = bernoulli(order);
  if (order >= 1) b[1] = -b[1];
  std::vector<Rational> out;
  Integer fact = 1;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) fact *= j;
    out.push_back(b[j] / Rational(fact));
  }
  return out;
}

// Nilpotent power series sum_j x^j / j!.
template <typename Scalar>
chernfqh::GrassmannElement<Scalar> exp_power_series(const chernfqh::GrassmannElement<Scalar>& x) {
  auto result = chernfqh::GrassmannElement<Scalar>::one(x.generators());
  auto power = result;
  for (int j = 1; j <= x.generators(); ++j) {
    power = power * x;
    if (power.is_zero()) break;
    result = result + (Scalar(1) / Scalar(chernfqh::int_factorial(static_cast<unsigned>(j)))) * power;
  }
  return result;
}

// Generalized binomial top (top - 1) ... (top - bottom + 1) / bottom!, zero for bottom < 0.
inline Rational falling_binomial(long long top, long long bottom) {
  if (bottom < 0) return 0;
  Rational r = 1;
  for (long long j = 0; j < bottom; ++j) r = r * Rational(top - j) / Rational(j + 1);
  return r;
}

}  // namespace oracle
