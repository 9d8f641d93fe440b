#pragma once

#include "chernfqh/configuration.hpp"
#include "chernfqh/grassmann.hpp"
#include "chernfqh/wick.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace chernfqh {

/// sum_m coeffs[m] theta^m, m = 0..g. coeffs[0] is the rank, -coeffs[1]/coeffs[0] the conductance.
struct ChernCharacter {
  int genus = 0;
  std::vector<Rational> coeffs;

  static ChernCharacter zero(int genus) { return {genus, std::vector<Rational>(static_cast<std::size_t>(genus) + 1)}; }

  const Rational& rank() const { return coeffs.at(0); }
  bool is_zero() const {
    for (const auto& c : coeffs)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

class NonUniformThetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BruteForceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest generator count (2gk + 2g) the brute-force pipeline accepts.
inline constexpr int kBruteForceGeneratorLimit = 34;

/// Converts an element over alpha/beta into theta form. Requires complete alpha^r beta^r
/// pairs and a coefficient of (alpha beta)^F that depends only on |F| = m; since
/// theta^m = m! sum_{|F|=m} (alpha beta)^F, that coefficient divided by m! is c_m.
ChernCharacter theta_collect(const GrassmannElement<Rational>& x, const GeneratorLayout& layout);

enum class IntegrationSchedule {
  /// Multiply in one exponential block at a time and integrate it out immediately.
  staged,
  /// Expand the whole integrand, then integrate all 2gk generators.
  full,
};

/// prod_i f_i(sum_r psibar_i^r psi_i^r) prod_r exp(block exponent r), integrated over every
/// psi/psibar generator, with f_i taken from series extraction.
ChernCharacter ch_bruteforce(const Configuration& cfg, IntegrationSchedule schedule = IntegrationSchedule::staged);

/// det(K)^g exp(-|K^{-1}| theta). Requires p = 0 and det(K) != 0.
ChernCharacter ch_theorem1(const Configuration& cfg);

/// The closed-form multi-index sum over (v, w) with |v| + |w| = g. Per-subset factors come
/// from wick_closed, so `sign` flips the source contraction for negative controls.
ChernCharacter ch_theorem3(const Configuration& cfg, ExponentSign sign = ExponentSign::negative);

/// Multi-indices v = (v_I), w = (w_I) over the 2^k subsets I of the layers.
struct MultiIndexTerm {
  std::vector<int> v;
  std::vector<int> w;
};

/// Calls `visit` for every (v, w) with |v| + |w| = g.
void for_each_multi_index(int k, int g, const std::function<void(const MultiIndexTerm&)>& visit);

struct EquivalenceReport {
  bool equal = false;
  ChernCharacter bruteforce;
  ChernCharacter closed_form;
};

EquivalenceReport verify_equivalence(const Configuration& cfg, ExponentSign sign = ExponentSign::negative);

/// Symmetric k x k matrices with entries in [0, entry_max], K - I positive semi-definite and det K != 0,
/// in row-major lexicographic order of the upper triangle.
std::vector<IntSymMatrix> coupling_matrices(int k, int entry_max);

struct OracleSweepRange {
  std::vector<int> layers{1, 2};
  std::vector<int> genera{1, 2};
  int entry_max = 4;
  std::vector<long long> quasihole_values{0, 1, 2};
};

/// Every (K, g, p) in the range with minimal particle numbers n_i = 2g.
std::vector<Configuration> oracle_sweep(const OracleSweepRange& range);

}  // namespace chernfqh
