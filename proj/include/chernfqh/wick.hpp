#pragma once

#include "chernfqh/grassmann.hpp"
#include "chernfqh/linalg.hpp"

namespace chernfqh {

/// Sign in front of the source contraction in the Gaussian integral. `negative` is the
/// correct one; `positive` exists only as a negative control for the verification suites.
enum class ExponentSign { negative, positive };

/// det(K_{I^c}) and |adj(K_{I^c})|, where I is the set of layers carrying a psibar psi
/// insertion. For I = all layers both come from the empty matrix: (1, 0).
struct WickFactors {
  Integer det;
  Integer adjugate_sum;
};

WickFactors wick_factors(const IntSymMatrix& k_matrix, LayerSet inserted);

/// psibar^T K psi - alpha sum_i psi_i - sum_i psibar_i beta, all in cycle block `cycle`.
template <typename Scalar>
GrassmannElement<Scalar> block_exponent(const IntSymMatrix& k_matrix, const GeneratorLayout& layout, int cycle) {
  if (k_matrix.size() != layout.layers()) throw std::invalid_argument("matrix size does not match the layout");
  const int m = layout.count();
  std::vector<typename GrassmannElement<Scalar>::Term> terms;
  auto add = [&](int first, int second, Scalar c) {
    if (c == 0) return;
    // first * second, written in sorted order.
    if (first > second) {
      std::swap(first, second);
      c = -c;
    }
    terms.emplace_back((Monomial{1} << first) | (Monomial{1} << second), std::move(c));
  };
  for (int i = 0; i < layout.layers(); ++i) {
    for (int j = 0; j < layout.layers(); ++j) {
      add(layout.psibar(i, cycle), layout.psi(j, cycle), from_integer<Scalar>(k_matrix(i, j)));
    }
    add(layout.alpha(cycle), layout.psi(i, cycle), Scalar(-1));
    add(layout.psibar(i, cycle), layout.beta(cycle), Scalar(-1));
  }
  return GrassmannElement<Scalar>::from_terms(m, std::move(terms));
}

/// (psibar psi)_I = prod_{i in I} psibar_i^r psi_i^r. The factors are even, so order is immaterial.
template <typename Scalar>
GrassmannElement<Scalar> pair_insertion(const GeneratorLayout& layout, LayerSet inserted, int cycle) {
  const int m = layout.count();
  auto out = GrassmannElement<Scalar>::one(m);
  for (int i = 0; i < layout.layers(); ++i) {
    if (!contains(inserted, i)) continue;
    out = out * GrassmannElement<Scalar>::generator(m, layout.psibar(i, cycle)) *
          GrassmannElement<Scalar>::generator(m, layout.psi(i, cycle));
  }
  return out;
}

/// The Gaussian integral int D(psi^r, psibar^r) (psibar psi)_I exp(block exponent), computed
/// by expanding the exponential and applying the Berezin rules generator by generator.
template <typename Scalar>
GrassmannElement<Scalar> wick_bruteforce(const IntSymMatrix& k_matrix, LayerSet inserted,
                                         const GeneratorLayout& layout, int cycle) {
  if ((inserted & ~full_set(layout.layers())) != 0) throw std::out_of_range("layer index out of range");
  auto integrand = pair_insertion<Scalar>(layout, inserted, cycle) *
                   gexp(block_exponent<Scalar>(k_matrix, layout, cycle));
  const auto measure = layout.block_measure(cycle);
  return berezin_multi(std::move(integrand), std::span<const int>(measure));
}

/// Closed form det(K_{I^c}) exp(-|K_{I^c}^{-1}| alpha^r beta^r), written through the adjugate
/// as det(K_{I^c}) - |adj(K_{I^c})| alpha^r beta^r so that it stays defined when K_{I^c} is singular.
template <typename Scalar>
GrassmannElement<Scalar> wick_closed(const IntSymMatrix& k_matrix, LayerSet inserted, const GeneratorLayout& layout,
                                     int cycle, ExponentSign sign = ExponentSign::negative) {
  if (k_matrix.size() != layout.layers()) throw std::invalid_argument("matrix size does not match the layout");
  const WickFactors f = wick_factors(k_matrix, inserted);
  const int m = layout.count();
  Scalar pair_coeff = from_integer<Scalar>(f.adjugate_sum);
  if (sign == ExponentSign::negative) pair_coeff = -pair_coeff;
  const Monomial alpha_beta = (Monomial{1} << layout.alpha(cycle)) | (Monomial{1} << layout.beta(cycle));
  return GrassmannElement<Scalar>::constant(m, from_integer<Scalar>(f.det)) +
         GrassmannElement<Scalar>::monomial(m, alpha_beta, pair_coeff);
}

}  // namespace chernfqh
