#include "chernfqh/wick.hpp"

namespace chernfqh {

WickFactors wick_factors(const IntSymMatrix& k_matrix, LayerSet inserted) {
  if ((inserted & ~full_set(k_matrix.size())) != 0) throw std::out_of_range("layer index out of range");
  const IntSymMatrix rest = principal_submatrix(k_matrix, complement(inserted, k_matrix.size()));
  return {det(rest), entry_sum(adjugate(rest.matrix()))};
}

}  // namespace chernfqh
