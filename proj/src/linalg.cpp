#include "chernfqh/linalg.hpp"

#include <string>

namespace chernfqh {

IntSymMatrix::IntSymMatrix(IntMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("matrix is not square");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i))
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
  if (m_.rows() > kMaxLayers) throw std::invalid_argument("matrix too large");
}

IntSymMatrix::IntSymMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) throw std::invalid_argument("matrix is not square");
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  *this = IntSymMatrix(std::move(m));
}

IntSymMatrix IntSymMatrix::identity(int k) { return IntSymMatrix(IntMatrix::Identity(k, k)); }

Integer det(const IntSymMatrix& m) { return determinant(m.matrix()); }

IntSymMatrix adjugate(const IntSymMatrix& m) { return IntSymMatrix(adjugate(m.matrix())); }

RatMatrix inverse(const IntSymMatrix& m) {
  const Integer d = det(m);
  if (d == 0) throw SingularMatrixError("matrix is singular (det = 0)");
  RatMatrix inv = cast_matrix<Rational>(adjugate(m.matrix()));
  const Rational dq(d);
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j) inv(i, j) /= dq;
  return inv;
}

IntSymMatrix principal_submatrix(const IntSymMatrix& m, LayerSet layers) {
  const int k = m.size();
  if ((layers & ~full_set(k)) != 0) throw std::out_of_range("layer index out of range");
  std::vector<int> idx;
  for (int i = 0; i < k; ++i)
    if (contains(layers, i)) idx.push_back(i);
  IntMatrix sub(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
  return IntSymMatrix(std::move(sub));
}

IntSymMatrix principal_submatrix(const IntSymMatrix& m, const std::vector<int>& indices) {
  LayerSet s = 0;
  for (int i : indices) {
    if (i < 0 || i >= m.size()) throw std::out_of_range("layer index out of range");
    s |= LayerSet{1} << i;
  }
  return principal_submatrix(m, s);
}

bool is_psd(const IntSymMatrix& m) {
  const LayerSet all = full_set(m.size());
  for (LayerSet s = 1; s != 0 && s <= all; ++s) {
    if (det(principal_submatrix(m, s)) < 0) return false;
  }
  return true;
}

IntSymMatrix minus_identity(const IntSymMatrix& m) {
  return IntSymMatrix(IntMatrix(m.matrix() - IntMatrix::Identity(m.size(), m.size())));
}

}  // namespace chernfqh
