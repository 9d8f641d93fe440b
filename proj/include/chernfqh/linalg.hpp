#pragma once

#include "chernfqh/scalar.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chernfqh {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

/// Bitmask over layer indices 0..k-1 (bit i set means layer i is in the set).
using LayerSet = std::uint32_t;

inline constexpr int kMaxLayers = 24;

inline LayerSet full_set(int k) { return k == 0 ? 0u : (LayerSet{1} << k) - 1u; }
inline LayerSet complement(LayerSet s, int k) { return full_set(k) & ~s; }
inline bool contains(LayerSet s, int i) { return ((s >> i) & 1u) != 0; }

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Symmetric integer matrix. The 0x0 matrix is a legal value.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(IntMatrix entries);
  IntSymMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntSymMatrix identity(int k);

  int size() const { return static_cast<int>(m_.rows()); }
  const IntMatrix& matrix() const { return m_; }
  const Integer& operator()(int i, int j) const { return m_(i, j); }
  IntVector diagonal() const { return m_.diagonal(); }

  friend bool operator==(const IntSymMatrix& a, const IntSymMatrix& b) {
    return a.m_.rows() == b.m_.rows() && (a.m_.rows() == 0 || a.m_ == b.m_);
  }

 private:
  IntMatrix m_;
};

/// Fraction-free Bareiss elimination. Exact for any scalar with exact division
/// (integers, rationals). det of the 0x0 matrix is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact Gauss-Jordan inverse over a field scalar.
template <typename Derived>
MatrixX<typename Derived::Scalar> gauss_jordan_inverse(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  MatrixX<Scalar> a = input;
  MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular");
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      inv.row(col).swap(inv.row(pivot));
    }
    const Scalar p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Scalar f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

/// Matrix with row `skip_row` and column `skip_col` removed.
template <typename Derived>
MatrixX<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m,
                                               Eigen::Index skip_row, Eigen::Index skip_col) {
  const Eigen::Index n = m.rows();
  MatrixX<typename Derived::Scalar> out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

inline constexpr Eigen::Index kCofactorAdjugateLimit = 6;

/// Transpose of the cofactor matrix; M * adj(M) == det(M) * I.
/// Cofactor expansion up to size 6, det * inverse beyond (through rationals).
template <typename Derived>
MatrixX<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  MatrixX<Scalar> adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  if (n <= kCofactorAdjugateLimit) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        Scalar c = determinant(minor_matrix(m, j, i));
        adj(i, j) = ((i + j) % 2 == 0) ? c : Scalar(-c);
      }
    }
    return adj;
  }
  MatrixX<Rational> q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) q(i, j) = Rational(m(i, j));
  const Rational d = determinant(q);
  if (d == 0) {
    // Rank-deficient: fall back to cofactors, there is no inverse to scale.
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        Scalar c = determinant(minor_matrix(m, j, i));
        adj(i, j) = ((i + j) % 2 == 0) ? c : Scalar(-c);
      }
    return adj;
  }
  const MatrixX<Rational> scaled = gauss_jordan_inverse(q) * d;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) adj(i, j) = static_cast<Scalar>(scaled(i, j));
  return adj;
}

/// |M|: the sum of all entries; 0 for the empty matrix.
template <typename Derived>
typename Derived::Scalar entry_sum(const Eigen::MatrixBase<Derived>& m) {
  typename Derived::Scalar s(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j);
  return s;
}

/// (C_1..C_k) with C_i = sum_j M_ji.
template <typename Derived>
VectorX<typename Derived::Scalar> column_sums(const Eigen::MatrixBase<Derived>& m) {
  VectorX<typename Derived::Scalar> c(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    typename Derived::Scalar s(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) s += m(i, j);
    c(j) = s;
  }
  return c;
}

template <typename To, typename Derived>
MatrixX<To> cast_matrix(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

Integer det(const IntSymMatrix& m);
IntSymMatrix adjugate(const IntSymMatrix& m);
/// Throws SingularMatrixError when det(m) == 0.
RatMatrix inverse(const IntSymMatrix& m);
/// Entries of `m` restricted to the rows and columns in `layers`, in increasing order.
/// Throws std::out_of_range if `layers` names an index >= m.size().
IntSymMatrix principal_submatrix(const IntSymMatrix& m, LayerSet layers);
IntSymMatrix principal_submatrix(const IntSymMatrix& m, const std::vector<int>& indices);
/// Exact PSD test: every principal minor is non-negative.
bool is_psd(const IntSymMatrix& m);
/// K - I.
IntSymMatrix minus_identity(const IntSymMatrix& m);

}  // namespace chernfqh
