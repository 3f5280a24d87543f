#pragma once

// Construction of the min-matrix A_n, the shifted matrix C_{n,k}, and the
// cumulative Delta/Theta pattern matrices built from a list of increments.
//
// Public indices are 1-based (entry(m, 1, 1) is the top-left element); the
// Eigen storage underneath is the usual 0-based column-major layout.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "minmat/bigint.hpp"
#include "minmat/errors.hpp"

namespace minmat {

/// Ordered list (i_1, ..., i_n) of integer increments. Never empty.
template <typename Scalar>
class BasicIncrements {
 public:
  explicit BasicIncrements(DenseVector<Scalar> values) : values_(std::move(values)) {
    if (values_.size() == 0) throw UsageError("increments must be nonempty");
  }
  explicit BasicIncrements(const std::vector<Scalar>& values)
      : BasicIncrements(DenseVector<Scalar>(Eigen::Map<const DenseVector<Scalar>>(
            values.data(), static_cast<Index>(values.size())))) {}
  BasicIncrements(std::initializer_list<Scalar> values) : BasicIncrements(std::vector<Scalar>(values)) {}

  Index size() const { return values_.size(); }
  const DenseVector<Scalar>& values() const { return values_; }

  /// 1-based access, i_j.
  const Scalar& operator[](Index j) const { return values_(j - 1); }

  /// All increments >= 1, the setting in which the Delta matrices are positive definite.
  bool positive() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v >= Scalar(1); });
  }

  static BasicIncrements ones(Index n) {
    if (n < 1) throw UsageError("increments must be nonempty");
    return BasicIncrements(DenseVector<Scalar>::Constant(n, Scalar(1)));
  }

  friend bool operator==(const BasicIncrements& a, const BasicIncrements& b) {
    return a.values_.size() == b.values_.size() && a.values_ == b.values_;
  }

 private:
  DenseVector<Scalar> values_;
};

using Increments = BasicIncrements<BigInt>;

/// P(t-1) = i_1 + ... + i_t.
template <typename Scalar>
DenseVector<Scalar> prefix_sums(const BasicIncrements<Scalar>& inc) {
  DenseVector<Scalar> sums(inc.size());
  Scalar running(0);
  for (Index t = 0; t < inc.size(); ++t) {
    running += inc.values()(t);
    sums(t) = running;
  }
  return sums;
}

/// A_n with a_ij = min(i, j).
template <typename Scalar = BigInt>
DenseMatrix<Scalar> min_matrix(Index n) {
  if (n < 1) throw UsageError("min matrix needs n >= 1, got " + std::to_string(n));
  return DenseMatrix<Scalar>::NullaryExpr(n, n, [](Index r, Index c) { return Scalar(std::min(r, c) + 1); });
}

/// C_{n,k}: the (n-k+1)-square matrix with entry k - 1 + min(r, c). Requires 1 < k < n.
template <typename Scalar = BigInt>
DenseMatrix<Scalar> c_matrix(Index n, Index k) {
  if (k <= 1 || k >= n) {
    throw UsageError("C matrix needs 1 < k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const Index dim = n - k + 1;
  return DenseMatrix<Scalar>::NullaryExpr(dim, dim, [k](Index r, Index c) { return Scalar(k + std::min(r, c)); });
}

/// Delta pattern: entry(r, c) = i_1 + ... + i_min(r,c). Always symmetric.
template <typename Scalar>
DenseMatrix<Scalar> delta_matrix(const BasicIncrements<Scalar>& inc) {
  const DenseVector<Scalar> sums = prefix_sums(inc);
  const Index n = inc.size();
  return DenseMatrix<Scalar>::NullaryExpr(n, n, [&sums](Index r, Index c) { return sums(std::min(r, c)); });
}

/// Theta pattern from n+1 increments, dimension n. First column is i_1; elsewhere
/// entry(r, c) = P[min(r+1, c+1)] in 1-based prefix-sum terms. Needs at least 3 increments.
template <typename Scalar>
DenseMatrix<Scalar> theta_matrix(const BasicIncrements<Scalar>& inc) {
  if (inc.size() < 3) {
    throw UsageError("theta matrix needs at least 3 increments, got " + std::to_string(inc.size()));
  }
  const DenseVector<Scalar> sums = prefix_sums(inc);
  const Index n = inc.size() - 1;
  return DenseMatrix<Scalar>::NullaryExpr(n, n, [&sums](Index r, Index c) {
    return c == 0 ? sums(0) : sums(std::min(r, c) + 1);
  });
}

/// 1-based bounds-checked element access.
template <typename Derived>
typename Derived::Scalar entry(const Eigen::MatrixBase<Derived>& m, Index r, Index c) {
  if (r < 1 || c < 1 || r > m.rows() || c > m.cols()) {
    throw UsageError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of bounds");
  }
  return m(r - 1, c - 1);
}

/// Principal submatrix keeping the given 0-based rows/columns (in order).
template <typename Derived>
DenseMatrix<typename Derived::Scalar> principal_submatrix(const Eigen::MatrixBase<Derived>& m,
                                                          const std::vector<Index>& keep) {
  const auto k = static_cast<Index>(keep.size());
  return DenseMatrix<typename Derived::Scalar>::NullaryExpr(
      k, k, [&](Index r, Index c) { return m(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(c)]); });
}

}  // namespace minmat
