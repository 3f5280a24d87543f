#pragma once

// Determinants of the Delta/Theta pattern matrices, two ways: the product
// closed forms and an exact fraction-free (Bareiss) elimination that knows
// nothing about the structure of its input.

#include <string>
#include <utility>

#include "minmat/bigint.hpp"
#include "minmat/errors.hpp"
#include "minmat/matrix_core.hpp"

namespace minmat {

enum class DetMethod { closed_form, bareiss };

inline const char* to_string(DetMethod m) { return m == DetMethod::closed_form ? "closed" : "bareiss"; }

struct DetResult {
  BigInt value;
  DetMethod method;
};

/// Exact determinant of an integer matrix by fraction-free elimination.
///
/// Every division in the update
///   a(i,j) <- (a(i,j) * a(k,k) - a(i,k) * a(k,j)) / previous_pivot
/// is exact over the integers. A zero pivot is replaced by the first row
/// below it with a nonzero entry in that column (flipping the sign); if no
/// such row exists the determinant is 0.
template <typename Derived>
typename Derived::Scalar det_bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw UsageError("determinant needs a square matrix");
  const Index n = input.rows();
  if (n == 0) throw UsageError("determinant of an empty matrix is not defined here");

  DenseMatrix<Scalar> a = input;
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    const Scalar& pivot = a(k, k);
    const bool unit_divisor = previous == Scalar(1);
    for (Index i = k + 1; i < n; ++i) {
      const Scalar& lead = a(i, k);
      for (Index j = k + 1; j < n; ++j) {
        Scalar updated = a(i, j) * pivot - lead * a(k, j);
        if (!unit_divisor) updated /= previous;
        a(i, j) = std::move(updated);
      }
    }
    previous = pivot;
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Delta_n(i_1..i_n) = i_1 * i_2 * ... * i_n.
template <typename Scalar>
Scalar delta_det_closed(const BasicIncrements<Scalar>& inc) {
  return inc.values().prod();
}

/// Theta_n(i_1..i_{n+1}) = i_1 * i_3 * ... * i_{n+1}; i_2 does not appear.
template <typename Scalar>
Scalar theta_det_closed(const BasicIncrements<Scalar>& inc) {
  if (inc.size() < 3) {
    throw UsageError("theta determinant needs at least 3 increments, got " + std::to_string(inc.size()));
  }
  return inc.values()(0) * inc.values().tail(inc.size() - 2).prod();
}

/// |A_n| = 1.
inline BigInt det_min_matrix(Index n) {
  if (n < 1) throw UsageError("min matrix needs n >= 1, got " + std::to_string(n));
  return BigInt(1);
}

/// |C_{n,k}| = k, same domain as c_matrix.
inline BigInt det_c_matrix(Index n, Index k) {
  if (k <= 1 || k >= n) {
    throw UsageError("C matrix needs 1 < k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return BigInt(k);
}

template <typename Scalar>
DetResult delta_det(const BasicIncrements<Scalar>& inc, DetMethod method) {
  if (method == DetMethod::closed_form) return {BigInt(delta_det_closed(inc)), method};
  return {BigInt(det_bareiss(delta_matrix(inc))), method};
}

template <typename Scalar>
DetResult theta_det(const BasicIncrements<Scalar>& inc, DetMethod method) {
  if (method == DetMethod::closed_form) return {BigInt(theta_det_closed(inc)), method};
  return {BigInt(det_bareiss(theta_matrix(inc))), method};
}

}  // namespace minmat
