#pragma once

// Arbitrary-precision integer scalar and the Eigen aliases used across the library.
//
// Expression templates are switched off so BigInt behaves as a plain value
// type inside Eigen expressions and `auto` deductions.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <type_traits>

#include "minmat/errors.hpp"

// Eigen 3.4 dense types expose a const_iterator typedef, which older
// Boost.Multiprecision probes when deciding whether a type is a byte
// container (e.g. while resolving scalar * matrix or operator<<). The probe
// is a hard error for Eigen expressions; none of them is a byte container.
namespace boost::multiprecision::detail {
#define MINMAT_NOT_A_BYTE_CONTAINER(...)                       \
  template <typename... Ts>                                    \
  struct is_byte_container<__VA_ARGS__<Ts...>> : std::false_type {}
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::MatrixBase);
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::ArrayBase);
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::DenseBase);
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::CwiseNullaryOp);
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::CwiseUnaryOp);
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::CwiseBinaryOp);
MINMAT_NOT_A_BYTE_CONTAINER(Eigen::Transpose);
#undef MINMAT_NOT_A_BYTE_CONTAINER
template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};
template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Array<S, R, C, O, MR, MC>> : std::false_type {};
template <typename X, int R, int C, bool I>
struct is_byte_container<Eigen::Block<X, R, C, I>> : std::false_type {};
}  // namespace boost::multiprecision::detail

namespace minmat {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense square matrix of exact integers.
using ExactMatrix = DenseMatrix<BigInt>;
using ExactVector = DenseVector<BigInt>;

/// Full decimal rendering, never exponent notation.
inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; anything else is a UsageError.
inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw UsageError("expected an integer, got '" + std::string(text) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw UsageError("expected an integer, got '" + std::string(text) + "'");
  }
  BigInt v{std::string(digits)};
  return text.front() == '-' ? BigInt(-v) : v;
}

}  // namespace minmat
