#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they are used to check.

#include <cstdint>
#include <functional>
#include <vector>

#include "minmat/bigint.hpp"

namespace oracle {

using minmat::BigInt;
using minmat::Index;

/// Laplace expansion along the first row. Exponential; keep dim <= 8.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][col] * cofactor_det(minor);
    total += (col % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

template <typename Derived>
std::vector<std::vector<BigInt>> to_rows(const Eigen::MatrixBase<Derived>& m) {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(m.rows()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(BigInt(m(r, c)));
  }
  return rows;
}

/// Pascal's triangle rows 0..a_max, additive only.
inline std::vector<std::vector<BigInt>> pascal(Index a_max) {
  std::vector<std::vector<BigInt>> tri(static_cast<std::size_t>(a_max + 1));
  for (Index a = 0; a <= a_max; ++a) {
    auto& row = tri[static_cast<std::size_t>(a)];
    row.assign(static_cast<std::size_t>(a + 1), BigInt(1));
    for (Index b = 1; b < a; ++b) {
      row[static_cast<std::size_t>(b)] =
          tri[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] + tri[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
  }
  return tri;
}

/// Literal nested loops: i_1 in 1..n-k+1, i_2 in 1..n-k+2-i_1, ..., summing i_1*...*i_k.
inline BigInt nested_sum_enumerate(Index n, Index k) {
  BigInt total = 0;
  std::function<void(Index, Index, BigInt)> loop = [&](Index depth, Index used, BigInt product) {
    if (depth == k) {
      total += product;
      return;
    }
    const Index upper = n - k + (depth + 1) - used;  // n-k+j - (i_1+...+i_{j-1})
    for (Index i = 1; i <= upper; ++i) loop(depth + 1, used + i, product * i);
  };
  loop(0, 0, BigInt(1));
  return total;
}

/// Sum of k x k principal minors of min(i,j), each by cofactor expansion.
inline BigInt principal_minor_sum(Index n, Index k) {
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Index> idx;
    for (Index i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i + 1);
    }
    std::vector<std::vector<BigInt>> sub(idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r].push_back(BigInt(std::min(idx[r], idx[c])));
    }
    total += cofactor_det(sub);
  }
  return total;
}

}  // namespace oracle
