#include "minmat/symfun.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "minmat/errors.hpp"
#include "minmat/exact_det.hpp"
#include "minmat/matrix_core.hpp"

namespace minmat {
namespace {

constexpr std::array<std::pair<SymMethod, std::string_view>, 6> kNames{{
    {SymMethod::closed, "closed"},
    {SymMethod::minors, "minors"},
    {SymMethod::nested, "nested"},
    {SymMethod::rec6, "rec6"},
    {SymMethod::rec7, "rec7"},
    {SymMethod::ratio, "ratio"},
}};

void check_domain(Index n, Index k) {
  if (n < 0 || k < 0 || k > n) {
    throw UsageError("symmetric function needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

using Table = std::vector<std::vector<BigInt>>;

// rows[m][j] = S_j^m for m <= n_max, j <= min(m, k_max), via
// S_j^m = sum_{i=1}^{m-j+1} i * S_{j-1}^{m-i}.
Table rec6_table(Index n_max, Index k_max) {
  Table rows(static_cast<std::size_t>(n_max + 1));
  for (Index m = 0; m <= n_max; ++m) {
    auto& row = rows[static_cast<std::size_t>(m)];
    row.resize(static_cast<std::size_t>(std::min(m, k_max) + 1));
    row[0] = 1;
    for (Index j = 1; j < static_cast<Index>(row.size()); ++j) {
      BigInt sum = 0;
      for (Index i = 1; i <= m - j + 1; ++i) sum += BigInt(i) * rows[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(j)] = std::move(sum);
    }
  }
  return rows;
}

// Same shape, via S_j^m = S_j^{m-1} + sum_{i=1}^{m-j+1} S_{j-1}^{m-i} for j <= m-1,
// with S_m^m = 1 and S_0^m = 1 as boundaries.
Table rec7_table(Index n_max, Index k_max) {
  Table rows(static_cast<std::size_t>(n_max + 1));
  for (Index m = 0; m <= n_max; ++m) {
    auto& row = rows[static_cast<std::size_t>(m)];
    row.resize(static_cast<std::size_t>(std::min(m, k_max) + 1));
    row[0] = 1;
    for (Index j = 1; j < static_cast<Index>(row.size()); ++j) {
      if (j == m) {
        row[static_cast<std::size_t>(j)] = 1;
        continue;
      }
      BigInt sum = rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
      for (Index i = 1; i <= m - j + 1; ++i) sum += rows[static_cast<std::size_t>(m - i)][static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(j)] = std::move(sum);
    }
  }
  return rows;
}

}  // namespace

std::string_view to_string(SymMethod method) {
  for (const auto& [m, name] : kNames) {
    if (m == method) return name;
  }
  return "?";
}

std::optional<SymMethod> parse_sym_method(std::string_view name) {
  for (const auto& [m, n] : kNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

BigInt binomial(Index a, Index b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    b = std::min(b, a - b);
  }
  // Running value after step t is C(a - b + t, t) for a >= 0, and the
  // partial falling-factorial quotient otherwise; both stay integral.
  BigInt result = 1;
  for (Index t = 1; t <= b; ++t) {
    result *= BigInt(a - b + t);
    result /= BigInt(t);
  }
  return result;
}

BigInt symfun_closed(Index n, Index k) {
  check_domain(n, k);
  return binomial(n + k, n - k);
}

BigInt symfun_minor_sum(Index n, Index k, Index cap) {
  check_domain(n, k);
  if (n > cap) {
    throw ResourceError("principal-minor enumeration capped at n=" + std::to_string(cap) + ", requested n=" +
                        std::to_string(n));
  }
  if (k == 0) return 1;

  const ExactMatrix a = min_matrix(n);
  std::vector<Index> keep(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) keep[static_cast<std::size_t>(j)] = j;

  BigInt total = 0;
  while (true) {
    total += det_bareiss(principal_submatrix(a, keep));
    // Next k-subset in lexicographic order.
    Index pos = k - 1;
    while (pos >= 0 && keep[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++keep[static_cast<std::size_t>(pos)];
    for (Index j = pos + 1; j < k; ++j) keep[static_cast<std::size_t>(j)] = keep[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

BigInt symfun_nested(Index n, Index k) {
  check_domain(n, k);
  // exact[s]: sum over compositions with the parts placed so far totalling
  // exactly s, of the product of those parts.
  std::vector<BigInt> exact(static_cast<std::size_t>(n + 1), BigInt(0));
  exact[0] = 1;
  for (Index part = 1; part <= k; ++part) {
    std::vector<BigInt> next(static_cast<std::size_t>(n + 1), BigInt(0));
    for (Index s = part; s <= n; ++s) {
      BigInt sum = 0;
      for (Index last = 1; last <= s - (part - 1); ++last) {
        sum += BigInt(last) * exact[static_cast<std::size_t>(s - last)];
      }
      next[static_cast<std::size_t>(s)] = std::move(sum);
    }
    exact = std::move(next);
  }
  BigInt total = 0;
  for (Index s = k; s <= n; ++s) total += exact[static_cast<std::size_t>(s)];
  return total;
}

BigInt symfun_rec6(Index n, Index k) {
  check_domain(n, k);
  return rec6_table(n, k)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt symfun_rec7(Index n, Index k) {
  check_domain(n, k);
  return rec7_table(n, k)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt symfun_ratio(Index n, Index k) {
  check_domain(n, k);
  BigInt value = 1;  // S_k^k
  for (Index m = k + 1; m <= n; ++m) {
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(BigInt(value * (m + k)), BigInt(m - k), quotient, remainder);
    if (remainder != 0) {
      throw InvariantViolation("inexact ratio step at n=" + std::to_string(m) + " k=" + std::to_string(k));
    }
    value = std::move(quotient);
  }
  return value;
}

BigInt symfun(SymMethod method, Index n, Index k, Index minor_cap) {
  switch (method) {
    case SymMethod::closed: return symfun_closed(n, k);
    case SymMethod::minors: return symfun_minor_sum(n, k, minor_cap);
    case SymMethod::nested: return symfun_nested(n, k);
    case SymMethod::rec6: return symfun_rec6(n, k);
    case SymMethod::rec7: return symfun_rec7(n, k);
    case SymMethod::ratio: return symfun_ratio(n, k);
  }
  throw UsageError("unknown symmetric-function method");
}

bool binomial_identity_check(Index n, Index k) {
  if (n < 0 || k < 0 || k > n) return false;
  BigInt rhs = binomial(n + k - 1, n - k - 1);
  for (Index i = 1; i <= n - k + 1; ++i) rhs += binomial(n + k - 1 - i, n - k + 1 - i);
  return binomial(n + k, n - k) == rhs;
}

SymTable SymTable::build(SymMethod method, Index n_max, Index minor_cap) {
  if (n_max < 0) throw UsageError("table size must be nonnegative");
  if (method == SymMethod::rec6) return SymTable(method, rec6_table(n_max, n_max));
  if (method == SymMethod::rec7) return SymTable(method, rec7_table(n_max, n_max));
  if (method == SymMethod::minors && n_max > minor_cap) {
    throw ResourceError("principal-minor enumeration capped at n=" + std::to_string(minor_cap));
  }
  Table rows(static_cast<std::size_t>(n_max + 1));
  for (Index m = 0; m <= n_max; ++m) {
    for (Index j = 0; j <= m; ++j) rows[static_cast<std::size_t>(m)].push_back(symfun(method, m, j, minor_cap));
  }
  return SymTable(method, std::move(rows));
}

const BigInt& SymTable::at(Index n, Index k) const {
  if (n < 0 || n > n_max() || k < 0 || k > n) {
    throw UsageError("table lookup (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt CharPoly::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CharPoly charpoly(Index n, SymMethod method) {
  if (n < 1) throw UsageError("characteristic polynomial needs n >= 1");
  CharPoly p;
  p.n = n;
  p.coeffs.resize(static_cast<std::size_t>(n + 1));
  for (Index k = 0; k <= n; ++k) {
    BigInt s = symfun(method, n, k);
    p.coeffs[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? s : BigInt(-s);
  }
  return p;
}

}  // namespace minmat
