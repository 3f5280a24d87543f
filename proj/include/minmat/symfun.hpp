#pragma once

// Elementary symmetric functions S_k^n of the eigenvalues of the min-matrix
// A_n, computed without ever computing an eigenvalue. Six independent routes
// are provided so they can be checked against each other:
//
//   closed  C(n+k, n-k)
//   minors  sum of all k x k principal minors of A_n (exponential, capped)
//   nested  sum over compositions (i_1..i_k), i_1+...+i_k <= n, of i_1*...*i_k
//   rec6    S_k^n = sum_{i=1}^{n-k+1} i * S_{k-1}^{n-i}
//   rec7    S_k^n = S_k^{n-1} + sum_{i=1}^{n-k+1} S_{k-1}^{n-i}
//   ratio   S_k^n = (n+k)/(n-k) * S_k^{n-1}, iterated up from S_k^k = 1
//
// Every route accepts 0 <= k <= n and returns S_0^n = 1.

#include <optional>
#include <string_view>
#include <vector>

#include "minmat/bigint.hpp"

namespace minmat {

enum class SymMethod { closed, minors, nested, rec6, rec7, ratio };

inline constexpr SymMethod kAllSymMethods[] = {SymMethod::closed, SymMethod::minors, SymMethod::nested,
                                               SymMethod::rec6,   SymMethod::rec7,   SymMethod::ratio};

std::string_view to_string(SymMethod method);
std::optional<SymMethod> parse_sym_method(std::string_view name);

/// Largest n the principal-minor enumeration will attempt unless told otherwise.
inline constexpr Index kDefaultMinorCap = 14;

/// C(a, b) for any integer a: the falling-factorial a(a-1)...(a-b+1)/b! when
/// b >= 0, and 0 when b < 0. For a >= 0 this is 0 whenever b > a.
BigInt binomial(Index a, Index b);

BigInt symfun_closed(Index n, Index k);
/// Throws ResourceError when n > cap.
BigInt symfun_minor_sum(Index n, Index k, Index cap = kDefaultMinorCap);
BigInt symfun_nested(Index n, Index k);
BigInt symfun_rec6(Index n, Index k);
BigInt symfun_rec7(Index n, Index k);
/// Throws InvariantViolation if any step's division leaves a remainder.
BigInt symfun_ratio(Index n, Index k);

BigInt symfun(SymMethod method, Index n, Index k, Index minor_cap = kDefaultMinorCap);

/// C(n+k, n-k) == C(n+k-1, n-k-1) + sum_{i=1}^{n-k+1} C(n+k-1-i, n-k+1-i), evaluated exactly.
bool binomial_identity_check(Index n, Index k);

/// Immutable table of S_k^n for 0 <= k <= n <= n_max, filled by a single method.
class SymTable {
 public:
  static SymTable build(SymMethod method, Index n_max, Index minor_cap = kDefaultMinorCap);

  Index n_max() const { return static_cast<Index>(rows_.size()) - 1; }
  SymMethod method() const { return method_; }
  const BigInt& at(Index n, Index k) const;

 private:
  SymTable(SymMethod method, std::vector<std::vector<BigInt>> rows) : method_(method), rows_(std::move(rows)) {}

  SymMethod method_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Characteristic polynomial det(x I - A_n) = sum_j coeffs[j] x^j, monic of degree n.
struct CharPoly {
  Index n = 0;
  std::vector<BigInt> coeffs;

  BigInt operator()(const BigInt& x) const;
};

/// Coefficients by Vieta: coeffs[n-k] = (-1)^k S_k^n.
CharPoly charpoly(Index n, SymMethod method = SymMethod::closed);

}  // namespace minmat
