#include "minmat/fibonacci.hpp"

#include <string>
#include <utility>

#include "minmat/errors.hpp"
#include "minmat/symfun.hpp"

namespace minmat {

BigInt fib(Index i) {
  if (i < 1) throw UsageError("Fibonacci index starts at 1, got " + std::to_string(i));
  BigInt prev = 0;
  BigInt cur = 1;
  for (Index step = 1; step < i; ++step) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> fib_sequence(Index count) {
  if (count < 0) throw UsageError("negative Fibonacci count");
  std::vector<BigInt> seq;
  seq.reserve(static_cast<std::size_t>(count));
  for (Index i = 1; i <= count; ++i) {
    seq.push_back(i <= 2 ? BigInt(1) : BigInt(seq[seq.size() - 1] + seq[seq.size() - 2]));
  }
  return seq;
}

bool fibonacci_identity(Index n) {
  if (n < 0) return false;
  BigInt binomial_sum = 0;
  for (Index k = 0; k <= n; ++k) binomial_sum += binomial(n + k, 2 * k);
  BigInt symfun_sum = 1;
  for (Index k = 1; k <= n; ++k) symfun_sum += symfun_closed(n, k);
  const BigInt target = fib(2 * n + 1);
  return binomial_sum == target && symfun_sum == target;
}

}  // namespace minmat
