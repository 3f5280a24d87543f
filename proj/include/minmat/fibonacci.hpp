#pragma once

#include <vector>

#include "minmat/bigint.hpp"

namespace minmat {

/// F_i with F_1 = F_2 = 1. i >= 1.
BigInt fib(Index i);

/// F_1 .. F_count, so element [i-1] is F_i.
std::vector<BigInt> fib_sequence(Index count);

/// sum_{k=0}^n C(n+k, n-k) == F_{2n+1}, and the same sum written as
/// 1 + sum_{k=1}^n S_k^n.
bool fibonacci_identity(Index n);

}  // namespace minmat
