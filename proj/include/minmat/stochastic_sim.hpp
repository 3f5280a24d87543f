#pragma once

// Monte-Carlo check that sigma^2 * A_n is the covariance of the partial sums
// X_t = e_1 + ... + e_t of independent, mean-zero, variance-sigma^2 steps.

#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "minmat/bigint.hpp"

namespace minmat {

enum class IncrementDist { rademacher, uniform, gaussian };

std::string_view to_string(IncrementDist dist);
std::optional<IncrementDist> parse_increment_dist(std::string_view name);

struct SimConfig {
  Index n = 8;           // process length
  Index m = 200000;      // sample paths
  double sigma = 1.0;    // step standard deviation
  std::uint64_t seed = 42;
  IncrementDist dist = IncrementDist::gaussian;
  Index chunks = 8;      // independent substreams; the result depends on (seed, chunks)

  /// Throws UsageError unless n >= 1, m >= 2, sigma > 0 and chunks >= 1.
  void validate() const;
};

struct CovEstimate {
  Eigen::MatrixXd matrix;  // (1/m) sum over paths of X X^T, no centering
  Index m = 0;
  SimConfig config;
};

/// Paths are split into cfg.chunks contiguous groups, each drawn from its own
/// generator seeded from (seed, chunk index) and run on its own thread.
/// Chunk sums are merged in index order, so the output is reproducible.
CovEstimate simulate_covariance(const SimConfig& cfg);

/// max_ij |matrix(i,j) / sigma^2 - min(i,j)|.
double covariance_deviation(const CovEstimate& est);

}  // namespace minmat
