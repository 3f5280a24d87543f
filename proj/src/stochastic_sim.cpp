#include "minmat/stochastic_sim.hpp"

#include <cmath>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "minmat/errors.hpp"
#include "minmat/matrix_core.hpp"

namespace minmat {
namespace {

Eigen::MatrixXd simulate_chunk(const SimConfig& cfg, Index chunk, Index paths) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(chunk)};
  std::mt19937_64 engine(seq);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  const double half_width = std::sqrt(3.0);  // unit variance
  std::uniform_real_distribution<double> uniform(-half_width, half_width);

  auto unit_step = [&]() -> double {
    switch (cfg.dist) {
      case IncrementDist::rademacher: return (engine() >> 63) != 0 ? 1.0 : -1.0;
      case IncrementDist::uniform: return uniform(engine);
      case IncrementDist::gaussian: return gaussian(engine);
    }
    return 0.0;
  };

  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(cfg.n, cfg.n);
  Eigen::VectorXd path(cfg.n);
  for (Index p = 0; p < paths; ++p) {
    double level = 0.0;
    for (Index t = 0; t < cfg.n; ++t) {
      level += cfg.sigma * unit_step();
      path(t) = level;
    }
    acc.selfadjointView<Eigen::Lower>().rankUpdate(path);
  }
  return acc;
}

}  // namespace

std::string_view to_string(IncrementDist dist) {
  switch (dist) {
    case IncrementDist::rademacher: return "rademacher";
    case IncrementDist::uniform: return "uniform";
    case IncrementDist::gaussian: return "gaussian";
  }
  return "?";
}

std::optional<IncrementDist> parse_increment_dist(std::string_view name) {
  for (auto d : {IncrementDist::rademacher, IncrementDist::uniform, IncrementDist::gaussian}) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

void SimConfig::validate() const {
  if (n < 1) throw UsageError("simulation needs n >= 1, got " + std::to_string(n));
  if (m < 2) throw UsageError("simulation needs m >= 2 paths, got " + std::to_string(m));
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw UsageError("simulation needs a finite sigma > 0");
  if (chunks < 1) throw UsageError("simulation needs at least one chunk");
}

CovEstimate simulate_covariance(const SimConfig& cfg) {
  cfg.validate();
  const Index chunks = std::min(cfg.chunks, cfg.m);
  const Index base = cfg.m / chunks;
  const Index extra = cfg.m % chunks;

  std::vector<std::future<Eigen::MatrixXd>> parts;
  parts.reserve(static_cast<std::size_t>(chunks));
  for (Index c = 0; c < chunks; ++c) {
    const Index paths = base + (c < extra ? 1 : 0);
    parts.push_back(std::async(std::launch::async, simulate_chunk, std::cref(cfg), c, paths));
  }
  Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(cfg.n, cfg.n);
  for (auto& part : parts) lower += part.get();

  CovEstimate est;
  est.matrix = lower.selfadjointView<Eigen::Lower>();
  est.matrix /= static_cast<double>(cfg.m);
  est.m = cfg.m;
  est.config = cfg;
  return est;
}

double covariance_deviation(const CovEstimate& est) {
  const Index n = est.matrix.rows();
  const Eigen::MatrixXd expected = min_matrix<double>(n);
  const double variance = est.config.sigma * est.config.sigma;
  return (est.matrix / variance - expected).cwiseAbs().maxCoeff();
}

}  // namespace minmat
