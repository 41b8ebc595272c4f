#include "cfr/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cfr/ad_recovery.hpp"

namespace cfr {

std::uint64_t InstanceRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("InstanceRng::below(0)");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t arc_count(int n, double sparsity) {
  const double pairs = static_cast<double>(n) * (n - 1);
  return static_cast<std::size_t>(std::floor((1.0 - sparsity) * pairs + 0.5));
}

GeneratorInfo generator_info(const GenConfig& config) {
  return {config.seed, config.sparsity, kGeneratorAlgorithm};
}

RecoveryInstance generate(const GenConfig& config) {
  if (config.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (!(config.sparsity >= 0.0 && config.sparsity < 1.0)) {
    throw std::invalid_argument("generate: sparsity must lie in [0, 1)");
  }
  const int n = config.n;
  const auto un = static_cast<std::size_t>(n);
  InstanceRng rng(config.seed);

  // Ordered pair index i <-> (i / (n-1), j) with j skipping the diagonal.
  const std::size_t pairs = un * (un - 1);
  const std::size_t m = std::min(arc_count(n, config.sparsity), pairs);
  std::vector<std::uint32_t> pool(pairs);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.below(pairs - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());

  RecoveryInstance inst;
  inst.graph.vehicle_count = n;
  inst.graph.arcs.reserve(m);
  for (std::uint32_t idx : pool) {
    const int tail = static_cast<int>(idx / (un - 1));
    const int rest = static_cast<int>(idx % (un - 1));
    const int head = rest < tail ? rest : rest + 1;
    inst.graph.arcs.push_back({tail, head, rng.uniform(0.0, 13.0)});
  }

  auto draw = [&](double lo, double hi) {
    std::vector<double> v(un);
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
  };
  inst.deviations = draw(-10.0, 10.0);
  inst.weights = draw(0.0, 1.0);
  inst.completion_times = draw(100.0, 110.0);
  inst.due_dates = draw(0.0, 10.0);
  if (config.with_anticipations) {
    SpeedModel speed{config.k_ratio, config.boost_limit,
                     draw(0.0, config.max_time_to_conflict)};
    inst.anticipation_bounds = anticipation_bounds(speed);
  }
  inst.alpha = config.alpha;
  inst.beta = config.beta;
  return inst;
}

}  // namespace cfr
