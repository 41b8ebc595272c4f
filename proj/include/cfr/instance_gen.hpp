#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cfr/core.hpp"

namespace cfr {

/// Random instance parameters. `sparsity` is the fraction of ordered vehicle
/// pairs without a conflict arc: the graph gets round((1-p)(n^2-n)) arcs,
/// rounding half up.
struct GenConfig {
  int n = 50;
  double sparsity = 0.0;
  std::uint64_t seed = 1;
  bool with_anticipations = false;
  // Anticipation bounds come from the two-speed model with a uniform
  // time-to-conflict in [0, max_time_to_conflict].
  double k_ratio = 1.5;
  double boost_limit = 10.0;
  double max_time_to_conflict = 20.0;
  double alpha = 1000.0;
  double beta = 1.0;
};

/// Provenance recorded in instance files.
struct GeneratorInfo {
  std::uint64_t seed = 0;
  double sparsity = 0.0;
  std::string algorithm;

  friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

/// Name of the bit generator plus the way its output is mapped to reals and
/// bounded integers; stored with every generated instance.
inline constexpr const char* kGeneratorAlgorithm =
    "mt19937_64;u01=(x>>11)*2^-53;int=rejection";

/// Uniform draws whose mapping from raw 64-bit output is fixed here rather
/// than left to the standard library's distributions, so instances are
/// reproducible across toolchains.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer applied to (base, index); the seed of the index-th
/// instance in a batch.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// round((1-p)(n^2-n)), rounding half up.
std::size_t arc_count(int n, double sparsity);

/// Arcs are a uniform sample without replacement of the ordered pairs,
/// sorted by (tail, head). Values are drawn uniformly: deviations in
/// [-10, 10], slacks in [0, 13], weights in [0, 1], completion times in
/// [100, 110], due dates in [0, 10]. Throws std::invalid_argument for
/// n < 1 or sparsity outside [0, 1).
RecoveryInstance generate(const GenConfig& config);

GeneratorInfo generator_info(const GenConfig& config);

}  // namespace cfr
