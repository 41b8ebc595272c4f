#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfr/core.hpp"
#include "cfr/instance_gen.hpp"

namespace cfr {

struct BenchConfig {
  std::vector<int> sizes{50, 100, 150, 200, 250, 300};
  std::vector<double> sparsities{0.0, 0.25, 0.5, 0.75};
  int reps = 10;
  std::vector<Objective> objectives{std::begin(kAllObjectives), std::end(kAllObjectives)};
  std::vector<Mode> modes{Mode::Delay, Mode::AnticipationDelay};
  std::uint64_t seed = 1;
  int timing_repeats = 5;   // timed solves per row, after one warm-up
  bool with_oracle = false; // also time the simplex on the explicit LP
  int oracle_max_n = 50;
  int jobs = 1;             // instances solved concurrently
  GenConfig generator;      // n, sparsity and seed are overridden per instance
};

/// One CSV line. kind is "run" for a single instance and "mean" for the
/// per-(objective, mode, p, n) average over replications.
struct BenchRow {
  std::string kind = "run";
  Objective objective = Objective::TotalDelay;
  std::string mode;
  double sparsity = 0.0;
  int n = 0;
  std::optional<int> rep;
  std::optional<std::uint64_t> seed;
  double time_ms = 0.0;       // median over timing repeats
  double time_mean_ms = 0.0;
  double z = 0.0;
  std::optional<double> z_prime;
  std::optional<double> dev;  // anticipation-delay rows, when delay also ran
  std::string error;
};

struct Timing {
  double median_ms = 0.0;
  double mean_ms = 0.0;
};

/// Runs `solve` once untimed, then `repeats` times under a monotonic clock.
Timing time_solve(const std::function<void()>& solve, int repeats);

/// Seed of replication `rep` for the (n, p) cell; independent of which other
/// cells are in the grid.
std::uint64_t instance_seed(std::uint64_t base, int n, double sparsity, int rep);

/// 100 (z_delay - z_ad) / z_delay; 0 when both are 0; nullopt when only the
/// delay value is 0.
std::optional<double> percentage_deviation(double z_delay, double z_ad);

std::vector<BenchRow> run_bench(const BenchConfig& config);
std::vector<BenchRow> aggregate_rows(const std::vector<BenchRow>& rows);

inline constexpr const char* kBenchCsvHeader =
    "kind,objective,mode,p,n,rep,seed,time_ms,time_mean_ms,z,z_prime,dev,error";

std::string to_csv(const std::vector<BenchRow>& rows);

/// Text tables, one per objective, with mean times per mode and mean DEV.
std::string format_tables(const std::vector<BenchRow>& mean_rows);

}  // namespace cfr
