#include "cfr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "cfr/ad_recovery.hpp"
#include "cfr/delay_recovery.hpp"
#include "cfr/lp_oracle.hpp"

namespace cfr {

namespace {

std::string format_number(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<BenchRow> bench_instance(const BenchConfig& config, int n, double p,
                                     int rep) {
  GenConfig gen = config.generator;
  gen.n = n;
  gen.sparsity = p;
  gen.seed = instance_seed(config.seed, n, p, rep);
  gen.with_anticipations = true;
  const RecoveryInstance instance = generate(gen);

  // Delay before anticipation-delay, so DEV can be filled in.
  std::vector<Mode> modes = config.modes;
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());

  std::vector<BenchRow> rows;
  for (Objective objective : config.objectives) {
    std::optional<double> z_delay;
    for (Mode mode : modes) {
      BenchRow row;
      row.objective = objective;
      row.mode = std::string(to_string(mode));
      row.sparsity = p;
      row.n = n;
      row.rep = rep;
      row.seed = gen.seed;
      try {
        RecoveryPlan plan;
        const Timing t = time_solve(
            [&] {
              plan = mode == Mode::Delay
                         ? solve_delay(instance, objective)
                         : solve_anticipation_delay(instance, objective).plan;
            },
            config.timing_repeats);
        row.time_ms = t.median_ms;
        row.time_mean_ms = t.mean_ms;
        row.z = plan.objective_value;
        row.z_prime = plan.combined_value;
        if (mode == Mode::Delay) {
          z_delay = plan.objective_value;
        } else if (z_delay) {
          row.dev = percentage_deviation(*z_delay, plan.objective_value);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }

    if (config.with_oracle && n <= config.oracle_max_n) {
      for (Mode mode : modes) {
        BenchRow row;
        row.objective = objective;
        row.mode = "lp-" + std::string(to_string(mode));
        row.sparsity = p;
        row.n = n;
        row.rep = rep;
        row.seed = gen.seed;
        try {
          LpResult result;
          const Timing t = time_solve(
              [&] {
                result = solve_lp(mode == Mode::Delay ? encode_delay_lp(instance, objective)
                                                      : encode_ad_lp(instance, objective));
              },
              1);
          row.time_ms = t.median_ms;
          row.time_mean_ms = t.mean_ms;
          if (result.status != LpStatus::Optimal) {
            row.error = "oracle did not reach an optimum";
          } else {
            const std::vector<double> u(result.values.begin(),
                                        result.values.begin() + n);
            row.z = evaluate_objective(instance, u, objective);
            if (mode == Mode::AnticipationDelay) row.z_prime = result.objective;
          }
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

Timing time_solve(const std::function<void()>& solve, int repeats) {
  using Clock = std::chrono::steady_clock;
  solve();
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(std::max(repeats, 1)));
  for (int i = 0; i < std::max(repeats, 1); ++i) {
    const auto start = Clock::now();
    solve();
    const auto stop = Clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  Timing t;
  t.mean_ms = std::accumulate(samples.begin(), samples.end(), 0.0) /
              static_cast<double>(samples.size());
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  t.median_ms = samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  return t;
}

std::uint64_t instance_seed(std::uint64_t base, int n, double sparsity, int rep) {
  const auto p_key = static_cast<std::uint64_t>(std::llround(sparsity * 1e6));
  return derive_seed(derive_seed(derive_seed(base, static_cast<std::uint64_t>(n)), p_key),
                     static_cast<std::uint64_t>(rep));
}

std::optional<double> percentage_deviation(double z_delay, double z_ad) {
  if (z_delay == 0.0) return z_ad == 0.0 ? std::optional<double>(0.0) : std::nullopt;
  return 100.0 * (z_delay - z_ad) / z_delay;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  struct Cell {
    int n;
    double p;
    int rep;
  };
  std::vector<Cell> cells;
  for (int n : config.sizes) {
    for (double p : config.sparsities) {
      for (int rep = 0; rep < config.reps; ++rep) cells.push_back({n, p, rep});
    }
  }

  std::vector<std::vector<BenchRow>> results(cells.size());
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      results[i] = bench_instance(config, cells[i].n, cells[i].p, cells[i].rep);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          results[i] = bench_instance(config, cells[i].n, cells[i].p, cells[i].rep);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  std::vector<BenchRow> rows;
  for (auto& part : results) {
    for (auto& row : part) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BenchRow> aggregate_rows(const std::vector<BenchRow>& rows) {
  struct Acc {
    BenchRow row;
    int count = 0;
    int z_prime_count = 0;
    int dev_count = 0;
    double z_prime = 0.0;
    double dev = 0.0;
  };
  using Key = std::tuple<int, std::string, double, int>;
  std::map<Key, Acc> groups;
  std::vector<Key> order;
  for (const BenchRow& r : rows) {
    if (r.kind != "run" || !r.error.empty()) continue;
    const Key key{static_cast<int>(r.objective), r.mode, r.sparsity, r.n};
    auto [it, inserted] = groups.try_emplace(key);
    Acc& acc = it->second;
    if (inserted) {
      order.push_back(key);
      acc.row.kind = "mean";
      acc.row.objective = r.objective;
      acc.row.mode = r.mode;
      acc.row.sparsity = r.sparsity;
      acc.row.n = r.n;
    }
    ++acc.count;
    acc.row.time_ms += r.time_ms;
    acc.row.time_mean_ms += r.time_mean_ms;
    acc.row.z += r.z;
    if (r.z_prime) {
      acc.z_prime += *r.z_prime;
      ++acc.z_prime_count;
    }
    if (r.dev) {
      acc.dev += *r.dev;
      ++acc.dev_count;
    }
  }
  std::vector<BenchRow> out;
  for (const Key& key : order) {
    Acc& acc = groups[key];
    const double c = acc.count;
    acc.row.time_ms /= c;
    acc.row.time_mean_ms /= c;
    acc.row.z /= c;
    if (acc.z_prime_count) acc.row.z_prime = acc.z_prime / acc.z_prime_count;
    if (acc.dev_count) acc.row.dev = acc.dev / acc.dev_count;
    out.push_back(acc.row);
  }
  return out;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchCsvHeader << "\r\n";
  for (const BenchRow& r : rows) {
    out << r.kind << ',' << to_string(r.objective) << ',' << csv_field(r.mode) << ','
        << format_number("%g", r.sparsity) << ',' << r.n << ','
        << (r.rep ? std::to_string(*r.rep) : "") << ','
        << (r.seed ? std::to_string(*r.seed) : "") << ','
        << format_number("%.3f", r.time_ms) << ','
        << format_number("%.3f", r.time_mean_ms) << ','
        << format_number("%.10g", r.z) << ','
        << (r.z_prime ? format_number("%.10g", *r.z_prime) : "") << ','
        << (r.dev ? format_number("%.6f", *r.dev) : "") << ','
        << csv_field(r.error) << "\r\n";
  }
  return out.str();
}

std::string format_tables(const std::vector<BenchRow>& mean_rows) {
  std::ostringstream out;
  for (Objective objective : kAllObjectives) {
    std::map<std::pair<double, int>, std::map<std::string, const BenchRow*>> cells;
    std::vector<std::string> modes;
    for (const BenchRow& r : mean_rows) {
      if (r.kind != "mean" || r.objective != objective) continue;
      cells[{r.sparsity, r.n}][r.mode] = &r;
      if (std::find(modes.begin(), modes.end(), r.mode) == modes.end()) {
        modes.push_back(r.mode);
      }
    }
    if (cells.empty()) continue;
    out << "objective " << to_string(objective) << " (mean ms per solve)\n";
    out << "     p     n";
    for (const auto& m : modes) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %22s", m.c_str());
      out << buf;
    }
    out << "       DEV\n";
    for (const auto& [key, by_mode] : cells) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%6.2f%6d", key.first, key.second);
      out << buf;
      std::optional<double> dev;
      for (const auto& m : modes) {
        auto it = by_mode.find(m);
        if (it == by_mode.end()) {
          std::snprintf(buf, sizeof buf, " %22s", "-");
        } else {
          std::snprintf(buf, sizeof buf, " %22.4f", it->second->time_ms);
          if (it->second->dev) dev = it->second->dev;
        }
        out << buf;
      }
      if (dev) {
        std::snprintf(buf, sizeof buf, " %9.3f\n", *dev);
      } else {
        std::snprintf(buf, sizeof buf, " %9s\n", "-");
      }
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cfr
