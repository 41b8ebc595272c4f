#include <gtest/gtest.h>

#include <sstream>

#include "cfr/bench.hpp"

using namespace cfr;

namespace {

std::vector<std::string> lines(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = csv.find("\r\n", start)) != std::string::npos; start = pos + 2) {
    out.push_back(csv.substr(start, pos - start));
  }
  return out;
}

std::string without_times(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
  fields[7] = fields[8] = "";
  std::string out;
  for (const auto& f : fields) out += f + ",";
  return out;
}

BenchConfig small_grid() {
  BenchConfig config;
  config.sizes = {50};
  config.sparsities = {0.0};
  config.reps = 10;
  config.timing_repeats = 1;
  return config;
}

}  // namespace

TEST(Bench, GridArithmetic) {
  const std::vector<BenchRow> rows = run_bench(small_grid());
  EXPECT_EQ(rows.size(), 80u);
  const std::vector<BenchRow> means = aggregate_rows(rows);
  EXPECT_EQ(means.size(), 8u);
  for (const BenchRow& r : rows) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_GE(r.time_ms, 0.0);
    if (r.mode == "anticipation-delay") {
      ASSERT_TRUE(r.dev.has_value());
      EXPECT_GE(*r.dev, -1e-9);
      EXPECT_TRUE(r.z_prime.has_value());
    } else {
      EXPECT_FALSE(r.dev.has_value());
    }
  }
}

TEST(Bench, MeanIsArithmeticMean) {
  const std::vector<BenchRow> rows = run_bench(small_grid());
  const std::vector<BenchRow> means = aggregate_rows(rows);
  for (const BenchRow& m : means) {
    double time = 0.0, z = 0.0;
    int count = 0;
    for (const BenchRow& r : rows) {
      if (r.objective == m.objective && r.mode == m.mode) {
        time += r.time_ms;
        z += r.z;
        ++count;
      }
    }
    EXPECT_EQ(count, 10);
    EXPECT_NEAR(m.time_ms, time / count, 1e-12);
    EXPECT_NEAR(m.z, z / count, 1e-9);
  }
}

TEST(Bench, ZeroBoundsGiveZeroDev) {
  BenchConfig config = small_grid();
  config.sizes = {20};
  config.reps = 3;
  config.generator.max_time_to_conflict = 0.0;
  for (const BenchRow& r : run_bench(config)) {
    if (r.mode == "anticipation-delay") {
      EXPECT_EQ(r.dev, 0.0);
    }
  }
}

TEST(Bench, NonTimeColumnsAreReproducible) {
  BenchConfig config = small_grid();
  config.sizes = {10, 20};
  config.sparsities = {0.25, 0.5};
  config.reps = 2;
  const auto a = lines(to_csv(run_bench(config)));
  config.jobs = 2;
  const auto b = lines(to_csv(run_bench(config)));
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a[0], kBenchCsvHeader);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_EQ(without_times(a[i]), without_times(b[i]));
}

TEST(Bench, CsvQuotingAndDev) {
  BenchRow row;
  row.mode = "delay";
  row.error = "bad, \"quoted\"";
  const std::string csv = to_csv({row});
  EXPECT_NE(csv.find("\"bad, \"\"quoted\"\"\""), std::string::npos);
  EXPECT_EQ(percentage_deviation(6.0, 4.0).value(), 100.0 * 2.0 / 6.0);
  EXPECT_EQ(percentage_deviation(0.0, 0.0).value(), 0.0);
  EXPECT_FALSE(percentage_deviation(0.0, 1.0).has_value());
}

TEST(Bench, OracleRowsAgree) {
  BenchConfig config = small_grid();
  config.sizes = {8};
  config.reps = 2;
  config.with_oracle = true;
  const std::vector<BenchRow> rows = run_bench(config);
  for (const BenchRow& r : rows) {
    if (r.mode.rfind("lp-", 0) != 0) continue;
    ASSERT_TRUE(r.error.empty());
    const std::string engine_mode = r.mode.substr(3);
    for (const BenchRow& e : rows) {
      if (e.mode == engine_mode && e.objective == r.objective && e.rep == r.rep) {
        if (r.z_prime) {
          EXPECT_NEAR(*e.z_prime, *r.z_prime, 1e-6);
        } else {
          EXPECT_NEAR(e.z, r.z, 1e-6);
        }
      }
    }
  }
}
