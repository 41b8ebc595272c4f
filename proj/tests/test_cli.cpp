#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "cfr/io.hpp"
#include "fixtures.hpp"

using namespace cfr;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string command = std::string(CFR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cfr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const RecoveryInstance& inst) {
    const auto path = dir_ / name;
    write_instance_file(path, InstanceFile{inst, std::nullopt, std::nullopt});
    return path.string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateWritesCompleteGraphs) {
  const CliResult r = run("generate --n 50 --p 0 --count 10 --seed 4 --out " + dir_.string());
  ASSERT_EQ(r.code, 0) << r.out;
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    EXPECT_EQ(read_instance_file(entry.path()).instance.graph.arcs.size(), 2450u);
    ++files;
  }
  EXPECT_EQ(files, 10);
}

TEST_F(Cli, GenerateIsDeterministic) {
  ASSERT_EQ(run("generate --n 10 --p 0.99 --seed 8 --out " + (dir_ / "a").string()).code, 0);
  ASSERT_EQ(run("generate --n 10 --p 0.99 --seed 8 --out " + (dir_ / "b").string()).code, 0);
  const std::string a = read_text_file(dir_ / "a" / "n10_p0.99_0.json");
  EXPECT_EQ(a, read_text_file(dir_ / "b" / "n10_p0.99_0.json"));
  EXPECT_EQ(parse_instance(a).instance.graph.arcs.size(), 1u);
}

TEST_F(Cli, SolveSevenVehicles) {
  const std::string path = write("seven.json", fixtures::seven_vehicle_instance());
  const std::string plan_path = (dir_ / "plan.json").string();
  const CliResult r = run("solve " + path + " --out " + plan_path);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("z=12"), std::string::npos);
  const RecoveryPlan plan = read_plan_file(plan_path);
  EXPECT_EQ(plan.u, (std::vector<double>{5, 4, 1, 2, 0, 0, 0}));

  const CliResult ad = run("solve " + path + " --mode anticipation-delay --out " + plan_path);
  ASSERT_EQ(ad.code, 0) << ad.out;
  const RecoveryPlan ad_plan = read_plan_file(plan_path);
  EXPECT_EQ(ad_plan.objective_value, 12.0);
  EXPECT_EQ(ad_plan.x, std::vector<double>(7, 0.0));
}

TEST_F(Cli, SolveReportsMissingData) {
  RecoveryInstance inst = fixtures::seven_vehicle_instance();
  inst.due_dates.reset();
  const CliResult r = run("solve " + write("bad.json", inst) + " --objective lateness");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("missing due_dates"), std::string::npos);
  EXPECT_EQ(run("solve " + (dir_ / "none.json").string()).code, 2);
  EXPECT_EQ(run("solve " + write("ok.json", inst) + " --objective quickest").code, 2);
}

TEST_F(Cli, VerifyAgreesWithOracle) {
  const std::string fig = write("seven.json", fixtures::seven_vehicle_instance());
  for (const char* o : {"total-delay", "weighted-delay", "makespan", "lateness"}) {
    const CliResult r = run("verify " + fig + " --objective " + o);
    EXPECT_EQ(r.code, 0) << o << "\n" << r.out;
  }
  const std::string two = write("two.json", fixtures::two_vehicle_instance());
  const CliResult r = run("verify " + two + " --mode anticipation-delay --alpha 1000 --beta 1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("oracle 4002"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsCorruptedPlan) {
  const std::string fig = write("seven.json", fixtures::seven_vehicle_instance());
  const std::string plan_path = (dir_ / "plan.json").string();
  ASSERT_EQ(run("solve " + fig + " --out " + plan_path).code, 0);
  RecoveryPlan plan = read_plan_file(plan_path);
  plan.u[1] = 3.0;
  plan.delta[1] = 2.0;
  write_plan_file(plan_path, plan);
  const CliResult r = run("verify " + fig + " --plan " + plan_path);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("conflict"), std::string::npos);
}

TEST_F(Cli, VerifyRefusesLargeInstances) {
  const CliResult g = run("generate --n 120 --p 0.75 --out " + dir_.string());
  ASSERT_EQ(g.code, 0);
  const CliResult r = run("verify " + (dir_ / "n120_p0.75_0.json").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("oracle limit"), std::string::npos);
}

TEST_F(Cli, BenchWritesCsv) {
  const std::string csv = (dir_ / "bench.csv").string();
  const CliResult r = run("bench --sizes 20 --sparsities 0,0.5 --reps 2 --repeats 1 --out " + csv);
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string text = read_text_file(csv);
  EXPECT_EQ(text.rfind("kind,objective,mode,p,n,rep,seed", 0), 0u);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = text.find("\r\n", pos)) != std::string::npos; pos += 2) ++rows;
  // header + 2 sparsities x 2 reps x 4 objectives x 2 modes + 16 means
  EXPECT_EQ(rows, 1u + 32u + 16u);
  EXPECT_NE(r.out.find("DEV"), std::string::npos);
}
