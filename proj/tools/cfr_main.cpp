// cfr: generate, solve, benchmark and verify feasibility-recovery instances.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfr/ad_recovery.hpp"
#include "cfr/bench.hpp"
#include "cfr/delay_recovery.hpp"
#include "cfr/instance_gen.hpp"
#include "cfr/io.hpp"
#include "cfr/nominal_plan.hpp"
#include "cfr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cfr::Objective objective_arg(const std::string& name) {
  if (auto o = cfr::parse_objective(name)) return *o;
  throw InputError("unknown objective '" + name +
                   "' (total-delay, weighted-delay, makespan, lateness)");
}

cfr::Mode mode_arg(const std::string& name) {
  if (auto m = cfr::parse_mode(name)) return *m;
  throw InputError("unknown mode '" + name + "' (delay, anticipation-delay)");
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return buf;
}

struct InstanceArgs {
  std::string path;
  std::optional<double> alpha;
  std::optional<double> beta;
  bool derive_slacks = false;
  double headway = 0.0;
};

void add_instance_args(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("instance", args.path, "Instance JSON file")->required();
  cmd->add_option("--alpha", args.alpha, "Weight of the performance measure (overrides file)");
  cmd->add_option("--beta", args.beta, "Weight of total anticipation (overrides file)");
  cmd->add_flag("--derive-slacks", args.derive_slacks,
                "Rebuild the conflict arcs from the file's nominal_plan");
  cmd->add_option("--headway", args.headway, "Safety headway used with --derive-slacks");
}

cfr::RecoveryInstance load_instance(const InstanceArgs& args) {
  cfr::InstanceFile file = cfr::read_instance_file(args.path);
  if (args.alpha) file.instance.alpha = *args.alpha;
  if (args.beta) file.instance.beta = *args.beta;
  if (args.derive_slacks) {
    if (!file.nominal_plan) throw InputError("--derive-slacks: file has no nominal_plan");
    if (file.nominal_plan->vehicle_count() != file.instance.vehicle_count()) {
      throw InputError("nominal_plan vehicle count differs from n");
    }
    file.instance.graph = cfr::compute_slacks(*file.nominal_plan, args.headway);
  }
  return std::move(file.instance);
}

int run_generate(int n, double p, std::uint64_t seed, int count, bool anticipations,
                 const cfr::GenConfig& speed, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    cfr::GenConfig config = speed;
    config.n = n;
    config.sparsity = p;
    config.seed = cfr::derive_seed(seed, static_cast<std::uint64_t>(i));
    config.with_anticipations = anticipations;
    cfr::InstanceFile file{cfr::generate(config), std::nullopt, cfr::generator_info(config)};
    const auto path = std::filesystem::path(out_dir) /
                      ("n" + std::to_string(n) + "_p" + format_p(p) + "_" +
                       std::to_string(i) + ".json");
    cfr::write_instance_file(path, file);
    std::cout << path.string() << " arcs=" << file.instance.graph.arcs.size() << '\n';
  }
  return kExitOk;
}

int run_solve(const InstanceArgs& args, cfr::Objective objective, cfr::Mode mode,
              const std::string& out) {
  const cfr::RecoveryInstance instance = load_instance(args);
  cfr::RecoveryPlan plan;
  const cfr::Timing t = cfr::time_solve(
      [&] {
        plan = mode == cfr::Mode::Delay
                   ? cfr::solve_delay(instance, objective)
                   : cfr::solve_anticipation_delay(instance, objective).plan;
      },
      1);
  const double total_x = std::accumulate(plan.x.begin(), plan.x.end(), 0.0);
  std::cout << "objective=" << cfr::to_string(objective) << " mode=" << cfr::to_string(mode)
            << " n=" << instance.vehicle_count() << " z=" << plan.objective_value;
  if (plan.combined_value) std::cout << " z_prime=" << *plan.combined_value;
  std::cout << " sum_x=" << total_x << " time_ms=" << t.median_ms << '\n';
  if (out.empty()) {
    std::cout << cfr::dump_plan(plan);
  } else {
    cfr::write_plan_file(out, plan);
  }
  return kExitOk;
}

int run_verify(const InstanceArgs& args, cfr::VerifyOptions options,
               const std::string& plan_path) {
  const cfr::RecoveryInstance instance = load_instance(args);
  if (!plan_path.empty()) options.plan = cfr::read_plan_file(plan_path);
  const cfr::VerifyReport report = cfr::verify(instance, options);
  std::cout.precision(12);
  std::cout << "engine " << report.engine_value << '\n'
            << "oracle " << report.oracle_value
            << (report.oracle_status == cfr::LpStatus::Optimal ? "" : " (not optimal)") << '\n'
            << "gap " << report.gap << " (tolerance " << options.tolerance << ")\n"
            << "feasibility " << (report.feasibility.ok() ? "ok" : "VIOLATED") << '\n'
            << report.feasibility.to_string();
  if (options.mode == cfr::Mode::AnticipationDelay) {
    std::cout << "complementarity " << (report.complementarity.ok() ? "ok" : "VIOLATED")
              << '\n'
              << report.complementarity.to_string();
  }
  const bool ok = report.passed(options.tolerance);
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_bench(const cfr::BenchConfig& config, const std::string& out) {
  std::vector<cfr::BenchRow> rows = cfr::run_bench(config);
  std::vector<cfr::BenchRow> means = cfr::aggregate_rows(rows);
  std::cout << cfr::format_tables(means);
  int errors = 0;
  for (const auto& r : rows) errors += !r.error.empty();
  rows.insert(rows.end(), means.begin(), means.end());
  if (!out.empty()) cfr::write_text_file(out, cfr::to_csv(rows));
  if (errors) std::cerr << errors << " run(s) recorded an error\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility recovery for conflict-free vehicle plans"};
  app.require_subcommand(1);

  // generate
  int gen_n = 50;
  double gen_p = 0.0;
  std::uint64_t gen_seed = 1;
  int gen_count = 1;
  bool gen_anticipations = false;
  std::string gen_out;
  cfr::GenConfig speed;
  auto* gen = app.add_subcommand("generate", "Write random instances");
  gen->add_option("--n", gen_n, "Vehicles")->check(CLI::PositiveNumber);
  gen->add_option("--p", gen_p, "Sparsity: fraction of ordered pairs without an arc");
  gen->add_option("--seed", gen_seed, "Base seed");
  gen->add_option("--count", gen_count, "Number of instances")->check(CLI::PositiveNumber);
  gen->add_flag("--with-anticipations", gen_anticipations, "Include anticipation bounds");
  gen->add_option("--k-ratio", speed.k_ratio, "Boost/nominal speed ratio");
  gen->add_option("--boost-limit", speed.boost_limit, "Longest boost duration");
  gen->add_option("--max-time-to-conflict", speed.max_time_to_conflict,
                  "Upper end of the uniform time-to-conflict draw");
  gen->add_option("--out", gen_out, "Output directory")->required();

  // solve
  InstanceArgs solve_args;
  std::string solve_objective = "total-delay";
  std::string solve_mode = "delay";
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  add_instance_args(solve, solve_args);
  solve->add_option("--objective", solve_objective, "total-delay|weighted-delay|makespan|lateness");
  solve->add_option("--mode", solve_mode, "delay|anticipation-delay");
  solve->add_option("--out", solve_out, "Plan JSON output (stdout when omitted)");

  // verify
  InstanceArgs verify_args;
  std::string verify_objective = "total-delay";
  std::string verify_mode = "delay";
  std::string verify_plan;
  cfr::VerifyOptions verify_options;
  auto* ver = app.add_subcommand("verify", "Compare the engine with the simplex oracle");
  add_instance_args(ver, verify_args);
  ver->add_option("--objective", verify_objective, "total-delay|weighted-delay|makespan|lateness");
  ver->add_option("--mode", verify_mode, "delay|anticipation-delay");
  ver->add_option("--tolerance", verify_options.tolerance, "Allowed objective gap");
  ver->add_option("--oracle-limit", verify_options.oracle_limit, "Largest n given to the oracle");
  ver->add_option("--plan", verify_plan, "Check this plan file instead of solving");

  // bench
  cfr::BenchConfig bench_config;
  std::vector<std::string> bench_objectives{"all"};
  std::vector<std::string> bench_modes{"delay", "anticipation-delay"};
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Timing grid over generated instances");
  bench->add_option("--sizes", bench_config.sizes, "Fleet sizes")->delimiter(',');
  bench->add_option("--sparsities", bench_config.sparsities, "Sparsity levels")->delimiter(',');
  bench->add_option("--reps", bench_config.reps, "Instances per (n, p)");
  bench->add_option("--objectives", bench_objectives, "Objectives or 'all'")->delimiter(',');
  bench->add_option("--modes", bench_modes, "Modes")->delimiter(',');
  bench->add_option("--seed", bench_config.seed, "Base seed");
  bench->add_option("--repeats", bench_config.timing_repeats, "Timed solves per row");
  bench->add_flag("--oracle", bench_config.with_oracle, "Also time the simplex oracle");
  bench->add_option("--oracle-max-n", bench_config.oracle_max_n, "Largest n for the oracle");
  bench->add_option("--jobs", bench_config.jobs, "Instances solved in parallel");
  bench->add_option("--k-ratio", bench_config.generator.k_ratio, "Boost/nominal speed ratio");
  bench->add_option("--boost-limit", bench_config.generator.boost_limit, "Longest boost");
  bench->add_option("--max-time-to-conflict", bench_config.generator.max_time_to_conflict,
                    "Upper end of the time-to-conflict draw");
  bench->add_option("--out", bench_out, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen) {
      return run_generate(gen_n, gen_p, gen_seed, gen_count, gen_anticipations, speed,
                          gen_out);
    }
    if (*solve) {
      return run_solve(solve_args, objective_arg(solve_objective), mode_arg(solve_mode),
                       solve_out);
    }
    if (*ver) {
      verify_options.objective = objective_arg(verify_objective);
      verify_options.mode = mode_arg(verify_mode);
      return run_verify(verify_args, verify_options, verify_plan);
    }
    if (*bench) {
      bench_config.objectives.clear();
      for (const auto& name : bench_objectives) {
        if (name == "all") {
          bench_config.objectives.assign(std::begin(cfr::kAllObjectives),
                                         std::end(cfr::kAllObjectives));
        } else {
          bench_config.objectives.push_back(objective_arg(name));
        }
      }
      bench_config.modes.clear();
      for (const auto& name : bench_modes) bench_config.modes.push_back(mode_arg(name));
      return run_bench(bench_config, bench_out);
    }
  } catch (const cfr::InvalidInstanceError& e) {
    std::cerr << "error: " << e.report().to_string();
    return kExitInputError;
  } catch (const cfr::OracleLimitError& e) {
    std::cerr << "refusing to run the oracle: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
