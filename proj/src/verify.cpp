#include "cfr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cfr/ad_recovery.hpp"
#include "cfr/delay_recovery.hpp"

namespace cfr {

bool VerifyReport::passed(double tolerance) const {
  return oracle_status == LpStatus::Optimal && gap <= tolerance && feasibility.ok() &&
         complementarity.ok();
}

ValidationReport check_complementarity(const RecoveryInstance& instance,
                                       const RecoveryPlan& plan, double tolerance) {
  ValidationReport report;
  for (std::size_t h = 0; h < plan.u.size(); ++h) {
    const double delay = std::max(0.0, plan.u[h] - instance.deviations[h]);
    const double overlap = std::min(delay, plan.x[h]);
    if (overlap > tolerance) {
      report.add("min(delta, x) = 0", "vehicle " + std::to_string(h), overlap);
    }
  }
  return report;
}

VerifyReport verify(const RecoveryInstance& instance, const VerifyOptions& options) {
  require_valid(instance, options.objective, options.mode);
  if (instance.vehicle_count() > options.oracle_limit) {
    throw OracleLimitError("instance has " + std::to_string(instance.vehicle_count()) +
                           " vehicles, oracle limit is " +
                           std::to_string(options.oracle_limit));
  }

  VerifyReport report;
  if (options.plan) {
    report.plan = *options.plan;
    report.plan.mode = options.mode;
    report.plan.objective = options.objective;
  } else if (options.mode == Mode::Delay) {
    report.plan = solve_delay(instance, options.objective);
  } else {
    report.plan = solve_anticipation_delay(instance, options.objective).plan;
  }
  const RecoveryPlan& plan = report.plan;

  report.feasibility = check_feasibility(instance, plan, options.feasibility_tolerance);
  if (plan.delta.size() == plan.u.size()) {
    for (std::size_t h = 0; h < plan.u.size(); ++h) {
      const double err = std::abs(plan.delta[h] - (plan.u[h] - instance.deviations[h]));
      if (err > options.feasibility_tolerance) {
        report.feasibility.add("delta = u - d", "vehicle " + std::to_string(h), err);
      }
    }
  } else {
    report.feasibility.add("delta size mismatch", "plan",
                           static_cast<double>(plan.delta.size()));
  }

  const double z = evaluate_objective(instance, plan.u, options.objective);
  if (options.mode == Mode::Delay) {
    report.engine_value = z;
  } else {
    const double total_x = std::accumulate(plan.x.begin(), plan.x.end(), 0.0);
    report.engine_value = instance.alpha * z + instance.beta * total_x;
    report.complementarity =
        check_complementarity(instance, plan, options.feasibility_tolerance);
  }

  const LinearProgram lp = options.mode == Mode::Delay
                               ? encode_delay_lp(instance, options.objective)
                               : encode_ad_lp(instance, options.objective);
  const LpResult oracle = solve_lp(lp);
  report.oracle_status = oracle.status;
  report.oracle_value = oracle.objective;
  report.gap = oracle.status == LpStatus::Optimal
                   ? std::abs(report.engine_value - oracle.objective)
                   : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace cfr
