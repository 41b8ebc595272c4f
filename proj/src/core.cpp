#include "cfr/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <cstdint>
#include <sstream>
#include <utility>

namespace cfr {

namespace {

std::string arc_location(const ConflictArc& arc) {
  return "arc (" + std::to_string(arc.tail) + "," + std::to_string(arc.head) +
         ")";
}

std::string vehicle_location(std::size_t h) {
  return "vehicle " + std::to_string(h);
}

void check_vector(ValidationReport& report, const char* name,
                  const std::optional<std::vector<double>>& values,
                  std::size_t n, bool nonnegative) {
  if (!values) return;
  if (values->size() != n) {
    report.add(std::string(name) + " size mismatch", name,
               static_cast<double>(values->size()));
    return;
  }
  for (std::size_t h = 0; h < n; ++h) {
    const double v = (*values)[h];
    if (!std::isfinite(v)) {
      report.add(std::string("non-finite ") + name, vehicle_location(h));
    } else if (nonnegative && v < 0.0) {
      report.add(std::string("negative ") + name, vehicle_location(h), -v);
    }
  }
}

const std::vector<double>& require_data(
    const std::optional<std::vector<double>>& data, const char* name) {
  if (!data) throw std::invalid_argument(std::string("missing ") + name);
  return *data;
}

}  // namespace

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::TotalDelay: return "total-delay";
    case Objective::WeightedDelay: return "weighted-delay";
    case Objective::Makespan: return "makespan";
    case Objective::TotalLateness: return "lateness";
  }
  return "unknown";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::Delay ? "delay" : "anticipation-delay";
}

std::optional<Objective> parse_objective(std::string_view name) {
  for (Objective o : kAllObjectives) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "delay") return Mode::Delay;
  if (name == "anticipation-delay") return Mode::AnticipationDelay;
  return std::nullopt;
}

void ValidationReport::add(std::string constraint, std::string location,
                           double magnitude) {
  violations.push_back({std::move(constraint), std::move(location), magnitude});
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << v.constraint << " at " << v.location;
    if (v.magnitude != 0.0) out << " (by " << v.magnitude << ")";
    out << '\n';
  }
  return out.str();
}

InvalidInstanceError::InvalidInstanceError(ValidationReport report)
    : std::invalid_argument("invalid instance: " + report.to_string()),
      report_(std::move(report)) {}

ValidationReport validate_instance(const RecoveryInstance& instance,
                                   std::optional<Objective> objective,
                                   Mode mode) {
  ValidationReport report;
  const int n = instance.vehicle_count();
  if (n < 1) {
    report.add("vehicle count must be positive", "graph", n);
    return report;
  }
  const auto un = static_cast<std::size_t>(n);

  // Adjacency bitmap for duplicate detection; sorted keys when n*n is too big.
  const bool use_bitmap = un <= 8192;
  std::vector<bool> bitmap(use_bitmap ? un * un : 0);
  std::vector<std::uint64_t> keys;
  for (const ConflictArc& arc : instance.graph.arcs) {
    const bool in_range =
        arc.tail >= 0 && arc.tail < n && arc.head >= 0 && arc.head < n;
    if (!in_range) report.add("index out of range", arc_location(arc));
    if (arc.tail == arc.head) report.add("self-loop", arc_location(arc));
    if (!std::isfinite(arc.slack)) {
      report.add("non-finite slack", arc_location(arc));
    } else if (arc.slack < 0.0) {
      report.add("negative slack", arc_location(arc), -arc.slack);
    }
    if (!in_range) continue;
    const std::uint64_t key = static_cast<std::uint64_t>(arc.tail) * un +
                              static_cast<std::uint64_t>(arc.head);
    if (!use_bitmap) {
      keys.push_back(key);
    } else if (bitmap[key]) {
      report.add("duplicate arc", arc_location(arc));
    } else {
      bitmap[key] = true;
    }
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i] == keys[i - 1]) {
      const ConflictArc dup{static_cast<int>(keys[i] / un),
                            static_cast<int>(keys[i] % un), 0.0};
      report.add("duplicate arc", arc_location(dup));
    }
  }

  if (instance.deviations.size() != un) {
    report.add("deviations size mismatch", "deviations",
               static_cast<double>(instance.deviations.size()));
  } else {
    for (std::size_t h = 0; h < un; ++h) {
      if (!std::isfinite(instance.deviations[h])) {
        report.add("non-finite deviation", vehicle_location(h));
      }
    }
  }
  check_vector(report, "weights", instance.weights, un, true);
  check_vector(report, "completion_times", instance.completion_times, un,
               false);
  check_vector(report, "due_dates", instance.due_dates, un, true);
  check_vector(report, "anticipation_bounds", instance.anticipation_bounds, un,
               true);

  if (!(instance.alpha > 0.0) || !std::isfinite(instance.alpha)) {
    report.add("alpha must be positive", "alpha", instance.alpha);
  }
  if (!(instance.beta >= 0.0) || !std::isfinite(instance.beta)) {
    report.add("beta must be nonnegative", "beta", instance.beta);
  }

  if (objective) {
    switch (*objective) {
      case Objective::TotalDelay: break;
      case Objective::WeightedDelay:
        if (!instance.weights) report.add("missing weights", "instance");
        break;
      case Objective::Makespan:
        if (!instance.completion_times) {
          report.add("missing completion_times", "instance");
        }
        break;
      case Objective::TotalLateness:
        if (!instance.due_dates) report.add("missing due_dates", "instance");
        break;
    }
  }
  if (mode == Mode::AnticipationDelay && !instance.anticipation_bounds) {
    report.add("missing anticipation_bounds", "instance");
  }
  return report;
}

void require_valid(const RecoveryInstance& instance, Objective objective,
                   Mode mode) {
  ValidationReport report = validate_instance(instance, objective, mode);
  if (!report.ok()) throw InvalidInstanceError(std::move(report));
}

double evaluate_objective(const RecoveryInstance& instance,
                          std::span<const double> u, Objective objective) {
  switch (objective) {
    case Objective::TotalDelay:
      return std::accumulate(u.begin(), u.end(), 0.0);
    case Objective::WeightedDelay: {
      const auto& w = require_data(instance.weights, "weights");
      double z = 0.0;
      for (std::size_t h = 0; h < u.size(); ++h) z += w.at(h) * u[h];
      return z;
    }
    case Objective::Makespan: {
      const auto& c = require_data(instance.completion_times, "completion_times");
      double z = -std::numeric_limits<double>::infinity();
      for (std::size_t h = 0; h < u.size(); ++h) z = std::max(z, c.at(h) + u[h]);
      return z;
    }
    case Objective::TotalLateness: {
      const auto& rho = require_data(instance.due_dates, "due_dates");
      double z = 0.0;
      for (std::size_t h = 0; h < u.size(); ++h) {
        z += std::max(0.0, u[h] - rho.at(h));
      }
      return z;
    }
  }
  throw std::invalid_argument("unknown objective");
}

void finalize_plan(const RecoveryInstance& instance, RecoveryPlan& plan) {
  const std::size_t n = plan.u.size();
  plan.delta.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    plan.delta[h] = plan.u[h] - instance.deviations[h];
  }
  if (plan.objective == Objective::TotalLateness) {
    const auto& rho = require_data(instance.due_dates, "due_dates");
    std::vector<double> y(n);
    for (std::size_t h = 0; h < n; ++h) y[h] = std::max(0.0, plan.u[h] - rho[h]);
    plan.lateness = std::move(y);
  } else {
    plan.lateness.reset();
  }
  plan.objective_value = evaluate_objective(instance, plan.u, plan.objective);
  if (plan.mode == Mode::AnticipationDelay) {
    const double total_x = std::accumulate(plan.x.begin(), plan.x.end(), 0.0);
    plan.combined_value =
        instance.alpha * plan.objective_value + instance.beta * total_x;
  } else {
    plan.combined_value.reset();
  }
}

RecoveryPlan uniform_delay_solution(const RecoveryInstance& instance,
                                    Objective objective) {
  const auto n = static_cast<std::size_t>(instance.vehicle_count());
  if (n == 0 || instance.deviations.size() != n) {
    throw std::invalid_argument("uniform_delay_solution: need n >= 1 deviations");
  }
  const double top =
      *std::max_element(instance.deviations.begin(), instance.deviations.end());
  RecoveryPlan plan;
  plan.objective = objective;
  plan.mode = Mode::Delay;
  plan.u.assign(n, top);
  plan.x.assign(n, 0.0);
  finalize_plan(instance, plan);
  return plan;
}

ValidationReport check_feasibility(const RecoveryInstance& instance,
                                   const RecoveryPlan& plan,
                                   double tolerance) {
  const auto n = static_cast<std::size_t>(instance.vehicle_count());
  if (plan.u.size() != n || plan.x.size() != n ||
      instance.deviations.size() != n) {
    throw std::invalid_argument("check_feasibility: plan has " +
                                std::to_string(plan.u.size()) +
                                " vehicles, instance has " + std::to_string(n));
  }
  const bool anticipations = plan.mode == Mode::AnticipationDelay;

  ValidationReport report;
  for (const ConflictArc& arc : instance.graph.arcs) {
    const auto h = static_cast<std::size_t>(arc.tail);
    const auto k = static_cast<std::size_t>(arc.head);
    const double lhs = anticipations
                           ? plan.u[h] - plan.x[h] - plan.u[k] + plan.x[k]
                           : plan.u[h] - plan.u[k];
    if (lhs > arc.slack + tolerance) {
      report.add("conflict", arc_location(arc), lhs - arc.slack);
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    const double gap = instance.deviations[h] - plan.u[h];
    if (gap > tolerance) report.add("u >= d", vehicle_location(h), gap);
    if (anticipations) {
      if (plan.x[h] < -tolerance) {
        report.add("x >= 0", vehicle_location(h), -plan.x[h]);
      }
      // Missing bounds mean unbounded anticipations.
      if (instance.anticipation_bounds) {
        const double over = plan.x[h] - (*instance.anticipation_bounds)[h];
        if (over > tolerance) report.add("x <= L", vehicle_location(h), over);
      }
    } else if (std::abs(plan.x[h]) > tolerance) {
      report.add("x = 0 in delay mode", vehicle_location(h),
                 std::abs(plan.x[h]));
    }
  }
  return report;
}

}  // namespace cfr
