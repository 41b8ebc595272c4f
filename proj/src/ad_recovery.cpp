#include "cfr/ad_recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cfr/delay_recovery.hpp"

namespace cfr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-vehicle ceiling on u that keeps the objective at its optimum, given the
// componentwise least optimal shifts `least_u`.
std::vector<double> optimal_ceilings(const RecoveryInstance& instance,
                                     Objective objective,
                                     const std::vector<double>& least_u) {
  const std::size_t n = least_u.size();
  std::vector<double> ceiling(n);
  switch (objective) {
    case Objective::TotalDelay:
      ceiling = least_u;
      break;
    case Objective::WeightedDelay: {
      const auto& w = *instance.weights;
      for (std::size_t h = 0; h < n; ++h) {
        ceiling[h] = w[h] > 0.0 ? least_u[h] : kInf;
      }
      break;
    }
    case Objective::Makespan: {
      const auto& c = *instance.completion_times;
      const double makespan = evaluate_objective(instance, least_u, objective);
      for (std::size_t h = 0; h < n; ++h) ceiling[h] = makespan - c[h];
      break;
    }
    case Objective::TotalLateness: {
      const auto& rho = *instance.due_dates;
      for (std::size_t h = 0; h < n; ++h) ceiling[h] = rho[h];
      break;
    }
  }
  // Net shifts above the largest deviation never reduce any anticipation,
  // and the clamp keeps every ceiling finite.
  const double top =
      *std::max_element(instance.deviations.begin(), instance.deviations.end());
  for (std::size_t h = 0; h < n; ++h) {
    ceiling[h] = std::max(least_u[h], std::min(ceiling[h], top));
  }
  return ceiling;
}

}  // namespace

double anticipation_bound(double k_ratio, double boost_limit,
                          double time_to_conflict) {
  if (!(k_ratio > 1.0) || !std::isfinite(k_ratio)) {
    throw std::invalid_argument("anticipation_bound: speed ratio must be > 1");
  }
  if (!(boost_limit >= 0.0) || !(time_to_conflict >= 0.0)) {
    throw std::invalid_argument(
        "anticipation_bound: boost limit and time to conflict must be >= 0");
  }
  return std::min((k_ratio - 1.0) * boost_limit,
                  (k_ratio - 1.0) / k_ratio * time_to_conflict);
}

std::vector<double> anticipation_bounds(const SpeedModel& model) {
  std::vector<double> bounds;
  bounds.reserve(model.time_to_conflict.size());
  for (double tc : model.time_to_conflict) {
    bounds.push_back(anticipation_bound(model.k_ratio, model.boost_limit, tc));
  }
  return bounds;
}

ConflictGraph reverse_graph(const ConflictGraph& graph) {
  ConflictGraph reversed{graph.vehicle_count, {}};
  reversed.arcs.reserve(graph.arcs.size());
  for (const ConflictArc& a : graph.arcs) {
    reversed.arcs.push_back({a.head, a.tail, a.slack});
  }
  return reversed;
}

RecoveryPlan solve_anticipations_only(const RecoveryInstance& instance,
                                      Objective objective) {
  require_valid(instance, objective, Mode::Delay);
  const auto& d = instance.deviations;
  const std::size_t n = d.size();

  std::vector<double> neg_d(n);
  for (std::size_t h = 0; h < n; ++h) neg_d[h] = 0.0 - d[h];
  const std::vector<double> shifted =
      least_feasible_shifts(reverse_graph(instance.graph), neg_d);

  RecoveryPlan plan;
  plan.objective = objective;
  plan.mode = Mode::AnticipationDelay;
  plan.u = d;
  plan.x.resize(n);
  for (std::size_t h = 0; h < n; ++h) plan.x[h] = std::max(0.0, shifted[h] + d[h]);
  finalize_plan(instance, plan);
  return plan;
}

ADSolution solve_anticipation_delay(const RecoveryInstance& instance,
                                    Objective objective) {
  require_valid(instance, objective, Mode::AnticipationDelay);
  const auto& d = instance.deviations;
  const auto& bound = *instance.anticipation_bounds;
  const std::size_t n = d.size();

  // Stage 1: full anticipation everywhere.
  std::vector<double> lower(n);
  for (std::size_t h = 0; h < n; ++h) lower[h] = d[h] - bound[h];
  ADSolution solution;
  solution.stage1_net = least_feasible_shifts(instance.graph, lower);
  const auto& net1 = solution.stage1_net;

  RecoveryPlan& plan = solution.plan;
  plan.objective = objective;
  plan.mode = Mode::AnticipationDelay;
  plan.u.resize(n);
  plan.x.resize(n);

  if (instance.beta == 0.0) {
    for (std::size_t h = 0; h < n; ++h) {
      plan.u[h] = std::max(d[h], net1[h]);
      plan.x[h] = std::min(bound[h], std::max(0.0, d[h] - net1[h]));
    }
  } else {
    std::vector<double> least_u(n);
    for (std::size_t h = 0; h < n; ++h) least_u[h] = std::max(d[h], net1[h]);

    // Stage 2: largest net shifts under the optimal ceilings, i.e. the least
    // solution of the same problem on the reverse graph with bounds -ceiling.
    std::vector<double> neg_ceiling = optimal_ceilings(instance, objective, least_u);
    for (double& c : neg_ceiling) c = 0.0 - c;
    const std::vector<double> neg_net =
        least_feasible_shifts(reverse_graph(instance.graph), neg_ceiling);
    for (std::size_t h = 0; h < n; ++h) {
      const double net = 0.0 - neg_net[h];
      plan.x[h] = std::min(bound[h], std::max(0.0, d[h] - net));
    }

    // Stage 3: least delays compatible with those anticipations.
    for (std::size_t h = 0; h < n; ++h) lower[h] = d[h] - plan.x[h];
    const std::vector<double> net3 = least_feasible_shifts(instance.graph, lower);
    for (std::size_t h = 0; h < n; ++h) plan.u[h] = net3[h] + plan.x[h];
  }

  // Either delta or x is zero at an optimal vertex; this only absorbs
  // rounding residue.
  for (std::size_t h = 0; h < n; ++h) {
    const double both = std::min(plan.u[h] - d[h], plan.x[h]);
    if (both > 0.0) {
      plan.u[h] -= both;
      plan.x[h] -= both;
    }
  }

  finalize_plan(instance, plan);
  solution.stage2_shift.resize(n);
  for (std::size_t h = 0; h < n; ++h) {
    solution.stage2_shift[h] = plan.x[h] - plan.u[h];
  }
  return solution;
}

}  // namespace cfr
