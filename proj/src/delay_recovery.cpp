#include "cfr/delay_recovery.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfr {

namespace {

std::vector<WeightedArc> core_arcs(const ConflictGraph& graph,
                                   std::size_t extra_capacity) {
  std::vector<WeightedArc> arcs;
  arcs.reserve(graph.arcs.size() + extra_capacity);
  for (const ConflictArc& a : graph.arcs) arcs.push_back({a.tail, a.head, a.slack});
  return arcs;
}

SeedLabels core_seeds(std::span<const double> deviations) {
  SeedLabels seeds;
  seeds.reserve(deviations.size());
  for (std::size_t h = 0; h < deviations.size(); ++h) {
    seeds.push_back({static_cast<int>(h), -deviations[h]});
  }
  return seeds;
}

[[maybe_unused]] double closed_form_makespan(const std::vector<double>& c,
                            const std::vector<double>& u) {
  double z = -std::numeric_limits<double>::infinity();
  for (std::size_t h = 0; h < u.size(); ++h) z = std::max(z, c[h] + u[h]);
  return z;
}

}  // namespace

AuxiliaryGraph build_core_auxiliary(const RecoveryInstance& instance) {
  const int n = instance.vehicle_count();
  return {WeightedDigraph(n, core_arcs(instance.graph, 0)),
          core_seeds(instance.deviations),
          {}};
}

AuxiliaryGraph build_makespan_extension(const RecoveryInstance& instance) {
  if (!instance.completion_times) {
    throw std::invalid_argument("missing completion_times");
  }
  const auto& c = *instance.completion_times;
  const int n = instance.vehicle_count();
  const double latest = *std::max_element(c.begin(), c.end());
  auto arcs = core_arcs(instance.graph, static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    arcs.push_back({h, n, latest - c[static_cast<std::size_t>(h)]});
  }
  return {WeightedDigraph(n + 1, std::move(arcs)),
          core_seeds(instance.deviations),
          {{n, ExtraVertexRole::MakespanSink, -1}}};
}

AuxiliaryGraph build_lateness_extension(const RecoveryInstance& instance) {
  if (!instance.due_dates) throw std::invalid_argument("missing due_dates");
  const auto& rho = *instance.due_dates;
  const int n = instance.vehicle_count();
  auto arcs = core_arcs(instance.graph, static_cast<std::size_t>(n));
  SeedLabels seeds = core_seeds(instance.deviations);
  std::vector<ExtraVertex> extra;
  extra.reserve(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    arcs.push_back({h, n + h, rho[static_cast<std::size_t>(h)]});
    seeds.push_back({n + h, 0.0});
    extra.push_back({n + h, ExtraVertexRole::LatenessSink, h});
  }
  return {WeightedDigraph(2 * n, std::move(arcs)), std::move(seeds),
          std::move(extra)};
}

std::vector<double> least_feasible_shifts(const ConflictGraph& graph,
                                          std::span<const double> lower_bounds) {
  const WeightedDigraph digraph(graph.vehicle_count, core_arcs(graph, 0));
  const SeedLabels seeds = core_seeds(lower_bounds);
  std::vector<double> u = shortest_paths_seeded(digraph, seeds);
  for (double& v : u) v = 0.0 - v;  // avoids -0.0 in output
  return u;
}

RecoveryPlan solve_delay(const RecoveryInstance& instance, Objective objective) {
  require_valid(instance, objective, Mode::Delay);
  const int n = instance.vehicle_count();
  const auto un = static_cast<std::size_t>(n);

  AuxiliaryGraph aux = [&] {
    switch (objective) {
      case Objective::Makespan: return build_makespan_extension(instance);
      case Objective::TotalLateness: return build_lateness_extension(instance);
      default: return build_core_auxiliary(instance);
    }
  }();
  const std::vector<double> dist = shortest_paths_seeded(aux.graph, aux.seeds);

  RecoveryPlan plan;
  plan.objective = objective;
  plan.mode = Mode::Delay;
  plan.u.resize(un);
  for (std::size_t h = 0; h < un; ++h) plan.u[h] = 0.0 - dist[h];
  plan.x.assign(un, 0.0);
  finalize_plan(instance, plan);

  if (objective == Objective::Makespan) {
    const auto& c = *instance.completion_times;
    const double latest = *std::max_element(c.begin(), c.end());
    plan.objective_value = latest - dist[un];
    assert(std::abs(plan.objective_value - closed_form_makespan(c, plan.u)) <=
           1e-9 * (1.0 + std::abs(plan.objective_value)));
  } else if (objective == Objective::TotalLateness) {
    std::vector<double> y(un);
    double z = 0.0;
    for (const ExtraVertex& sink : aux.extra_vertices) {
      const auto h = static_cast<std::size_t>(sink.vehicle);
      y[h] = 0.0 - dist[static_cast<std::size_t>(sink.vertex)];
      z += y[h];
    }
    assert(std::abs(z - plan.objective_value) <= 1e-9 * (1.0 + std::abs(z)));
    plan.lateness = std::move(y);
    plan.objective_value = z;
  }
  return plan;
}

}  // namespace cfr
