#pragma once

#include <span>
#include <vector>

#include "cfr/core.hpp"
#include "cfr/sssp.hpp"

namespace cfr {

enum class ExtraVertexRole { MakespanSink, LatenessSink };

struct ExtraVertex {
  int vertex = 0;
  ExtraVertexRole role = ExtraVertexRole::MakespanSink;
  int vehicle = -1;  ///< owning vehicle for lateness sinks, -1 otherwise
};

/// Shortest-path form of a delay-only recovery problem.
///
/// Distances come out negated: for a core vertex h the shortest distance is
/// -u*_h. The virtual source of the LP dual is never built; its arcs of
/// weight -d_h are carried by the seed labels instead.
struct AuxiliaryGraph {
  WeightedDigraph graph;
  SeedLabels seeds;
  std::vector<ExtraVertex> extra_vertices;
};

AuxiliaryGraph build_core_auxiliary(const RecoveryInstance& instance);

/// Adds one sink (vertex n) with arcs (h, n, max_k c_k - c_h). The sink is
/// left unseeded, so its distance is -(max_h (c_h + u*_h) - max_k c_k).
AuxiliaryGraph build_makespan_extension(const RecoveryInstance& instance);

/// Adds sinks n+h with arcs (h, n+h, rho_h), each seeded at 0 so that the
/// sink distance is -max(0, u*_h - rho_h).
AuxiliaryGraph build_lateness_extension(const RecoveryInstance& instance);

/// Least vector u with u_h - u_k <= s_hk on every arc and u >= lower_bounds.
/// This is the optimum of the total-delay problem with deviations
/// `lower_bounds`, and it is componentwise minimal among feasible vectors.
std::vector<double> least_feasible_shifts(const ConflictGraph& graph,
                                          std::span<const double> lower_bounds);

/// Optimal corrective delays for the selected objective. The shift vector is
/// the same for all four objectives; the objective value for makespan and
/// lateness is read off the sink vertices.
RecoveryPlan solve_delay(const RecoveryInstance& instance, Objective objective);

}  // namespace cfr
