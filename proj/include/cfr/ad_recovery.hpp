#pragma once

#include <vector>

#include "cfr/core.hpp"

namespace cfr {

/// Two-speed vehicle model: the boost speed is `k_ratio` times the nominal
/// one and can be held for at most `boost_limit` time units.
struct SpeedModel {
  double k_ratio = 1.5;
  double boost_limit = 10.0;
  std::vector<double> time_to_conflict;
};

/// Largest anticipation a vehicle can gain before its first conflict:
/// min((k-1) T, (k-1)/k * t_c). Throws std::invalid_argument when k <= 1 or
/// when T or t_c is negative.
double anticipation_bound(double k_ratio, double boost_limit, double time_to_conflict);

/// Per-vehicle bounds for a whole fleet.
std::vector<double> anticipation_bounds(const SpeedModel& model);

/// Same vehicles, every arc (h, k, s) turned into (k, h, s).
ConflictGraph reverse_graph(const ConflictGraph& graph);

struct ADSolution {
  RecoveryPlan plan;
  /// Stage-1 net shifts u_h - x_h when every vehicle starts at its full
  /// anticipation bound.
  std::vector<double> stage1_net;
  /// x_h - u_h for the returned plan, so that
  /// stage2_shift + plan.delta + d == plan.x.
  std::vector<double> stage2_shift;
};

/// Anticipations only, vehicles kept at u = d and bounds taken as infinite.
/// Minimizes total anticipation on the reverse graph.
RecoveryPlan solve_anticipations_only(const RecoveryInstance& instance,
                                      Objective objective = Objective::TotalDelay);

/// Corrective delays and anticipations, minimizing
/// alpha * z + beta * sum(x) by the two-stage shortest-path decomposition:
///
///  1. every vehicle anticipates by its full bound; the least net shifts are
///     found with lower bounds d - L, which fixes the optimal z;
///  2. with z held at its optimum (per-vehicle ceilings on u that depend on
///     the objective), the total anticipation is minimized on the reverse
///     graph;
///  3. given those anticipations, the least delays are recomputed.
///
/// With beta == 0 the stage-1 anticipations are returned unchanged.
ADSolution solve_anticipation_delay(const RecoveryInstance& instance,
                                    Objective objective);

}  // namespace cfr
