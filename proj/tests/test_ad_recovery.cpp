#include <gtest/gtest.h>

#include "cfr/ad_recovery.hpp"
#include "cfr/delay_recovery.hpp"
#include "cfr/lp_oracle.hpp"
#include "cfr/verify.hpp"
#include "fixtures.hpp"

using namespace cfr;

TEST(AnticipationBound, HandValues) {
  EXPECT_DOUBLE_EQ(anticipation_bound(2.0, 5.0, 8.0), 4.0);
  EXPECT_DOUBLE_EQ(anticipation_bound(1.5, 10.0, 1e9), 5.0);
  EXPECT_DOUBLE_EQ(anticipation_bound(1.5, 10.0, 0.0), 0.0);
  EXPECT_THROW(anticipation_bound(1.0, 10.0, 1.0), std::invalid_argument);
  EXPECT_THROW(anticipation_bound(2.0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(anticipation_bound(2.0, 1.0, -1.0), std::invalid_argument);
}

TEST(AnticipationBound, Fleet) {
  SpeedModel model;
  model.k_ratio = 2.0;
  model.boost_limit = 5.0;
  model.time_to_conflict = {8.0, 20.0, 0.0};
  EXPECT_EQ(anticipation_bounds(model), (std::vector<double>{4.0, 5.0, 0.0}));
}

TEST(ReverseGraph, ArcsAreFlipped) {
  const ConflictGraph g{4, {{0, 1, 1.0}, {1, 2, 5.0}, {1, 3, 2.0}, {3, 2, 1.0}}};
  const ConflictGraph r = reverse_graph(g);
  EXPECT_EQ(r.vehicle_count, 4);
  EXPECT_EQ(r.arcs, (std::vector<ConflictArc>{{1, 0, 1.0}, {2, 1, 5.0}, {3, 1, 2.0},
                                              {2, 3, 1.0}}));
  EXPECT_TRUE(reverse_graph(ConflictGraph{3, {}}).arcs.empty());
  EXPECT_EQ(reverse_graph(ConflictGraph{2, {{0, 1, 3.0}}}).arcs,
            (std::vector<ConflictArc>{{1, 0, 3.0}}));
}

TEST(AnticipationsOnly, LeaderSpeedsUp) {
  RecoveryInstance inst;
  inst.graph = {2, {{0, 1, 0.0}}};
  inst.deviations = {3, 0};
  const RecoveryPlan plan = solve_anticipations_only(inst);
  EXPECT_EQ(plan.x, (std::vector<double>{3, 0}));
  EXPECT_EQ(plan.u, (std::vector<double>{3, 0}));
  EXPECT_TRUE(check_feasibility(inst, plan).ok());
}

TEST(AnticipationsOnly, UnconstrainedVehiclesNeedNothing) {
  RecoveryInstance inst;
  inst.graph = {2, {}};
  inst.deviations = {2, -1};
  EXPECT_EQ(solve_anticipations_only(inst).x, (std::vector<double>{0, 0}));

  inst.graph = {3, {{0, 1, 0.0}, {1, 2, 1.0}, {2, 0, 0.0}}};
  inst.deviations = {0, 0, 0};
  EXPECT_EQ(solve_anticipations_only(inst).x, std::vector<double>(3, 0.0));
}

TEST(AnticipationDelay, TwoVehicleTrace) {
  const RecoveryInstance inst = fixtures::two_vehicle_instance();
  const ADSolution sol = solve_anticipation_delay(inst, Objective::TotalDelay);
  EXPECT_EQ(sol.stage1_net, (std::vector<double>{1, 1}));
  EXPECT_EQ(sol.plan.x, (std::vector<double>{2, 0}));
  EXPECT_EQ(sol.plan.u, (std::vector<double>{3, 1}));
  EXPECT_EQ(sol.plan.delta, (std::vector<double>{0, 1}));
  EXPECT_EQ(sol.plan.objective_value, 4.0);
  EXPECT_EQ(*sol.plan.combined_value, 4002.0);
  for (std::size_t h = 0; h < 2; ++h) {
    EXPECT_EQ(sol.stage2_shift[h] + sol.plan.delta[h] + inst.deviations[h], sol.plan.x[h]);
  }

  const RecoveryPlan delay_only = solve_delay(inst, Objective::TotalDelay);
  EXPECT_EQ(delay_only.objective_value, 6.0);

  const LpResult lp = solve_lp(encode_ad_lp(inst, Objective::TotalDelay));
  ASSERT_EQ(lp.status, LpStatus::Optimal);
  EXPECT_NEAR(lp.objective, 4002.0, 1e-6);
}

TEST(AnticipationDelay, ZeroBoundsReproduceDelayOnly) {
  const RecoveryInstance inst = fixtures::seven_vehicle_instance();
  for (Objective o : kAllObjectives) {
    const RecoveryPlan ad = solve_anticipation_delay(inst, o).plan;
    const RecoveryPlan d = solve_delay(inst, o);
    EXPECT_EQ(ad.u, d.u);
    EXPECT_EQ(ad.x, std::vector<double>(7, 0.0));
    EXPECT_EQ(ad.objective_value, d.objective_value);
  }
}

TEST(AnticipationDelay, OnTimeFleet) {
  RecoveryInstance inst = fixtures::seven_vehicle_instance();
  inst.deviations.assign(7, 0.0);
  inst.anticipation_bounds = std::vector<double>{1, 2, 3, 4, 5, 6, 7};
  const RecoveryPlan plan = solve_anticipation_delay(inst, Objective::TotalDelay).plan;
  EXPECT_EQ(plan.u, std::vector<double>(7, 0.0));
  EXPECT_EQ(plan.x, std::vector<double>(7, 0.0));
  EXPECT_EQ(*plan.combined_value, 0.0);
}

// Ceiling on u that keeps the makespan and lateness optimal is looser than
// the stage-1 shifts; minimizing anticipation must use that slack.
TEST(AnticipationDelay, SecondaryObjectivesUseTheirSlack) {
  RecoveryInstance inst = fixtures::two_vehicle_instance();
  inst.due_dates = std::vector<double>{10, 10};
  inst.completion_times = std::vector<double>{10, 0};
  for (Objective o : {Objective::Makespan, Objective::TotalLateness}) {
    VerifyOptions options;
    options.objective = o;
    options.mode = Mode::AnticipationDelay;
    const VerifyReport report = verify(inst, options);
    EXPECT_TRUE(report.passed(1e-6)) << to_string(o) << " gap " << report.gap;
    EXPECT_EQ(report.plan.x, (std::vector<double>{0, 0}));
  }
}

TEST(AnticipationDelay, ZeroBetaKeepsStageOneAnticipations) {
  RecoveryInstance inst = fixtures::two_vehicle_instance();
  inst.beta = 0.0;
  const RecoveryPlan plan = solve_anticipation_delay(inst, Objective::TotalDelay).plan;
  EXPECT_EQ(plan.x, (std::vector<double>{2, 0}));
  EXPECT_EQ(plan.objective_value, 4.0);
}
