#include <gtest/gtest.h>

#include "cfr/delay_recovery.hpp"
#include "cfr/lp_oracle.hpp"
#include "fixtures.hpp"

using namespace cfr;

namespace {

std::vector<double> seed_values(const SeedLabels& seeds) {
  std::vector<double> out;
  for (const Seed& s : seeds) out.push_back(s.distance);
  return out;
}

}  // namespace

TEST(CoreAuxiliary, SevenVehicles) {
  const AuxiliaryGraph aux = build_core_auxiliary(fixtures::seven_vehicle_instance());
  EXPECT_EQ(aux.graph.vertex_count(), 7);
  EXPECT_EQ(aux.graph.arcs().size(), 4u);
  EXPECT_EQ(seed_values(aux.seeds), (std::vector<double>{-5, -1, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(aux.extra_vertices.empty());
}

TEST(CoreAuxiliary, SmallCases) {
  RecoveryInstance single;
  single.graph = {1, {}};
  single.deviations = {0};
  const AuxiliaryGraph a = build_core_auxiliary(single);
  EXPECT_EQ(a.graph.vertex_count(), 1);
  EXPECT_EQ(seed_values(a.seeds), std::vector<double>{0.0});

  RecoveryInstance pair;
  pair.graph = {2, {{0, 1, 1.0}}};
  pair.deviations = {5, 1};
  const AuxiliaryGraph b = build_core_auxiliary(pair);
  ASSERT_EQ(b.graph.arcs().size(), 1u);
  EXPECT_EQ(b.graph.arcs()[0], (WeightedArc{0, 1, 1.0}));
  EXPECT_EQ(seed_values(b.seeds), (std::vector<double>{-5, -1}));
}

TEST(MakespanExtension, SinkArcs) {
  RecoveryInstance inst;
  inst.graph = {2, {}};
  inst.deviations = {0, 0};
  inst.completion_times = std::vector<double>{10, 8};
  const AuxiliaryGraph aux = build_makespan_extension(inst);
  EXPECT_EQ(aux.graph.vertex_count(), 3);
  const std::vector<WeightedArc> expected{{0, 2, 0.0}, {1, 2, 2.0}};
  EXPECT_EQ(std::vector<WeightedArc>(aux.graph.arcs().begin(), aux.graph.arcs().end()),
            expected);
  ASSERT_EQ(aux.extra_vertices.size(), 1u);
  EXPECT_EQ(aux.extra_vertices[0].role, ExtraVertexRole::MakespanSink);

  inst.graph = {3, {}};
  inst.deviations = {0, 0, 0};
  inst.completion_times = std::vector<double>{7, 7, 7};
  const AuxiliaryGraph equal = build_makespan_extension(inst);
  for (const WeightedArc& a : equal.graph.arcs()) {
    EXPECT_EQ(a.weight, 0.0);
  }

  inst.graph = {1, {}};
  inst.deviations = {0};
  inst.completion_times = std::vector<double>{100};
  const AuxiliaryGraph one = build_makespan_extension(inst);
  ASSERT_EQ(one.graph.arcs().size(), 1u);
  EXPECT_EQ(one.graph.arcs()[0], (WeightedArc{0, 1, 0.0}));
}

TEST(LatenessExtension, SinkArcs) {
  RecoveryInstance inst;
  inst.graph = {2, {}};
  inst.deviations = {0, 0};
  inst.due_dates = std::vector<double>{1, 3};
  const AuxiliaryGraph aux = build_lateness_extension(inst);
  EXPECT_EQ(aux.graph.vertex_count(), 4);
  const std::vector<WeightedArc> expected{{0, 2, 1.0}, {1, 3, 3.0}};
  EXPECT_EQ(std::vector<WeightedArc>(aux.graph.arcs().begin(), aux.graph.arcs().end()),
            expected);
  ASSERT_EQ(aux.extra_vertices.size(), 2u);
  EXPECT_EQ(aux.extra_vertices[1].vehicle, 1);
}

TEST(LatenessExtension, EarlyVehicleIsNotLate) {
  RecoveryInstance inst;
  inst.graph = {1, {}};
  inst.deviations = {-2};
  inst.due_dates = std::vector<double>{10};
  const RecoveryPlan plan = solve_delay(inst, Objective::TotalLateness);
  EXPECT_EQ(plan.u, std::vector<double>{-2});
  EXPECT_EQ(*plan.lateness, std::vector<double>{0});
  EXPECT_EQ(plan.objective_value, 0.0);
}

TEST(LatenessExtension, ZeroDueDates) {
  RecoveryInstance inst = fixtures::seven_vehicle_instance();
  const RecoveryPlan plan = solve_delay(inst, Objective::TotalLateness);
  for (std::size_t h = 0; h < plan.u.size(); ++h) {
    EXPECT_EQ((*plan.lateness)[h], std::max(0.0, plan.u[h]));
  }
}

TEST(SolveDelay, SevenVehicleNarrative) {
  const RecoveryPlan plan = solve_delay(fixtures::seven_vehicle_instance(), Objective::TotalDelay);
  EXPECT_EQ(plan.u, (std::vector<double>{5, 4, 1, 2, 0, 0, 0}));
  EXPECT_EQ(plan.delta, (std::vector<double>{0, 3, 1, 2, 0, 0, 0}));
  EXPECT_EQ(plan.x, std::vector<double>(7, 0.0));
  EXPECT_EQ(plan.objective_value, 12.0);
}

TEST(SolveDelay, SevenVehicleMatchesOracle) {
  const RecoveryInstance inst = fixtures::seven_vehicle_instance();
  const LpResult lp = solve_lp(encode_delay_lp(inst, Objective::TotalDelay));
  ASSERT_EQ(lp.status, LpStatus::Optimal);
  EXPECT_NEAR(lp.objective, 12.0, 1e-9);
}

TEST(SolveDelay, DecoupledVehiclesKeepDeviations) {
  RecoveryInstance inst;
  inst.graph = {2, {}};
  inst.deviations = {-1, 0};
  const RecoveryPlan plan = solve_delay(inst, Objective::TotalDelay);
  EXPECT_EQ(plan.u, (std::vector<double>{-1, 0}));
  EXPECT_EQ(plan.objective_value, -1.0);
}

TEST(SolveDelay, MakespanTwoVehicles) {
  RecoveryInstance inst;
  inst.graph = {2, {{0, 1, 0.0}}};
  inst.deviations = {2, 0};
  inst.completion_times = std::vector<double>{10, 8};
  const RecoveryPlan plan = solve_delay(inst, Objective::Makespan);
  EXPECT_EQ(plan.u, (std::vector<double>{2, 2}));
  EXPECT_EQ(plan.objective_value, 12.0);
  const LpResult lp = solve_lp(encode_delay_lp(inst, Objective::Makespan));
  EXPECT_NEAR(lp.objective, 12.0, 1e-9);
}

TEST(SolveDelay, MakespanWhenEveryoneIsEarly) {
  RecoveryInstance inst;
  inst.graph = {2, {}};
  inst.deviations = {-3, -1};
  inst.completion_times = std::vector<double>{10, 8};
  const RecoveryPlan plan = solve_delay(inst, Objective::Makespan);
  EXPECT_EQ(plan.objective_value, 7.0);
  const LpResult lp = solve_lp(encode_delay_lp(inst, Objective::Makespan));
  EXPECT_NEAR(lp.objective, 7.0, 1e-9);
}

TEST(SolveDelay, ShiftsDoNotDependOnObjective) {
  RecoveryInstance inst = fixtures::seven_vehicle_instance();
  inst.weights = std::vector<double>{0.1, 3, 0, 1, 2, 2, 0.5};
  inst.completion_times = std::vector<double>{100, 104, 101, 109, 100, 102, 103};
  inst.due_dates = std::vector<double>{4, 0, 3, 1, 0, 0, 0};
  const auto base = solve_delay(inst, Objective::TotalDelay).u;
  for (Objective o : kAllObjectives) EXPECT_EQ(solve_delay(inst, o).u, base);
}

TEST(SolveDelay, InvalidInstanceThrows) {
  RecoveryInstance inst = fixtures::seven_vehicle_instance();
  inst.due_dates.reset();
  EXPECT_THROW(solve_delay(inst, Objective::TotalLateness), InvalidInstanceError);
}

TEST(LeastFeasibleShifts, MatchesTotalDelay) {
  const RecoveryInstance inst = fixtures::seven_vehicle_instance();
  EXPECT_EQ(least_feasible_shifts(inst.graph, inst.deviations),
            solve_delay(inst, Objective::TotalDelay).u);
}
