#pragma once

#include <vector>

#include "cfr/core.hpp"

namespace cfr::fixtures {

// Seven vehicles, four conflicts; vehicles 0 and 1 start late.
inline RecoveryInstance seven_vehicle_instance() {
  RecoveryInstance inst;
  inst.graph.vehicle_count = 7;
  inst.graph.arcs = {{0, 1, 1.0}, {1, 2, 5.0}, {1, 3, 2.0}, {3, 2, 1.0}};
  inst.deviations = {5, 1, 0, 0, 0, 0, 0};
  inst.weights = std::vector<double>(7, 1.0);
  inst.completion_times = std::vector<double>(7, 100.0);
  inst.due_dates = std::vector<double>(7, 0.0);
  inst.anticipation_bounds = std::vector<double>(7, 0.0);
  return inst;
}

// Two vehicles on one conflict with zero slack; the leader is 3 late and can
// recover 2 by speeding up.
inline RecoveryInstance two_vehicle_instance() {
  RecoveryInstance inst;
  inst.graph.vehicle_count = 2;
  inst.graph.arcs = {{0, 1, 0.0}};
  inst.deviations = {3, 0};
  inst.weights = std::vector<double>{1.0, 1.0};
  inst.completion_times = std::vector<double>{10.0, 8.0};
  inst.due_dates = std::vector<double>{10.0, 10.0};
  inst.anticipation_bounds = std::vector<double>{2.0, 0.0};
  return inst;
}

}  // namespace cfr::fixtures
