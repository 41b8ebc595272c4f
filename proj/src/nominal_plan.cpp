#include "cfr/nominal_plan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace cfr {

std::optional<double> NominalPlan::completion_time(int vehicle) const {
  const auto& occ = vehicles.at(static_cast<std::size_t>(vehicle));
  if (occ.empty()) return std::nullopt;
  return occ.back().exit;
}

ValidationReport validate_plan(const NominalPlan& plan) {
  ValidationReport report;
  for (std::size_t h = 0; h < plan.vehicles.size(); ++h) {
    const auto& occ = plan.vehicles[h];
    for (std::size_t i = 0; i < occ.size(); ++i) {
      const std::string where =
          "vehicle " + std::to_string(h) + " occupancy " + std::to_string(i);
      if (!std::isfinite(occ[i].entry) || !std::isfinite(occ[i].exit)) {
        report.add("non-finite time", where);
      } else if (!(occ[i].entry < occ[i].exit)) {
        report.add("entry < exit", where, occ[i].entry - occ[i].exit);
      }
      if (i > 0 && occ[i].entry < occ[i - 1].exit) {
        report.add("occupancies overlap", where, occ[i - 1].exit - occ[i].entry);
      }
    }
  }
  return report;
}

double compute_deviation(const ObservedState& state, int vehicle) {
  if (vehicle < 0 || static_cast<std::size_t>(vehicle) >= state.plan_time.size()) {
    throw std::out_of_range("compute_deviation: vehicle " +
                            std::to_string(vehicle) + " out of range");
  }
  return state.timestamp - state.plan_time[static_cast<std::size_t>(vehicle)];
}

ConflictGraph compute_slacks(const NominalPlan& plan, double headway) {
  if (!(headway >= 0.0)) throw std::invalid_argument("headway must be >= 0");
  if (const auto report = validate_plan(plan); !report.ok()) {
    throw std::invalid_argument("malformed nominal plan: " + report.to_string());
  }

  struct Use {
    int vehicle;
    double entry;
    double exit;
  };
  std::unordered_map<std::string, std::vector<Use>> by_resource;
  for (int h = 0; h < plan.vehicle_count(); ++h) {
    for (const Occupancy& o : plan.vehicles[static_cast<std::size_t>(h)]) {
      by_resource[o.resource].push_back({h, o.entry, o.exit});
    }
  }

  std::map<std::pair<int, int>, double> slack;
  for (const auto& [resource, uses] : by_resource) {
    for (const Use& first : uses) {
      for (const Use& second : uses) {
        if (first.vehicle == second.vehicle || first.exit > second.entry) continue;
        const double margin =
            std::max(0.0, second.entry - first.exit - headway);
        auto [it, inserted] =
            slack.try_emplace({first.vehicle, second.vehicle}, margin);
        if (!inserted) it->second = std::min(it->second, margin);
      }
    }
  }

  ConflictGraph graph{plan.vehicle_count(), {}};
  graph.arcs.reserve(slack.size());
  for (const auto& [pair, s] : slack) graph.arcs.push_back({pair.first, pair.second, s});
  return graph;
}

}  // namespace cfr
