#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfr/core.hpp"

namespace cfr {

/// One vehicle holding one resource (arc, node, zone...) over [entry, exit).
struct Occupancy {
  std::string resource;
  double entry = 0.0;
  double exit = 0.0;

  friend bool operator==(const Occupancy&, const Occupancy&) = default;
};

/// Timetable of every vehicle, occupancies sorted by time within a vehicle.
struct NominalPlan {
  std::vector<std::vector<Occupancy>> vehicles;

  int vehicle_count() const { return static_cast<int>(vehicles.size()); }
  /// Exit time of the last occupancy; nullopt for a vehicle with none.
  std::optional<double> completion_time(int vehicle) const;

  friend bool operator==(const NominalPlan&, const NominalPlan&) = default;
};

/// Monitoring snapshot: at time `timestamp`, vehicle h is where its nominal
/// plan puts it at time `plan_time[h]`.
struct ObservedState {
  double timestamp = 0.0;
  std::vector<double> plan_time;
};

ValidationReport validate_plan(const NominalPlan& plan);

/// timestamp - plan_time[vehicle]; positive means late. Throws
/// std::out_of_range for a bad vehicle index.
double compute_deviation(const ObservedState& state, int vehicle);

/// Conflict graph implied by the timetable when each vehicle's occupancies
/// shift rigidly with its delay.
///
/// For every ordered pair (h, k) and every resource both use where h leaves
/// before k enters, h can be delayed by entry_k - exit_h - headway before
/// it collides with k there. The arc slack is the minimum of these margins,
/// clamped at 0; pairs with no such resource get no arc. Throws
/// std::invalid_argument for a malformed plan or a negative headway.
ConflictGraph compute_slacks(const NominalPlan& plan, double headway = 0.0);

}  // namespace cfr
