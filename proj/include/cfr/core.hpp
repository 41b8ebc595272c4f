#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfr {

/// Absolute tolerance used by feasibility checks unless the caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

/// Ordered vehicle pair (tail, head) whose slack is finite.
///
/// `slack` is the largest delay the tail vehicle can absorb without
/// conflicting with the head vehicle under the nominal plan. Pairs that can
/// never conflict have no arc at all.
struct ConflictArc {
  int tail = 0;
  int head = 0;
  double slack = 0.0;

  friend bool operator==(const ConflictArc&, const ConflictArc&) = default;
};

/// Vehicles are vertices `0 .. vehicle_count-1`. The graph may be cyclic or
/// disconnected.
struct ConflictGraph {
  int vehicle_count = 0;
  std::vector<ConflictArc> arcs;

  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;
};

enum class Objective { TotalDelay, WeightedDelay, Makespan, TotalLateness };

enum class Mode { Delay, AnticipationDelay };

inline constexpr Objective kAllObjectives[] = {
    Objective::TotalDelay, Objective::WeightedDelay, Objective::Makespan,
    Objective::TotalLateness};

std::string_view to_string(Objective objective);
std::string_view to_string(Mode mode);
std::optional<Objective> parse_objective(std::string_view name);
std::optional<Mode> parse_mode(std::string_view name);

/// Everything a recovery solve needs: the conflict graph, the observed
/// deviations (positive = late) and the per-objective data.
struct RecoveryInstance {
  ConflictGraph graph;
  std::vector<double> deviations;
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<double>> completion_times;
  std::optional<std::vector<double>> due_dates;
  std::optional<std::vector<double>> anticipation_bounds;
  double alpha = 1000.0;
  double beta = 1.0;

  int vehicle_count() const { return graph.vehicle_count; }

  friend bool operator==(const RecoveryInstance&,
                         const RecoveryInstance&) = default;
};

/// Solver output. `u` is the net shift of each vehicle with respect to the
/// nominal plan, `x` the corrective anticipation and `delta = u - d` the
/// corrective action.
struct RecoveryPlan {
  Objective objective = Objective::TotalDelay;
  Mode mode = Mode::Delay;
  std::vector<double> u;
  std::vector<double> x;
  std::vector<double> delta;
  std::optional<std::vector<double>> lateness;
  double objective_value = 0.0;
  std::optional<double> combined_value;
};

struct Violation {
  std::string constraint;
  std::string location;
  double magnitude = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string constraint, std::string location, double magnitude = 0.0);
  std::string to_string() const;
};

/// Thrown by the solvers when an instance does not validate.
class InvalidInstanceError : public std::invalid_argument {
 public:
  explicit InvalidInstanceError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Structural and data checks. When `objective` is given, the data it needs
/// must be present; in anticipation-delay mode the anticipation bounds must
/// be present too.
ValidationReport validate_instance(const RecoveryInstance& instance,
                                   std::optional<Objective> objective = {},
                                   Mode mode = Mode::Delay);

/// Throws InvalidInstanceError unless validate_instance() is clean.
void require_valid(const RecoveryInstance& instance, Objective objective,
                   Mode mode);

/// Every vehicle is shifted to the largest observed deviation, which zeroes
/// the left-hand side of every conflict constraint.
RecoveryPlan uniform_delay_solution(const RecoveryInstance& instance,
                                    Objective objective = Objective::TotalDelay);

/// Checks the conflict constraints, the deviation lower bounds and (in
/// anticipation-delay mode) the anticipation box. Throws
/// std::invalid_argument when the plan dimensions do not match the instance.
ValidationReport check_feasibility(const RecoveryInstance& instance,
                                   const RecoveryPlan& plan,
                                   double tolerance = kDefaultTolerance);

/// Value of the selected performance measure at shifts `u`. Throws
/// std::invalid_argument when the objective's data is missing.
double evaluate_objective(const RecoveryInstance& instance,
                          std::span<const double> u, Objective objective);

inline double evaluate_objective(const RecoveryInstance& instance,
                                 const RecoveryPlan& plan,
                                 Objective objective) {
  return evaluate_objective(instance, plan.u, objective);
}

/// Fills delta, lateness (for the lateness objective), objective_value and,
/// in anticipation-delay mode, combined_value from `u` and `x`.
void finalize_plan(const RecoveryInstance& instance, RecoveryPlan& plan);

}  // namespace cfr
