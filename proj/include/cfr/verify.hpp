#pragma once

#include <optional>
#include <stdexcept>

#include "cfr/core.hpp"
#include "cfr/lp_oracle.hpp"

namespace cfr {

/// Raised instead of silently running the oracle on an instance above its
/// size limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  Objective objective = Objective::TotalDelay;
  Mode mode = Mode::Delay;
  double tolerance = 1e-6;            // allowed |engine - oracle|
  double feasibility_tolerance = 1e-9;
  int oracle_limit = 100;             // largest n handed to the simplex
  std::optional<RecoveryPlan> plan;   // checked instead of a fresh solve
};

struct VerifyReport {
  RecoveryPlan plan;
  double engine_value = 0.0;  // z in delay mode, z' in anticipation-delay mode
  double oracle_value = 0.0;
  double gap = 0.0;
  LpStatus oracle_status = LpStatus::Optimal;
  ValidationReport feasibility;
  ValidationReport complementarity;  // empty in delay mode
  bool passed(double tolerance) const;
};

/// Solves (or takes the supplied plan), recomputes its objective from the
/// instance data and compares it with the simplex optimum of the explicit LP.
VerifyReport verify(const RecoveryInstance& instance, const VerifyOptions& options);

/// Entries where both a positive corrective delay and a positive
/// anticipation exceed `tolerance`.
ValidationReport check_complementarity(const RecoveryInstance& instance,
                                       const RecoveryPlan& plan, double tolerance);

}  // namespace cfr
