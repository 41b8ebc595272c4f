#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "cfr/core.hpp"

namespace cfr {

/// min cost^T x  s.t.  rows (sum <= rhs),  lower <= x <= upper.
/// Infinite bounds are allowed.
struct LinearProgram {
  struct Term {
    int var;
    double coef;
  };
  struct Row {
    std::vector<Term> terms;
    double rhs;
  };

  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<Row> rows;

  int add_variable(double c, double lo, double hi);
  void add_row(std::vector<Term> terms, double rhs);
  int variable_count() const { return static_cast<int>(cost.size()); }
  int row_count() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> values;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Explicit LP of the delay-only problem. Variables 0..n-1 are the shifts u
/// (lower bound d). Makespan appends one free variable for the makespan and
/// n epigraph rows; lateness appends n variables y >= 0 and n rows
/// u_h - y_h <= rho_h. One row per conflict arc comes first.
LinearProgram encode_delay_lp(const RecoveryInstance& instance, Objective objective);

/// Explicit LP of the delay-and-anticipation problem with objective
/// alpha * z + beta * sum(x). Variables 0..n-1 are u, n..2n-1 are x in
/// [0, L], followed by the same auxiliary variables as encode_delay_lp.
LinearProgram encode_ad_lp(const RecoveryInstance& instance, Objective objective);

/// Dense-tableau bounded-variable primal simplex, two phases (artificial
/// variables on initially violated rows). Entering and leaving variables
/// follow Bland's smallest-index rule, which rules out cycling. Throws
/// std::invalid_argument on inconsistent dimensions.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace cfr
