#include "cfr/lp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cfr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-7;

// Tableau T = B^-1 [A_struct | I_slack], plus the transformed right-hand side
// in the last column. Artificial columns are never stored: an artificial
// is only ever basic (unit column) or gone for good.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp);
  LpResult run();

 private:
  enum class Outcome { Optimal, Unbounded };

  double& at(std::size_t i, std::size_t j) { return tab_[i * width_ + j]; }
  bool is_artificial(std::size_t var) const { return var >= cols_; }
  void price(const std::vector<double>& cost);
  Outcome iterate();
  void pivot(std::size_t row, std::size_t col);
  void recompute_basics();

  const LinearProgram& lp_;
  std::size_t structs_;
  std::size_t rows_;
  std::size_t cols_;   // structural + slack
  std::size_t width_;  // cols_ + rhs
  std::vector<double> tab_;
  std::vector<double> lo_, hi_, x_;   // size cols_ + rows_ (artificials last)
  std::vector<std::size_t> basis_;    // row -> var
  std::vector<char> basic_;           // var -> in basis
  std::vector<double> reduced_;       // per stored column
  std::vector<std::size_t> row_nz_;
  std::size_t pivots_ = 0;
};

Simplex::Simplex(const LinearProgram& lp)
    : lp_(lp),
      structs_(lp.cost.size()),
      rows_(lp.rows.size()),
      cols_(structs_ + rows_),
      width_(cols_ + 1) {
  if (lp.lower.size() != structs_ || lp.upper.size() != structs_) {
    throw std::invalid_argument("solve_lp: bound vectors do not match cost");
  }
  const std::size_t total = cols_ + rows_;
  lo_.assign(total, 0.0);
  hi_.assign(total, kInf);
  x_.assign(total, 0.0);
  for (std::size_t j = 0; j < structs_; ++j) {
    lo_[j] = lp.lower[j];
    hi_[j] = lp.upper[j];
    if (lo_[j] > hi_[j]) {
      throw std::invalid_argument("solve_lp: lower bound above upper bound");
    }
    x_[j] = std::isfinite(lo_[j]) ? lo_[j] : (std::isfinite(hi_[j]) ? hi_[j] : 0.0);
  }

  tab_.assign(rows_ * width_, 0.0);
  basis_.resize(rows_);
  basic_.assign(total, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& row = lp.rows[i];
    double residual = row.rhs;
    for (const auto& t : row.terms) {
      if (t.var < 0 || static_cast<std::size_t>(t.var) >= structs_) {
        throw std::invalid_argument("solve_lp: row " + std::to_string(i) +
                                    " references unknown variable");
      }
      residual -= t.coef * x_[static_cast<std::size_t>(t.var)];
    }
    const double sign = residual >= 0.0 ? 1.0 : -1.0;
    for (const auto& t : row.terms) at(i, static_cast<std::size_t>(t.var)) += sign * t.coef;
    at(i, structs_ + i) = sign;
    at(i, cols_) = sign * row.rhs;
    const std::size_t var = residual >= 0.0 ? structs_ + i : cols_ + i;
    basis_[i] = var;
    basic_[var] = 1;
    x_[var] = std::abs(residual);
  }
}

void Simplex::price(const std::vector<double>& cost) {
  // cost indexed by var (structural, slack, artificial).
  reduced_.assign(cols_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
  for (std::size_t i = 0; i < rows_; ++i) {
    const double cb = cost[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &tab_[i * width_];
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * row[j];
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!is_artificial(basis_[i])) reduced_[basis_[i]] = 0.0;
  }
}

void Simplex::recompute_basics() {
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = &tab_[i * width_];
    double v = row[cols_];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!basic_[j] && row[j] != 0.0) v -= row[j] * x_[j];
    }
    x_[basis_[i]] = v;
  }
}

void Simplex::pivot(std::size_t r, std::size_t col) {
  ++pivots_;
  double* prow = &tab_[r * width_];
  const double p = prow[col];
  row_nz_.clear();
  for (std::size_t k = 0; k < width_; ++k) {
    if (prow[k] != 0.0) {
      prow[k] /= p;
      row_nz_.push_back(k);
    }
  }
  prow[col] = 1.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == r) continue;
    double* row = &tab_[i * width_];
    const double f = row[col];
    if (f == 0.0) continue;
    for (std::size_t k : row_nz_) row[k] -= f * prow[k];
    row[col] = 0.0;
  }
  const double f = reduced_[col];
  if (f != 0.0) {
    for (std::size_t k : row_nz_) {
      if (k < cols_) reduced_[k] -= f * prow[k];
    }
  }
  reduced_[col] = 0.0;

  const std::size_t leaving = basis_[r];
  basic_[leaving] = 0;
  basis_[r] = col;
  basic_[col] = 1;
}

Simplex::Outcome Simplex::iterate() {
  for (;;) {
    // Bland: lowest-index improving column.
    std::size_t entering = cols_;
    double direction = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (basic_[j] || lo_[j] == hi_[j]) continue;
      if (reduced_[j] < -kCostTol && x_[j] < hi_[j]) {
        entering = j;
        direction = 1.0;
        break;
      }
      if (reduced_[j] > kCostTol && x_[j] > lo_[j]) {
        entering = j;
        direction = -1.0;
        break;
      }
    }
    if (entering == cols_) return Outcome::Optimal;

    const std::size_t j = entering;
    double step = direction > 0.0 ? hi_[j] - x_[j] : x_[j] - lo_[j];
    std::size_t leave_row = rows_;
    bool leave_at_upper = false;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double a = tab_[i * width_ + j];
      if (std::abs(a) < kPivotTol) continue;
      const double rate = -direction * a;  // change of the basic variable
      const std::size_t b = basis_[i];
      double limit = kInf;
      bool at_upper = false;
      if (rate < 0.0) {
        if (std::isfinite(lo_[b])) limit = (x_[b] - lo_[b]) / -rate;
      } else if (std::isfinite(hi_[b])) {
        limit = (hi_[b] - x_[b]) / rate;
        at_upper = true;
      }
      limit = std::max(limit, 0.0);
      if (limit < step ||
          (limit == step && leave_row < rows_ && b < basis_[leave_row])) {
        step = limit;
        leave_row = i;
        leave_at_upper = at_upper;
      }
    }
    if (!std::isfinite(step)) return Outcome::Unbounded;

    x_[j] += direction * step;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double a = tab_[i * width_ + j];
      if (a != 0.0) x_[basis_[i]] -= direction * step * a;
    }
    if (leave_row == rows_) {
      x_[j] = direction > 0.0 ? hi_[j] : lo_[j];
      continue;
    }
    const std::size_t b = basis_[leave_row];
    x_[b] = leave_at_upper ? hi_[b] : lo_[b];
    pivot(leave_row, j);
  }
}

LpResult Simplex::run() {
  LpResult result;
  const std::size_t total = cols_ + rows_;

  std::vector<double> cost(total, 0.0);
  bool any_artificial = false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (is_artificial(basis_[i])) {
      cost[basis_[i]] = 1.0;
      any_artificial = true;
    }
  }
  if (any_artificial) {
    price(cost);
    iterate();
    recompute_basics();
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (is_artificial(basis_[i])) infeasibility += std::abs(x_[basis_[i]]);
    }
    if (infeasibility > kFeasTol) {
      result.status = LpStatus::Infeasible;
      result.pivots = pivots_;
      return result;
    }
    for (std::size_t v = cols_; v < total; ++v) hi_[v] = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (is_artificial(basis_[i])) x_[basis_[i]] = 0.0;
    }
  }

  std::fill(cost.begin(), cost.end(), 0.0);
  std::copy(lp_.cost.begin(), lp_.cost.end(), cost.begin());
  price(cost);
  const Outcome outcome = iterate();
  result.pivots = pivots_;
  if (outcome == Outcome::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  recompute_basics();
  result.status = LpStatus::Optimal;
  result.values.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(structs_));
  for (std::size_t j = 0; j < structs_; ++j) {
    result.objective += lp_.cost[j] * result.values[j];
  }
  return result;
}

void add_objective_aux(LinearProgram& lp, const RecoveryInstance& instance,
                       Objective objective, double scale) {
  const int n = instance.vehicle_count();
  switch (objective) {
    case Objective::TotalDelay:
      for (int h = 0; h < n; ++h) lp.cost[static_cast<std::size_t>(h)] += scale;
      break;
    case Objective::WeightedDelay:
      for (int h = 0; h < n; ++h) {
        lp.cost[static_cast<std::size_t>(h)] +=
            scale * (*instance.weights)[static_cast<std::size_t>(h)];
      }
      break;
    case Objective::Makespan: {
      const int z = lp.add_variable(scale, -kInf, kInf);
      for (int h = 0; h < n; ++h) {
        lp.add_row({{h, 1.0}, {z, -1.0}},
                   -(*instance.completion_times)[static_cast<std::size_t>(h)]);
      }
      break;
    }
    case Objective::TotalLateness: {
      const int first = lp.variable_count();
      for (int h = 0; h < n; ++h) lp.add_variable(scale, 0.0, kInf);
      for (int h = 0; h < n; ++h) {
        lp.add_row({{h, 1.0}, {first + h, -1.0}},
                   (*instance.due_dates)[static_cast<std::size_t>(h)]);
      }
      break;
    }
  }
}

}  // namespace

int LinearProgram::add_variable(double c, double lo, double hi) {
  cost.push_back(c);
  lower.push_back(lo);
  upper.push_back(hi);
  return static_cast<int>(cost.size()) - 1;
}

void LinearProgram::add_row(std::vector<Term> terms, double rhs) {
  rows.push_back({std::move(terms), rhs});
}

LinearProgram encode_delay_lp(const RecoveryInstance& instance, Objective objective) {
  require_valid(instance, objective, Mode::Delay);
  LinearProgram lp;
  const int n = instance.vehicle_count();
  for (int h = 0; h < n; ++h) {
    lp.add_variable(0.0, instance.deviations[static_cast<std::size_t>(h)], kInf);
  }
  for (const ConflictArc& a : instance.graph.arcs) {
    lp.add_row({{a.tail, 1.0}, {a.head, -1.0}}, a.slack);
  }
  add_objective_aux(lp, instance, objective, 1.0);
  return lp;
}

LinearProgram encode_ad_lp(const RecoveryInstance& instance, Objective objective) {
  require_valid(instance, objective, Mode::AnticipationDelay);
  LinearProgram lp;
  const int n = instance.vehicle_count();
  for (int h = 0; h < n; ++h) {
    lp.add_variable(0.0, instance.deviations[static_cast<std::size_t>(h)], kInf);
  }
  for (int h = 0; h < n; ++h) {
    lp.add_variable(instance.beta, 0.0,
                    (*instance.anticipation_bounds)[static_cast<std::size_t>(h)]);
  }
  for (const ConflictArc& a : instance.graph.arcs) {
    lp.add_row({{a.tail, 1.0}, {n + a.tail, -1.0}, {a.head, -1.0}, {n + a.head, 1.0}},
               a.slack);
  }
  add_objective_aux(lp, instance, objective, instance.alpha);
  return lp;
}

LpResult solve_lp(const LinearProgram& lp) {
  for (const auto& row : lp.rows) {
    if (!std::isfinite(row.rhs)) {
      throw std::invalid_argument("solve_lp: non-finite right-hand side");
    }
  }
  Simplex simplex(lp);
  return simplex.run();
}

}  // namespace cfr
