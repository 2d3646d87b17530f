// Dense two-phase primal simplex over exact rationals with Bland's rule.
//
//   maximize    objective . x
//   subject to  row_k . x  (<= | = | >=)  rhs_k
//               x >= 0
//
// Bland's rule (lowest-index entering column, lowest-index leaving basic
// variable on ratio ties) guarantees termination on degenerate programs.

#ifndef ROOTFACE_SIMPLEX_HPP
#define ROOTFACE_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rootface/rational.hpp"

namespace rootface {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows * (cols + 1)) {}

  std::size_t rows() const { return cells_.size() / (cols_ + 1); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  const Rational& rhs(std::size_t r) const { return at(r, cols_); }

  void erase_row(std::size_t r) {
    const auto width = cols_ + 1;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * width),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
  }

 private:
  std::size_t cols_;
  std::vector<Rational> cells_;
};

class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp) : lp_(lp) { build(); }

  LpSolution run() {
    LpSolution solution;
    if (artificial_begin_ < total_cols_) {
      std::vector<Rational> phase_one(total_cols_, Rational(0));
      for (std::size_t j = artificial_begin_; j < total_cols_; ++j) phase_one[j] = Rational(-1);
      set_objective(phase_one);
      iterate(total_cols_);
      if (objective_value_.sign() < 0) {
        solution.status = LpStatus::Infeasible;
        solution.pivots = pivots_;
        return solution;
      }
      drive_out_artificials();
    }
    std::vector<Rational> phase_two(total_cols_, Rational(0));
    for (std::size_t j = 0; j < lp_.variable_count; ++j) phase_two[j] = lp_.objective[j];
    set_objective(phase_two);
    const bool bounded = iterate(artificial_begin_);
    solution.pivots = pivots_;
    if (!bounded) {
      solution.status = LpStatus::Unbounded;
      return solution;
    }
    solution.status = LpStatus::Optimal;
    solution.value = objective_value_;
    solution.x.assign(lp_.variable_count, Rational(0));
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] < lp_.variable_count) solution.x[basis_[r]] = tableau_.rhs(r);
    }
    return solution;
  }

 private:
  void build() {
    const auto n = lp_.variable_count;
    if (lp_.objective.size() != n) throw std::invalid_argument("objective length mismatch");
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& row : lp_.constraints) {
      if (row.coefficients.size() != n) throw std::invalid_argument("constraint length mismatch");
      const auto rel = effective_relation(row);
      if (rel != Relation::Equal) ++slack_count;
      if (rel != Relation::LessEqual) ++artificial_count;
    }
    artificial_begin_ = n + slack_count;
    total_cols_ = artificial_begin_ + artificial_count;
    tableau_ = Tableau(lp_.constraints.size(), total_cols_);
    basis_.assign(lp_.constraints.size(), 0);

    std::size_t next_slack = n;
    std::size_t next_artificial = artificial_begin_;
    for (std::size_t r = 0; r < lp_.constraints.size(); ++r) {
      const auto& row = lp_.constraints[r];
      const bool flip = row.rhs.sign() < 0;
      const auto rel = effective_relation(row);
      for (std::size_t j = 0; j < n; ++j) tableau_.at(r, j) = flip ? -row.coefficients[j] : row.coefficients[j];
      tableau_.rhs(r) = flip ? -row.rhs : row.rhs;
      if (rel == Relation::LessEqual) {
        tableau_.at(r, next_slack) = Rational(1);
        basis_[r] = next_slack++;
      } else {
        if (rel == Relation::GreaterEqual) tableau_.at(r, next_slack++) = Rational(-1);
        tableau_.at(r, next_artificial) = Rational(1);
        basis_[r] = next_artificial++;
      }
    }
  }

  static Relation effective_relation(const Constraint& row) {
    if (row.rhs.sign() >= 0 || row.relation == Relation::Equal) return row.relation;
    return row.relation == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
  }

  // Reduced costs r_j = cost_j - sum_r cost_{basis_r} * T[r][j].
  void set_objective(const std::vector<Rational>& cost) {
    reduced_ = cost;
    objective_value_ = Rational(0);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Rational cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < total_cols_; ++j) {
        if (!tableau_.at(r, j).is_zero()) reduced_[j] -= cb * tableau_.at(r, j);
      }
      objective_value_ += cb * tableau_.rhs(r);
    }
  }

  /// Runs Bland pivots over columns [0, column_limit). False if unbounded.
  bool iterate(std::size_t column_limit) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (reduced_[j].sign() > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < basis_.size(); ++r) {
        const auto& a = tableau_.at(r, *entering);
        if (a.sign() <= 0) continue;
        const Rational ratio = tableau_.rhs(r) / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational inv = Rational(1) / tableau_.at(row, col);
    for (std::size_t j = 0; j <= total_cols_; ++j) {
      auto& cell = tableau_.at(row, j);
      if (!cell.is_zero()) cell *= inv;
    }
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (r == row) continue;
      const Rational factor = tableau_.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j <= total_cols_; ++j) {
        const auto& p = tableau_.at(row, j);
        if (!p.is_zero()) tableau_.at(r, j) -= factor * p;
      }
    }
    const Rational factor = reduced_[col];
    if (!factor.is_zero()) {
      for (std::size_t j = 0; j < total_cols_; ++j) {
        const auto& p = tableau_.at(row, j);
        if (!p.is_zero()) reduced_[j] -= factor * p;
      }
      objective_value_ += factor * tableau_.rhs(row);
    }
    basis_[row] = col;
  }

  // After a feasible phase one, artificial variables still basic sit at 0.
  // Pivot them out on any structural column, or drop the row as redundant.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < basis_.size();) {
      if (basis_[r] < artificial_begin_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (!tableau_.at(r, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        tableau_.erase_row(r);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  const LinearProgram& lp_;
  Tableau tableau_{0, 0};
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_value_;
  std::size_t artificial_begin_ = 0;
  std::size_t total_cols_ = 0;
  std::size_t pivots_ = 0;
};

}  // namespace detail

inline LpSolution solve(const LinearProgram& lp) { return detail::SimplexSolver(lp).run(); }

}  // namespace rootface

#endif  // ROOTFACE_SIMPLEX_HPP
