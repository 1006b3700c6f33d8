#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "argstrength/rational.hpp"

namespace argstrength {

enum class RowOp { Le, Eq, Ge };

// One constraint row: coeffs . x  (op)  rhs. Coefficients are exact rationals;
// missing trailing coefficients are zero.
struct LinearRow {
  std::vector<Rational> coeffs;
  RowOp op = RowOp::Eq;
  Rational rhs;
};

// All variables are implicitly non-negative.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearRow> rows;
  std::vector<Rational> objective;
  bool maximize = false;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective_value;
  std::vector<Rational> point;  // one value per declared variable (Optimal only)
};

namespace detail {

// Two-phase primal simplex on a dense exact-rational tableau. Bland's rule
// (lowest eligible index entering, lowest basic index breaking ratio ties)
// both prevents cycling and makes the result deterministic for identical
// input.
class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t n = lp.num_vars;
    for (const LinearRow& row : lp.rows) {
      if (row.coeffs.size() > n) {
        throw std::invalid_argument("simplex: row references undeclared variable");
      }
    }
    if (lp.objective.size() > n) {
      throw std::invalid_argument("simplex: objective references undeclared variable");
    }

    // Normalize to non-negative right-hand sides.
    struct Prepared { std::vector<Rational> a; RowOp op; Rational b; };
    std::vector<Prepared> prepared;
    prepared.reserve(lp.rows.size());
    for (const LinearRow& row : lp.rows) {
      Prepared p{row.coeffs, row.op, row.rhs};
      p.a.resize(n);
      if (p.b < Rational(0)) {
        for (Rational& c : p.a) c = -c;
        p.b = -p.b;
        p.op = p.op == RowOp::Le ? RowOp::Ge : (p.op == RowOp::Ge ? RowOp::Le : RowOp::Eq);
      }
      prepared.push_back(std::move(p));
    }

    std::size_t slack_count = 0;
    std::size_t art_count = 0;
    for (const Prepared& p : prepared) {
      if (p.op != RowOp::Eq) ++slack_count;
      if (p.op != RowOp::Le) ++art_count;
    }
    art_start_ = n + slack_count;
    cols_ = art_start_ + art_count;

    std::size_t next_slack = n;
    std::size_t next_art = art_start_;
    for (const Prepared& p : prepared) {
      std::vector<Rational> row(cols_);
      for (std::size_t j = 0; j < n; ++j) row[j] = p.a[j];
      std::size_t basic;
      if (p.op == RowOp::Le) {
        row[next_slack] = Rational(1);
        basic = next_slack++;
      } else if (p.op == RowOp::Ge) {
        row[next_slack] = Rational(-1);
        ++next_slack;
        row[next_art] = Rational(1);
        basic = next_art++;
      } else {
        row[next_art] = Rational(1);
        basic = next_art++;
      }
      tab_.push_back(std::move(row));
      rhs_.push_back(p.b);
      basis_.push_back(basic);
    }
  }

  LpSolution solve() {
    if (art_start_ < cols_) {
      load_phase1_costs();
      const LpStatus s = iterate(/*allow_artificial=*/true);
      if (s != LpStatus::Optimal) {
        throw std::logic_error("simplex: phase 1 cannot be unbounded");
      }
      if (objective_ > Rational(0)) {
        return LpSolution{LpStatus::Infeasible, Rational(0), {}};
      }
      expel_artificials();
    }

    load_phase2_costs();
    const LpStatus s = iterate(/*allow_artificial=*/false);
    if (s == LpStatus::Unbounded) {
      return LpSolution{LpStatus::Unbounded, Rational(0), {}};
    }

    LpSolution out;
    out.status = LpStatus::Optimal;
    out.objective_value = lp_.maximize ? -objective_ : objective_;
    out.point.assign(lp_.num_vars, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < lp_.num_vars) out.point[basis_[i]] = rhs_[i];
    }
    return out;
  }

 private:
  bool is_artificial(std::size_t col) const { return col >= art_start_; }

  void load_phase1_costs() {
    // Minimize the sum of artificials: c_j = 1 on artificial columns.
    reduced_.assign(cols_, Rational(0));
    objective_ = Rational(0);
    for (std::size_t j = art_start_; j < cols_; ++j) reduced_[j] = Rational(1);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= tab_[i][j];
      objective_ += rhs_[i];
    }
  }

  void load_phase2_costs() {
    std::vector<Rational> cost(cols_);
    for (std::size_t j = 0; j < lp_.objective.size(); ++j) {
      cost[j] = lp_.maximize ? -lp_.objective[j] : lp_.objective[j];
    }
    reduced_ = cost;
    objective_ = Rational(0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * tab_[i][j];
      objective_ += cb * rhs_[i];
    }
  }

  LpStatus iterate(bool allow_artificial) {
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced_[j] < Rational(0)) { entering = j; break; }
      }
      if (entering == cols_) return LpStatus::Optimal;

      std::size_t leave_row = tab_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        const Rational& a = tab_[i][entering];
        if (a <= Rational(0)) continue;
        const Rational ratio = rhs_[i] / a;
        if (leave_row == tab_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave_row])) {
          leave_row = i;
          best_ratio = ratio;
        }
      }
      if (leave_row == tab_.size()) return LpStatus::Unbounded;
      pivot(leave_row, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = tab_[row][col];
    for (Rational& v : tab_[row]) v /= p;
    rhs_[row] /= p;

    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == row) continue;
      const Rational factor = tab_[i][col];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!tab_[row][j].is_zero()) tab_[i][j] -= factor * tab_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
    }

    const Rational rc = reduced_[col];
    if (!rc.is_zero()) {
      objective_ += rc * rhs_[row];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!tab_[row][j].is_zero()) reduced_[j] -= rc * tab_[row][j];
      }
    }
    basis_[row] = col;
  }

  // After a zero-optimum phase 1, any artificial still basic sits at level
  // zero: replace it with a structural/slack column, or drop the row as
  // redundant when no such column remains.
  void expel_artificials() {
    for (std::size_t i = 0; i < tab_.size();) {
      if (!is_artificial(basis_[i])) { ++i; continue; }
      std::size_t col = art_start_;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (!tab_[i][j].is_zero()) { col = j; break; }
      }
      if (col < art_start_) {
        pivot(i, col);
        ++i;
      } else {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  const LinearProgram& lp_;
  std::size_t cols_ = 0;
  std::size_t art_start_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_;
};

}  // namespace detail

// Exact rational optimum plus a vertex witness attaining it. Deterministic:
// identical programs give identical solutions.
inline LpSolution solve_lp(const LinearProgram& lp) {
  return detail::SimplexTableau(lp).solve();
}

}  // namespace argstrength
