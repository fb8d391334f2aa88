#pragma once

/**
 * @file lp.hpp
 * @brief Exact rational linear programming (dense two-phase simplex).
 *
 * Variables are nonnegative unless marked free. Pivoting follows Bland's
 * rule throughout, so the method terminates on degenerate problems without
 * perturbation.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "covrad/errors.hpp"
#include "covrad/matrix.hpp"
#include "covrad/rational.hpp"

namespace covrad {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  ///< objective value at x (Optimal only)
  RatVector x;     ///< optimal point in the original variables
};

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars)
      : n_(num_vars), objective_(num_vars, Rational(0)), free_(num_vars, false) {}

  std::size_t num_vars() const { return n_; }
  std::size_t num_rows() const { return rows_.size(); }

  void maximize(RatVector c) { set_objective(std::move(c), true); }
  void minimize(RatVector c) { set_objective(std::move(c), false); }

  void add_row(RatVector coef, Sense sense, Rational rhs) {
    if (coef.size() != n_) throw DimensionError("LP row has wrong length");
    rows_.push_back({std::move(coef), sense, std::move(rhs)});
  }

  void set_free(std::size_t j) {
    if (j >= n_) throw DimensionError("LP variable index out of range");
    free_[j] = true;
  }

  LpResult solve() const;

 private:
  struct Row {
    RatVector coef;
    Sense sense;
    Rational rhs;
  };

  void set_objective(RatVector c, bool maximize) {
    if (c.size() != n_) throw DimensionError("LP objective has wrong length");
    objective_ = std::move(c);
    maximize_ = maximize;
  }

  std::size_t n_;
  RatVector objective_;
  bool maximize_ = true;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

namespace detail {

/// Dense simplex tableau; the last column holds the right-hand side and the
/// last row holds reduced costs of the current (maximization) objective.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t cols) : m_(m), cols_(cols), t_(m + 1, RatVector(cols + 1)), basis_(m) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  RatVector& obj() { return t_[m_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / t_[r][c];
    for (auto& v : t_[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  /// Loads objective max c·x as reduced costs against the current basis.
  void load_objective(const RatVector& c) {
    auto& z = obj();
    for (std::size_t j = 0; j < cols_; ++j) z[j] = -c[j];
    z[cols_] = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational f = z[basis_[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[i][j].is_zero()) z[j] -= f * t_[i][j];
    }
  }

  /// Runs Bland-rule simplex on the loaded objective over allowed columns.
  /// Returns false if unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && obj()[j].sign() < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][*enter].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_, cols_;
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

inline LpResult LinearProgram::solve() const {
  // column layout: structural columns (free variables split in two), then
  // one slack/surplus per inequality, then artificials
  std::vector<std::size_t> pos_col(n_), neg_col(n_, static_cast<std::size_t>(-1));
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    pos_col[j] = ncols++;
    if (free_[j]) neg_col[j] = ncols++;
  }
  const std::size_t m = rows_.size();
  std::vector<std::size_t> slack_col(m, static_cast<std::size_t>(-1));
  std::vector<bool> flip(m, false);
  std::vector<Sense> sense(m);
  for (std::size_t i = 0; i < m; ++i) {
    sense[i] = rows_[i].sense;
    if (rows_[i].rhs.sign() < 0) {
      flip[i] = true;
      if (sense[i] == Sense::LessEqual) sense[i] = Sense::GreaterEqual;
      else if (sense[i] == Sense::GreaterEqual) sense[i] = Sense::LessEqual;
    }
    if (sense[i] != Sense::Equal) slack_col[i] = ncols++;
  }
  const std::size_t first_art = ncols;
  std::vector<std::size_t> art_col(m, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < m; ++i)
    if (sense[i] != Sense::LessEqual) art_col[i] = ncols++;

  detail::Tableau tab(m, ncols);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational s = flip[i] ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& a = rows_[i].coef[j];
      if (a.is_zero()) continue;
      tab.at(i, pos_col[j]) = s * a;
      if (free_[j]) tab.at(i, neg_col[j]) = -(s * a);
    }
    tab.rhs(i) = s * rows_[i].rhs;
    if (sense[i] == Sense::LessEqual) {
      tab.at(i, slack_col[i]) = 1;
      tab.basis()[i] = slack_col[i];
    } else {
      if (sense[i] == Sense::GreaterEqual) tab.at(i, slack_col[i]) = -1;
      tab.at(i, art_col[i]) = 1;
      tab.basis()[i] = art_col[i];
    }
  }

  std::vector<bool> allowed(ncols, true);
  if (first_art < ncols) {
    RatVector phase1(ncols, Rational(0));
    for (std::size_t j = first_art; j < ncols; ++j) phase1[j] = -1;
    tab.load_objective(phase1);
    tab.optimize(allowed);
    if (tab.obj()[ncols].sign() != 0) return {LpStatus::Infeasible, Rational(0), {}};
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < first_art) {
        ++i;
        continue;
      }
      std::optional<std::size_t> c;
      for (std::size_t j = 0; j < first_art; ++j)
        if (!tab.at(i, j).is_zero()) {
          c = j;
          break;
        }
      if (c) {
        tab.pivot(i, *c);
        ++i;
      } else {
        tab.drop_row(i);
      }
    }
    for (std::size_t j = first_art; j < ncols; ++j) allowed[j] = false;
  }

  RatVector c(ncols, Rational(0));
  for (std::size_t j = 0; j < n_; ++j) {
    const Rational v = maximize_ ? objective_[j] : -objective_[j];
    c[pos_col[j]] = v;
    if (free_[j]) c[neg_col[j]] = -v;
  }
  tab.load_objective(c);
  if (!tab.optimize(allowed)) return {LpStatus::Unbounded, Rational(0), {}};

  RatVector col_value(ncols, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) col_value[tab.basis()[i]] = tab.rhs(i);
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    res.x[j] = col_value[pos_col[j]];
    if (free_[j]) res.x[j] -= col_value[neg_col[j]];
  }
  res.value = dot(objective_, res.x);
  return res;
}

}  // namespace covrad
