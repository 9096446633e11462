#include "helianthus/simplex.hpp"

#include "helianthus/errors.hpp"

#include <limits>
#include <optional>
#include <string>

namespace helianthus::regular {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(std::size_t num_vars, std::span<const LinearConstraint> constraints, std::size_t budget)
      : num_vars_(num_vars), budget_(budget) {
    const std::size_t m = constraints.size();
    std::size_t extra = 0;
    for (const auto& c : constraints) {
      if (c.coeffs.size() != num_vars) throw InputError("constraint width does not match variable count");
      const bool flip = c.rhs < 0;
      const Sense s = flip ? mirror(c.sense) : c.sense;
      extra += s == Sense::GreaterEqual ? 2 : 1;
    }
    cols_ = num_vars + extra;
    rows_.assign(m, std::vector<Rational>(cols_ + 1));
    basis_.assign(m, kNone);
    artificial_.assign(cols_, false);

    std::size_t next = num_vars;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = constraints[i];
      const bool flip = c.rhs < 0;
      const Sense s = flip ? mirror(c.sense) : c.sense;
      auto& row = rows_[i];
      for (std::size_t j = 0; j < num_vars; ++j) row[j] = flip ? Rational(-c.coeffs[j]) : c.coeffs[j];
      row[cols_] = flip ? Rational(-c.rhs) : c.rhs;
      switch (s) {
        case Sense::LessEqual:
          row[next] = 1;
          basis_[i] = next++;
          break;
        case Sense::GreaterEqual:
          row[next++] = -1;
          row[next] = 1;
          artificial_[next] = true;
          basis_[i] = next++;
          break;
        case Sense::Equal:
          row[next] = 1;
          artificial_[next] = true;
          basis_[i] = next++;
          break;
      }
    }
  }

  /// Phase 1: maximize -(sum of artificials). Returns false if infeasible.
  bool phase_one() {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!artificial_[j] || j == cols_) reduced_[j] += rows_[i][j];
    }
    // reduced_[cols_] holds -z where z = -(sum of artificial values).
    run(/*allow_artificial=*/false);
    if (reduced_[cols_] != 0) return false;
    drive_out_artificials();
    return true;
  }

  /// Phase 2 on the given objective (maximize). Returns false if unbounded.
  bool phase_two(std::span<const Rational> objective) {
    reduced_.assign(cols_ + 1, Rational(0));
    if (objective.empty()) return true;
    for (std::size_t j = 0; j < num_vars_; ++j) reduced_[j] = objective[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b >= num_vars_ || objective[b] == 0) continue;
      const Rational cb = objective[b];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[i][j] != 0) reduced_[j] -= cb * rows_[i][j];
    }
    return run(/*allow_artificial=*/false);
  }

  [[nodiscard]] std::vector<Rational> solution() const {
    std::vector<Rational> x(num_vars_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < num_vars_) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

  [[nodiscard]] std::size_t pivots() const { return pivots_; }

 private:
  static Sense mirror(Sense s) {
    if (s == Sense::LessEqual) return Sense::GreaterEqual;
    if (s == Sense::GreaterEqual) return Sense::LessEqual;
    return Sense::Equal;
  }

  /// Bland's rule iterations. Returns false on an unbounded direction.
  bool run(bool allow_artificial) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (artificial_[j] && !allow_artificial) continue;
        if (reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][cols_] / a;
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    if (++pivots_ > budget_)
      throw ResourceError("simplex pivot budget of " + std::to_string(budget_) + " exceeded");
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (prow[j] == 0) continue;
      prow[j] *= inv;
      nonzero.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (const std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(reduced_);
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (!artificial_[basis_[i]]) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < cols_ && !col; ++j)
        if (!artificial_[j] && rows_[i][j] != 0) col = j;
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        // Redundant equality: the row is a combination of the others.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t num_vars_;
  std::size_t cols_ = 0;
  std::size_t budget_;
  std::size_t pivots_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<bool> artificial_;
};

}  // namespace

LpResult solve_lp(std::size_t num_vars, std::span<const LinearConstraint> constraints,
                  std::span<const Rational> objective, std::size_t pivot_budget) {
  if (!objective.empty() && objective.size() != num_vars)
    throw InputError("objective width does not match variable count");
  Tableau tableau(num_vars, constraints, pivot_budget);
  LpResult result;
  if (!tableau.phase_one()) {
    result.status = LpStatus::Infeasible;
    result.pivots = tableau.pivots();
    return result;
  }
  if (!tableau.phase_two(objective)) {
    result.status = LpStatus::Unbounded;
    result.pivots = tableau.pivots();
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = tableau.solution();
  result.pivots = tableau.pivots();
  for (std::size_t j = 0; j < objective.size(); ++j) result.objective += objective[j] * result.x[j];
  return result;
}

}  // namespace helianthus::regular
