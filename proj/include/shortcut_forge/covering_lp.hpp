#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace shortcut_forge {

// Fractional covering LP
//
//   minimize   sum_j x_j
//   subject to sum_{j in S_i} x_j >= 1   for every row S_i
//              x >= 0
//
// solved by a dense dual simplex. Rows may be appended between solves: the
// previous optimal basis stays dual feasible, so re-optimizing after a cut
// usually costs a handful of pivots. Only variables that occur in some row
// get a tableau column; all others are zero at every optimum.
class CoveringLp {
 public:
  explicit CoveringLp(std::size_t num_variables, double tolerance = 1e-9);

  // Throws std::invalid_argument for an empty row or an unknown variable.
  void add_row(std::span<const std::size_t> variables);

  struct Solution {
    double objective = 0.0;
    std::vector<double> values;
  };

  Solution solve();

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_variables() const { return column_of_.size(); }
  std::size_t pivots() const { return pivots_; }

 private:
  static constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

  std::size_t ensure_column(std::size_t variable);
  std::size_t append_column(double reduced_cost);
  void append_row(std::span<const std::size_t> variables);
  void pivot(std::size_t row, std::size_t col);
  void optimize();
  Solution extract() const;
  bool satisfies_rows(const std::vector<double>& values) const;
  void rebuild();

  double tol_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::size_t> column_of_;
  std::vector<std::size_t> variable_of_column_;
  std::vector<std::vector<double>> tableau_;
  std::vector<double> rhs_;
  std::vector<double> reduced_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace shortcut_forge
