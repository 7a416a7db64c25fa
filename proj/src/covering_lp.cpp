#include "shortcut_forge/covering_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shortcut_forge {

namespace {
constexpr std::size_t kDegenerateBeforeBland = 50;
constexpr std::size_t kMaxPivots = 5'000'000;
constexpr double kZero = 1e-12;
}  // namespace

CoveringLp::CoveringLp(std::size_t num_variables, double tolerance)
    : tol_(tolerance), column_of_(num_variables, kNoColumn) {}

void CoveringLp::add_row(std::span<const std::size_t> variables) {
  if (variables.empty()) throw std::invalid_argument("covering row must be nonempty");
  std::vector<std::size_t> row(variables.begin(), variables.end());
  std::sort(row.begin(), row.end());
  row.erase(std::unique(row.begin(), row.end()), row.end());
  if (row.back() >= column_of_.size()) throw std::invalid_argument("covering row names an unknown variable");
  append_row(row);
  rows_.push_back(std::move(row));
}

std::size_t CoveringLp::append_column(double reduced_cost) {
  for (auto& row : tableau_) row.push_back(0.0);
  reduced_.push_back(reduced_cost);
  variable_of_column_.push_back(kNoColumn);
  return reduced_.size() - 1;
}

std::size_t CoveringLp::ensure_column(std::size_t variable) {
  if (column_of_[variable] == kNoColumn) {
    const std::size_t col = append_column(1.0);
    variable_of_column_[col] = variable;
    column_of_[variable] = col;
  }
  return column_of_[variable];
}

void CoveringLp::append_row(std::span<const std::size_t> variables) {
  for (std::size_t v : variables) ensure_column(v);
  const std::size_t slack = append_column(0.0);

  // -sum x_j + slack = -1, then eliminate the current basic columns.
  std::vector<double> row(reduced_.size(), 0.0);
  for (std::size_t v : variables) row[column_of_[v]] = -1.0;
  row[slack] = 1.0;
  double rhs = -1.0;
  for (std::size_t k = 0; k < tableau_.size(); ++k) {
    const double coef = row[basis_[k]];
    if (coef == 0.0) continue;
    const auto& source = tableau_[k];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (source[j] != 0.0) row[j] -= coef * source[j];
    }
    rhs -= coef * rhs_[k];
  }
  tableau_.push_back(std::move(row));
  rhs_.push_back(rhs);
  basis_.push_back(slack);
}

void CoveringLp::pivot(std::size_t r, std::size_t q) {
  auto& prow = tableau_[r];
  const double inv = 1.0 / prow[q];
  for (double& a : prow) a *= inv;
  rhs_[r] *= inv;
  prow[q] = 1.0;

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < prow.size(); ++j) {
    if (std::abs(prow[j]) > kZero) support.push_back(j);
  }
  auto eliminate = [&](std::vector<double>& row, double& value) {
    const double f = row[q];
    if (f == 0.0) return;
    for (std::size_t j : support) {
      row[j] -= f * prow[j];
      if (std::abs(row[j]) < kZero) row[j] = 0.0;
    }
    row[q] = 0.0;
    value -= f * rhs_[r];
  };
  for (std::size_t k = 0; k < tableau_.size(); ++k) {
    if (k != r) eliminate(tableau_[k], rhs_[k]);
  }
  double unused = 0.0;
  eliminate(reduced_, unused);
  basis_[r] = q;
  ++pivots_;
}

void CoveringLp::optimize() {
  std::size_t degenerate = 0;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > kMaxPivots) throw std::runtime_error("covering LP: pivot limit reached");

    // Leaving row: most infeasible, or Bland's smallest basic index once
    // the walk stalls on degenerate pivots.
    std::size_t r = tableau_.size();
    for (std::size_t k = 0; k < tableau_.size(); ++k) {
      if (rhs_[k] >= -tol_) continue;
      if (r == tableau_.size()) {
        r = k;
      } else if (degenerate >= kDegenerateBeforeBland ? basis_[k] < basis_[r] : rhs_[k] < rhs_[r]) {
        r = k;
      }
    }
    if (r == tableau_.size()) return;

    const auto& row = tableau_[r];
    std::size_t q = row.size();
    double best = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] >= -tol_) continue;
      const double ratio = std::max(0.0, reduced_[j]) / -row[j];
      if (q == row.size() || ratio < best - tol_) {
        q = j;
        best = ratio;
      }
    }
    if (q == row.size()) throw std::logic_error("covering LP: primal infeasible row");
    degenerate = best <= tol_ ? degenerate + 1 : 0;
    pivot(r, q);
  }
}

CoveringLp::Solution CoveringLp::extract() const {
  Solution sol;
  sol.values.assign(column_of_.size(), 0.0);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t var = variable_of_column_[basis_[r]];
    if (var == kNoColumn) continue;
    const double v = rhs_[r];
    sol.values[var] = v < tol_ ? 0.0 : v;
  }
  for (double v : sol.values) sol.objective += v;
  return sol;
}

bool CoveringLp::satisfies_rows(const std::vector<double>& values) const {
  for (const auto& row : rows_) {
    double total = 0.0;
    for (std::size_t v : row) total += values[v];
    if (total < 1.0 - 1e-7) return false;
  }
  return true;
}

void CoveringLp::rebuild() {
  tableau_.clear();
  rhs_.clear();
  reduced_.clear();
  basis_.clear();
  variable_of_column_.clear();
  std::fill(column_of_.begin(), column_of_.end(), kNoColumn);
  for (const auto& row : rows_) append_row(row);
}

CoveringLp::Solution CoveringLp::solve() {
  optimize();
  Solution sol = extract();
  if (satisfies_rows(sol.values)) return sol;
  // Accumulated round-off; refactor from the original rows.
  rebuild();
  optimize();
  sol = extract();
  if (!satisfies_rows(sol.values)) throw std::runtime_error("covering LP: numerically unstable solve");
  return sol;
}

}  // namespace shortcut_forge
