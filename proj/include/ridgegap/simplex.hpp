#pragma once

#include <cstddef>
#include <vector>

namespace ridgegap::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Row {
  std::vector<double> coeffs;  // dense, one entry per variable
  Sense sense = Sense::Equal;
  double rhs = 0.0;
};

/// maximize objective . x  subject to rows, x >= 0.
struct Program {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Optimal;
  double objective = 0.0;
  std::vector<double> x;
  /// Row multipliers y with y^T A >= c on the columns and y^T A_j = c_j on the
  /// basic ones; rows found redundant get 0.
  std::vector<double> duals;
  std::size_t pivots = 0;
};

struct Options {
  double pivot_tol = 1e-9;
  double cost_tol = 1e-9;
  std::size_t max_pivots = 500'000;
};

/// Two-phase dense-tableau primal simplex with Bland's anti-cycling rule.
/// Throws SolverStall when max_pivots is exceeded.
Solution solve(const Program& program, const Options& options = {});

/// Solves the square system M z = rhs (row-major M) by Gaussian elimination
/// with partial pivoting.  Throws InvalidInput when M is numerically singular.
std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs);

}  // namespace ridgegap::lp
