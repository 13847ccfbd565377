#include "ridgegap/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ridgegap/error.hpp"

namespace ridgegap::lp {

namespace {

enum class ColumnKind { Original, Slack, Artificial };

class Tableau {
 public:
  Tableau(const Program& p, const Options& opt) : opt_(opt) {
    rows_ = p.rows.size();
    n_orig_ = p.num_vars;
    negated_.assign(rows_, false);

    // Column layout: originals, then one slack/surplus per inequality, then
    // one artificial per row that cannot start with its slack basic.
    std::size_t slack = 0, art = 0;
    for (const Row& r : p.rows) {
      if (r.coeffs.size() != n_orig_) {
        throw InvalidInput("LP row has " + std::to_string(r.coeffs.size()) +
                           " coefficients, expected " + std::to_string(n_orig_));
      }
      if (r.sense != Sense::Equal) ++slack;
      if (needs_artificial(r)) ++art;
    }
    cols_ = n_orig_ + slack + art;
    width_ = cols_ + 1;
    kind_.assign(cols_, ColumnKind::Original);
    a_.assign(rows_ * width_, 0.0);
    basis_.assign(rows_, 0);

    std::size_t next_slack = n_orig_, next_art = n_orig_ + slack;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Row& r = p.rows[i];
      const bool flip = r.rhs < 0.0;
      negated_[i] = flip;
      const double s = flip ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_orig_; ++j) at(i, j) = s * r.coeffs[j];
      at(i, cols_) = s * r.rhs;
      Sense sense = r.sense;
      if (flip && sense == Sense::LessEqual) {
        sense = Sense::GreaterEqual;
      } else if (flip && sense == Sense::GreaterEqual) {
        sense = Sense::LessEqual;
      }
      if (sense == Sense::LessEqual) {
        kind_[next_slack] = ColumnKind::Slack;
        at(i, next_slack) = 1.0;
        basis_[i] = next_slack++;
      } else {
        if (sense == Sense::GreaterEqual) {
          kind_[next_slack] = ColumnKind::Slack;
          at(i, next_slack++) = -1.0;
        }
        kind_[next_art] = ColumnKind::Artificial;
        at(i, next_art) = 1.0;
        basis_[i] = next_art++;
      }
    }
    original_ = a_;
    active_.assign(rows_, true);
  }

  Solution run(const std::vector<double>& objective) {
    Solution sol;
    // Phase 1: maximize -sum(artificials).
    std::vector<double> phase1(cols_, 0.0);
    bool any_art = false;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (kind_[j] == ColumnKind::Artificial) {
        phase1[j] = -1.0;
        any_art = true;
      }
    }
    if (any_art) {
      set_objective(phase1);
      optimize(/*allow_artificial=*/true);
      if (z_[cols_] < -feas_tol()) {
        sol.status = Status::Infeasible;
        sol.pivots = pivots_;
        return sol;
      }
      drive_out_artificials();
    }

    std::vector<double> c(cols_, 0.0);
    std::copy(objective.begin(), objective.end(), c.begin());
    set_objective(c);
    if (!optimize(/*allow_artificial=*/false)) {
      sol.status = Status::Unbounded;
      sol.pivots = pivots_;
      return sol;
    }

    sol.status = Status::Optimal;
    sol.pivots = pivots_;
    sol.x.assign(n_orig_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (active_[i] && basis_[i] < n_orig_) sol.x[basis_[i]] = std::max(0.0, at(i, cols_));
    }
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n_orig_; ++j) sol.objective += objective[j] * sol.x[j];
    sol.duals = duals(c);
    return sol;
  }

 private:
  static bool needs_artificial(const Row& r) {
    const bool flip = r.rhs < 0.0;
    if (r.sense == Sense::Equal) return true;
    return (r.sense == Sense::GreaterEqual) != flip;
  }

  double& at(std::size_t i, std::size_t j) { return a_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * width_ + j]; }

  double feas_tol() const { return 1e-9 * std::max(1.0, rhs_scale_); }

  void set_objective(const std::vector<double>& c) {
    // z_j = c_B B^-1 A_j - c_j, z_rhs = c_B x_B.
    z_.assign(width_, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) z_[j] = -c[j];
    rhs_scale_ = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      rhs_scale_ = std::max(rhs_scale_, std::abs(at(i, cols_)));
      if (!active_[i]) continue;
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z_[j] += cb * at(i, j);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    if (pivots_ > opt_.max_pivots) {
      throw SolverStall("simplex exceeded " + std::to_string(opt_.max_pivots) + " pivots");
    }
    double* prow = &a_[r * width_];
    const double inv = 1.0 / prow[e];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[e] = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double* row = &a_[i * width_];
      const double factor = row[e];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] -= factor * prow[j];
      row[e] = 0.0;
    }
    const double zf = z_[e];
    if (zf != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) z_[j] -= zf * prow[j];
      z_[e] = 0.0;
    }
    basis_[r] = e;
  }

  // Returns false when the objective is unbounded.
  bool optimize(bool allow_artificial) {
    for (;;) {
      // Dantzig's rule while pivots make progress; Bland's rule (lowest
      // index) once a run of degenerate pivots suggests cycling.
      const bool bland = degenerate_run_ >= kBlandAfter;
      std::size_t enter = cols_;
      double most = -opt_.cost_tol;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!allow_artificial && kind_[j] == ColumnKind::Artificial) continue;
        if (z_[j] < most) {
          enter = j;
          if (bland) break;
          most = z_[j];
        }
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i]) continue;
        const double aij = at(i, enter);
        if (aij <= opt_.pivot_tol) continue;
        const double ratio = std::max(0.0, at(i, cols_)) / aij;
        const double slack = 1e-12 * std::max(1.0, std::abs(best));
        if (leave == rows_ || ratio < best - slack) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + slack && basis_[i] < basis_[leave]) {
          leave = i;
        }
      }
      if (leave == rows_) return false;
      degenerate_run_ = best * at(leave, enter) > opt_.pivot_tol ? 0 : degenerate_run_ + 1;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i] || kind_[basis_[i]] != ColumnKind::Artificial) continue;
      std::size_t enter = cols_;
      double biggest = opt_.pivot_tol;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (kind_[j] == ColumnKind::Artificial) continue;
        if (std::abs(at(i, j)) > biggest) {
          biggest = std::abs(at(i, j));
          enter = j;
        }
      }
      if (enter == cols_) {
        active_[i] = false;  // redundant row
        continue;
      }
      pivot(i, enter);
    }
  }

  std::vector<double> duals(const std::vector<double>& c) const {
    // Solve B^T y = c_B on the active rows using the normalized original columns.
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (active_[i]) act.push_back(i);
    }
    const std::size_t m = act.size();
    std::vector<double> bt(m * m, 0.0), cb(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t col = basis_[act[k]];
      cb[k] = c[col];
      for (std::size_t l = 0; l < m; ++l) {
        bt[k * m + l] = original_[act[l] * width_ + col];
      }
    }
    std::vector<double> y_act = m == 0 ? std::vector<double>{} : solve_dense(bt, cb);
    std::vector<double> y(rows_, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      y[act[k]] = negated_[act[k]] ? -y_act[k] : y_act[k];
    }
    return y;
  }

  Options opt_;
  std::size_t rows_ = 0, cols_ = 0, width_ = 0, n_orig_ = 0;
  std::vector<double> a_, original_, z_;
  std::vector<ColumnKind> kind_;
  std::vector<std::size_t> basis_;
  std::vector<bool> negated_, active_;
  static constexpr std::size_t kBlandAfter = 50;
  std::size_t pivots_ = 0;
  std::size_t degenerate_run_ = 0;
  double rhs_scale_ = 0.0;
};

}  // namespace

Solution solve(const Program& program, const Options& options) {
  if (program.objective.size() != program.num_vars) {
    throw InvalidInput("LP objective length does not match the variable count");
  }
  Tableau t(program, options);
  return t.run(program.objective);
}

std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  if (m.size() != n * n) throw InvalidInput("solve_dense: matrix is not square");
  double scale = 0.0;
  for (double v : m) scale = std::max(scale, std::abs(v));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    }
    if (std::abs(m[piv * n + col]) <= 1e-14 * std::max(1.0, scale)) {
      throw InvalidInput("solve_dense: matrix is numerically singular");
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[col * n + j], m[piv * n + j]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> z(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double s = rhs[r];
    for (std::size_t j = r + 1; j < n; ++j) s -= m[r * n + j] * z[j];
    z[r] = s / m[r * n + r];
  }
  return z;
}

}  // namespace ridgegap::lp
