#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ridgegap/domain.hpp"
#include "ridgegap/paths.hpp"
#include "ridgegap/simplex.hpp"

namespace ridgegap {

/// g(a.x) + h(b.x) tabulated on the levels of a domain.
struct RidgePair {
  std::vector<double> g;  ///< indexed by a-level id
  std::vector<double> h;  ///< indexed by b-level id
};

/// g[a_level(i)] + h[b_level(i)].  Throws MissingLevel if a table is short
/// and IndexOutOfRange for a bad point index.
double evaluate_ridge(const RidgePair& v, const SampledDomain& domain, Index point);

/// Values of `v` at every domain point.
std::vector<double> evaluate_ridge(const RidgePair& v, const SampledDomain& domain);

struct BestApprox {
  RidgePair v0;
  double error = 0.0;              ///< minimax value t*
  std::vector<double> residual;    ///< f - v0 at each point
  std::vector<Index> pinned_a_levels;  ///< gauge: g = 0 on these levels
  std::size_t pivots = 0;
};

/// Best uniform approximation of `fvals` from R(a,b) on the domain.
///
/// Solved through the dual LP: maximize sum f_i (u_i - w_i) over u, w >= 0
/// with zero net mass on every level and total mass 1; the primal tables are
/// the optimal row multipliers.  In each connected component of the
/// level-incidence graph the smallest a-level is pinned to g = 0.
BestApprox best_ridge_linf(const SampledDomain& domain, std::span<const double> fvals,
                           const lp::Options& options = {});

struct ExtremalPath {
  Path path;
  bool closed = false;  ///< appending pts[0] keeps it a path
};

struct ExtremalPaths {
  std::vector<ExtremalPath> paths;  ///< closed paths first, each class once
  std::optional<std::string> advisory;
};

/// Greedily grows alternating-sign paths through points where
/// |residual| >= (1 - tol) * error.  Growth stops at the first closure or when
/// no unused partner of opposite sign remains.
ExtremalPaths extremal_paths_of_residual(const SampledDomain& domain,
                                         std::span<const double> fvals,
                                         const BestApprox& approx, double tol = 1e-6);

}  // namespace ridgegap
