#include "ridgegap/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "ridgegap/error.hpp"

namespace ridgegap {

double evaluate_ridge(const RidgePair& v, const SampledDomain& domain, Index point) {
  if (point >= domain.size()) {
    throw IndexOutOfRange("point index " + std::to_string(point));
  }
  const Index al = domain.a_level(point);
  const Index bl = domain.b_level(point);
  if (al >= v.g.size()) throw MissingLevel("g table lacks a-level " + std::to_string(al));
  if (bl >= v.h.size()) throw MissingLevel("h table lacks b-level " + std::to_string(bl));
  return v.g[al] + v.h[bl];
}

std::vector<double> evaluate_ridge(const RidgePair& v, const SampledDomain& domain) {
  std::vector<double> out(domain.size());
  for (Index i = 0; i < domain.size(); ++i) out[i] = evaluate_ridge(v, domain, i);
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BestApprox best_ridge_linf(const SampledDomain& domain, std::span<const double> fvals,
                           const lp::Options& options) {
  if (domain.empty()) throw InvalidInput("best_ridge_linf needs a non-empty domain");
  if (fvals.size() != domain.size()) {
    throw InvalidInput("function values must cover every domain point");
  }
  const std::size_t n = domain.size();
  const std::size_t la = domain.num_a_levels();
  const std::size_t lb = domain.num_b_levels();

  // Level-incidence components: node k < la is a-level k, node la + k is b-level k.
  DisjointSets sets(la + lb);
  for (Index i = 0; i < n; ++i) sets.unite(domain.a_level(i), la + domain.b_level(i));
  std::vector<bool> pinned(la, false);
  for (Index k = 0; k < la; ++k) {
    if (sets.find(k) == k) pinned[k] = true;  // roots are the smallest a-level
  }

  // Row layout: free a-levels, all b-levels, then the mass row.
  std::vector<std::size_t> a_row(la, 0);
  std::size_t rows = 0;
  for (Index k = 0; k < la; ++k) {
    if (!pinned[k]) a_row[k] = rows++;
  }
  const std::size_t b_base = rows;
  rows += lb;
  const std::size_t mass_row = rows++;

  lp::Program prog;
  prog.num_vars = 2 * n;  // u_i at 2i, w_i at 2i+1
  prog.objective.resize(2 * n);
  prog.rows.assign(rows, lp::Row{std::vector<double>(2 * n, 0.0), lp::Sense::Equal, 0.0});
  for (Index i = 0; i < n; ++i) {
    prog.objective[2 * i] = fvals[i];
    prog.objective[2 * i + 1] = -fvals[i];
    const Index al = domain.a_level(i);
    if (!pinned[al]) {
      prog.rows[a_row[al]].coeffs[2 * i] = 1.0;
      prog.rows[a_row[al]].coeffs[2 * i + 1] = -1.0;
    }
    prog.rows[b_base + domain.b_level(i)].coeffs[2 * i] = 1.0;
    prog.rows[b_base + domain.b_level(i)].coeffs[2 * i + 1] = -1.0;
    prog.rows[mass_row].coeffs[2 * i] = 1.0;
    prog.rows[mass_row].coeffs[2 * i + 1] = 1.0;
  }
  prog.rows[mass_row].rhs = 1.0;

  const lp::Solution sol = lp::solve(prog, options);
  if (sol.status != lp::Status::Optimal) {
    throw SolverStall("ridge LP did not reach optimality");
  }

  BestApprox out;
  out.pivots = sol.pivots;
  out.v0.g.assign(la, 0.0);
  out.v0.h.assign(lb, 0.0);
  for (Index k = 0; k < la; ++k) {
    if (!pinned[k]) out.v0.g[k] = sol.duals[a_row[k]];
    else out.pinned_a_levels.push_back(k);
  }
  for (Index k = 0; k < lb; ++k) out.v0.h[k] = sol.duals[b_base + k];
  out.error = std::max(0.0, sol.objective);
  out.residual.resize(n);
  for (Index i = 0; i < n; ++i) out.residual[i] = fvals[i] - evaluate_ridge(out.v0, domain, i);
  return out;
}

ExtremalPaths extremal_paths_of_residual(const SampledDomain& domain,
                                         std::span<const double> fvals,
                                         const BestApprox& approx, double tol) {
  ExtremalPaths out;
  if (!(approx.error > 0.0)) return out;
  if (approx.residual.size() != domain.size() || fvals.size() != domain.size()) {
    throw InvalidInput("residual and function values must cover every domain point");
  }
  const auto& r = approx.residual;
  const double floor = (1.0 - tol) * approx.error;
  std::vector<bool> extremal(domain.size(), false);
  bool any = false;
  for (Index i = 0; i < domain.size(); ++i) {
    extremal[i] = std::abs(r[i]) >= floor;
    any = any || extremal[i];
  }
  auto sign = [&](Index i) { return r[i] > 0.0 ? 1 : -1; };
  auto members = [&](EdgeKind k, Index u) -> const std::vector<Index>& {
    return k == EdgeKind::A ? domain.a_members()[domain.a_level(u)]
                            : domain.b_members()[domain.b_level(u)];
  };

  std::set<ClosedPath> closed_seen;
  std::set<std::pair<std::vector<Index>, EdgeKind>> open_seen;
  std::vector<ExtremalPath> open_paths;

  for (Index seed = 0; seed < domain.size(); ++seed) {
    if (!extremal[seed]) continue;
    for (EdgeKind first : {EdgeKind::A, EdgeKind::B}) {
      std::vector<Index> pts{seed};
      std::vector<bool> used(domain.size(), false);
      used[seed] = true;
      bool closed = false;
      for (;;) {
        const Index cur = pts.back();
        if (pts.size() % 2 == 0) {
          const auto& m = members(edge_kind_at(first, pts.size() - 1), cur);
          if (cur != seed && std::binary_search(m.begin(), m.end(), seed)) {
            closed = true;
            break;
          }
        }
        std::optional<Index> next;
        for (Index v : members(edge_kind_at(first, pts.size() - 1), cur)) {
          if (v != cur && !used[v] && extremal[v] && sign(v) == -sign(cur)) {
            next = v;
            break;
          }
        }
        if (!next) break;
        used[*next] = true;
        pts.push_back(*next);
      }
      if (pts.size() < 2) continue;
      if (closed) {
        if (closed_seen.insert(canonical_closed_path(ClosedPath{pts, first})).second) {
          out.paths.push_back({Path{pts, first}, true});
        }
      } else if (open_seen.insert({pts, first}).second) {
        open_paths.push_back({Path{pts, first}, false});
      }
    }
  }
  for (auto& p : open_paths) out.paths.push_back(std::move(p));
  if (out.paths.empty() && any) {
    out.advisory = "extremal points exist but no alternating partner reaches the same "
                   "magnitude; no path of length >= 2";
  }
  return out;
}

}  // namespace ridgegap
