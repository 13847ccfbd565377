#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ridgegap/domain.hpp"
#include "ridgegap/paths.hpp"

namespace ridgegap {

/// Directed graph whose cycles are exactly the closed paths of a domain.
///
/// State 2*u + 0 is "at point u, arrived by an A-edge"; state 2*u + 1 is "at
/// point u, arrived by a B-edge".  An A-edge runs from (u,B) to (v,A) when
/// u != v share an a-level and carries (f(u) - f(v))/2; a B-edge runs from
/// (u,A) to (v,B) when u != v share a b-level and carries (f(v) - f(u))/2.
/// The mean weight of a cycle equals path_functional of the closed path that
/// starts at the source of one of its A-edges.
struct AlternationGraph {
  struct Edge {
    Index from;
    Index to;
    double weight;
    EdgeKind kind;
  };

  std::size_t num_points = 0;
  std::vector<Edge> edges;

  std::size_t num_states() const noexcept { return 2 * num_points; }
  static constexpr Index state(Index point, EdgeKind arrived_by) noexcept {
    return 2 * point + (arrived_by == EdgeKind::A ? 0 : 1);
  }
  static constexpr Index point_of(Index state) noexcept { return state / 2; }
  static constexpr EdgeKind arrived_by(Index state) noexcept {
    return state % 2 == 0 ? EdgeKind::A : EdgeKind::B;
  }
};

/// Level classes of size s contribute s(s-1) directed edges of their kind.
/// Memory grows with the sum of squared level sizes; no contraction is applied.
AlternationGraph build_alternation_graph(const SampledDomain& domain,
                                         std::span<const double> fvals);

struct MeanCycle {
  double mean = 0.0;      ///< mean weight of `states`, recomputed from the edges
  double dp_mean = 0.0;   ///< the walk-length dynamic program's optimum
  std::vector<Index> states;  ///< simple cycle, states[0] -> states[1] -> ... -> states[0]
};

/// Maximum cycle mean by Karp's walk-length recurrence, run on each strongly
/// connected component.  Returns nullopt when the graph has no cycle.
/// Memory is O(n^2) per component of n states.
std::optional<MeanCycle> max_mean_cycle(const AlternationGraph& graph);

/// The closed path traced by a cycle of the alternation graph, starting at
/// the source of an A-edge so that its functional equals the cycle mean.
ClosedPath closed_path_from_cycle(std::span<const Index> states);

struct SupResult {
  enum class Method { ExactMeanCycle, Enumeration };

  double value = 0.0;  ///< sup over closed paths of |G_p(f)|, 0 when none exist
  std::optional<ClosedPath> witness;
  Method method = Method::ExactMeanCycle;
};

const char* to_string(SupResult::Method m) noexcept;

/// Exact sup of |G_p(f)| over all closed paths of a finite domain.
SupResult sup_closed_path(const SampledDomain& domain, std::span<const double> fvals);

struct EnumerationResult {
  std::vector<ClosedPath> paths;  ///< canonical representatives, sorted
  bool blowup = false;            ///< the cap was hit; `paths` is partial
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Every closed path of length <= max_len, one per rotation/reversal class.
/// Only meant for desk-scale domains; sets `blowup` past `cap` raw hits.
EnumerationResult enumerate_closed_paths(const SampledDomain& domain, std::size_t max_len,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Brute-force counterpart of sup_closed_path over enumerated paths.
SupResult sup_by_enumeration(const SampledDomain& domain, std::span<const double> fvals,
                             std::size_t max_len,
                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace ridgegap
