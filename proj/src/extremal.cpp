#include "ridgegap/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "ridgegap/error.hpp"

namespace ridgegap {

const char* to_string(SupResult::Method m) noexcept {
  return m == SupResult::Method::ExactMeanCycle ? "exact-mean-cycle" : "enumeration";
}

AlternationGraph build_alternation_graph(const SampledDomain& domain,
                                         std::span<const double> fvals) {
  if (fvals.size() != domain.size()) {
    throw InvalidInput("function values must cover every domain point");
  }
  AlternationGraph g;
  g.num_points = domain.size();
  using G = AlternationGraph;
  for (const auto& members : domain.a_members()) {
    for (Index u : members) {
      for (Index v : members) {
        if (u == v) continue;
        g.edges.push_back({G::state(u, EdgeKind::B), G::state(v, EdgeKind::A),
                           (fvals[u] - fvals[v]) / 2.0, EdgeKind::A});
      }
    }
  }
  for (const auto& members : domain.b_members()) {
    for (Index u : members) {
      for (Index v : members) {
        if (u == v) continue;
        g.edges.push_back({G::state(u, EdgeKind::A), G::state(v, EdgeKind::B),
                           (fvals[v] - fvals[u]) / 2.0, EdgeKind::B});
      }
    }
  }
  return g;
}

namespace {

// Iterative Tarjan; components come out in reverse topological order and
// each component's states are sorted ascending.
std::vector<std::vector<Index>> strongly_connected(
    std::size_t n, const std::vector<std::vector<Index>>& out) {
  constexpr Index kUnset = std::numeric_limits<Index>::max();
  std::vector<Index> index(n, kUnset), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> comps;
  Index counter = 0;
  struct Frame {
    Index v;
    std::size_t next;
  };
  for (Index root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& fr = call.back();
      if (fr.next < out[fr.v].size()) {
        const Index w = out[fr.v][fr.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
        continue;
      }
      const Index v = fr.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Index> comp;
        Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

struct LocalEdge {
  Index from;
  double weight;
};

double cycle_mean(std::span<const Index> cyc,
                  const std::vector<std::vector<std::pair<Index, double>>>& out) {
  double total = 0.0;
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    const Index u = cyc[k];
    const Index v = cyc[(k + 1) % cyc.size()];
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [to, w] : out[u]) {
      if (to == v) best = std::max(best, w);
    }
    total += best;
  }
  return total / static_cast<double>(cyc.size());
}

// Splits a walk into simple cycles by cutting at each first repetition.
std::vector<std::vector<Index>> simple_cycles_of_walk(const std::vector<Index>& walk) {
  std::vector<std::vector<Index>> cycles;
  std::vector<Index> stack;
  for (Index v : walk) {
    auto it = std::find(stack.begin(), stack.end(), v);
    if (it != stack.end()) {
      cycles.emplace_back(it, stack.end());
      stack.erase(it + 1, stack.end());
    } else {
      stack.push_back(v);
    }
  }
  return cycles;
}

}  // namespace

std::optional<MeanCycle> max_mean_cycle(const AlternationGraph& graph) {
  const std::size_t n_states = graph.num_states();
  std::vector<std::vector<Index>> out_ids(n_states);
  std::vector<std::vector<std::pair<Index, double>>> out(n_states);
  for (const auto& e : graph.edges) {
    if (e.from >= n_states || e.to >= n_states) {
      throw IndexOutOfRange("alternation graph edge refers to a missing state");
    }
    out_ids[e.from].push_back(e.to);
    out[e.from].emplace_back(e.to, e.weight);
  }
  for (auto& ids : out_ids) std::sort(ids.begin(), ids.end());

  std::optional<MeanCycle> best;
  const auto comps = strongly_connected(n_states, out_ids);
  std::vector<Index> local(n_states, 0);
  std::vector<char> in_comp(n_states, 0);

  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;  // no self-loops, so singletons are acyclic
    const std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i) {
      local[comp[i]] = i;
      in_comp[comp[i]] = 1;
    }
    std::vector<std::vector<LocalEdge>> in(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [to, w] : out[comp[i]]) {
        if (in_comp[to]) in[local[to]].push_back({i, w});
      }
    }
    for (auto& lst : in) {
      std::sort(lst.begin(), lst.end(),
                [](const LocalEdge& l, const LocalEdge& r) { return l.from < r.from; });
    }

    // walk[k][v]: heaviest walk of exactly k edges ending at v (any start).
    constexpr double kNone = -std::numeric_limits<double>::infinity();
    std::vector<double> walk((n + 1) * n, kNone);
    std::vector<std::uint32_t> pred((n + 1) * n, 0);
    for (std::size_t v = 0; v < n; ++v) walk[v] = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double* prev = &walk[(k - 1) * n];
      double* cur = &walk[k * n];
      std::uint32_t* pk = &pred[k * n];
      for (std::size_t v = 0; v < n; ++v) {
        for (const LocalEdge& e : in[v]) {
          if (prev[e.from] == kNone) continue;
          const double cand = prev[e.from] + e.weight;
          if (cand > cur[v]) {
            cur[v] = cand;
            pk[v] = static_cast<std::uint32_t>(e.from);
          }
        }
      }
    }

    double lambda = kNone;
    std::size_t arg_v = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const double dn = walk[n * n + v];
      if (dn == kNone) continue;
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < n; ++k) {
        const double dk = walk[k * n + v];
        if (dk == kNone) continue;
        worst = std::min(worst, (dn - dk) / static_cast<double>(n - k));
      }
      if (worst > lambda) {
        lambda = worst;
        arg_v = v;
      }
    }

    std::vector<Index> trace(n + 1);
    std::size_t v = arg_v;
    for (std::size_t k = n + 1; k-- > 0;) {
      trace[k] = comp[v];
      if (k > 0) v = pred[k * n + v];
    }
    for (auto& cyc : simple_cycles_of_walk(trace)) {
      // Start each cycle at its smallest state for reproducible output.
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      const double mean = cycle_mean(cyc, out);
      const bool better =
          !best || mean > best->mean ||
          (mean == best->mean && cyc.front() < best->states.front());
      if (better) best = MeanCycle{mean, lambda, std::move(cyc)};
    }
    for (Index s : comp) in_comp[s] = 0;
  }
  return best;
}

ClosedPath closed_path_from_cycle(std::span<const Index> states) {
  std::vector<Index> cyc(states.begin(), states.end());
  // Start at a state reached by a B-edge: its outgoing edge is an A-edge.
  auto it = std::find_if(cyc.begin(), cyc.end(), [](Index s) {
    return AlternationGraph::arrived_by(s) == EdgeKind::B;
  });
  if (it == cyc.end()) throw InvalidInput("cycle does not alternate edge kinds");
  std::rotate(cyc.begin(), it, cyc.end());
  ClosedPath cp;
  cp.first_edge = EdgeKind::A;
  for (Index s : cyc) cp.pts.push_back(AlternationGraph::point_of(s));
  return cp;
}

SupResult sup_closed_path(const SampledDomain& domain, std::span<const double> fvals) {
  SupResult res;
  res.method = SupResult::Method::ExactMeanCycle;
  const auto graph = build_alternation_graph(domain, fvals);
  const auto cycle = max_mean_cycle(graph);
  if (!cycle) return res;
  ClosedPath cp = canonical_signed(closed_path_from_cycle(cycle->states));
  res.value = std::max(0.0, path_functional(cp, fvals));
  res.witness = std::move(cp);
  return res;
}

EnumerationResult enumerate_closed_paths(const SampledDomain& domain, std::size_t max_len,
                                         std::size_t cap) {
  if (max_len < 2) throw InvalidInput("maxLen must be at least 2");
  EnumerationResult res;
  std::set<ClosedPath> found;
  std::size_t hits = 0;
  std::vector<Index> path;

  auto members = [&](EdgeKind k, Index u) -> const std::vector<Index>& {
    return k == EdgeKind::A ? domain.a_members()[domain.a_level(u)]
                            : domain.b_members()[domain.b_level(u)];
  };

  // Every cycle has a rotation starting at its smallest point, so the walk
  // only visits points >= start.
  auto extend = [&](auto&& self, Index start, EdgeKind first) -> void {
    if (res.blowup) return;
    const std::size_t len = path.size();
    const Index last = path.back();
    const EdgeKind next = edge_kind_at(first, len - 1);
    for (Index v : members(next, last)) {
      if (v == last || v < start) continue;
      path.push_back(v);
      if (path.size() % 2 == 0) {
        const EdgeKind wrap = edge_kind_at(first, path.size() - 1);
        const auto& m = members(wrap, v);
        if (v != start && std::binary_search(m.begin(), m.end(), start)) {
          if (++hits > cap) {
            res.blowup = true;
            path.pop_back();
            return;
          }
          found.insert(canonical_closed_path(ClosedPath{path, first}));
        }
      }
      if (path.size() < max_len) self(self, start, first);
      path.pop_back();
      if (res.blowup) return;
    }
  };

  for (Index s = 0; s < domain.size() && !res.blowup; ++s) {
    for (EdgeKind first : {EdgeKind::A, EdgeKind::B}) {
      path.assign(1, s);
      extend(extend, s, first);
      if (res.blowup) break;
    }
  }
  res.paths.assign(found.begin(), found.end());
  return res;
}

SupResult sup_by_enumeration(const SampledDomain& domain, std::span<const double> fvals,
                             std::size_t max_len, std::size_t cap) {
  if (fvals.size() != domain.size()) {
    throw InvalidInput("function values must cover every domain point");
  }
  const auto en = enumerate_closed_paths(domain, max_len, cap);
  if (en.blowup) throw CombinatorialBlowup("closed-path enumeration exceeded its cap");
  SupResult res;
  res.method = SupResult::Method::Enumeration;
  for (const auto& cp : en.paths) {
    const double g = path_functional(cp, fvals);
    if (!res.witness || std::abs(g) > res.value) {
      res.value = std::abs(g);
      res.witness = canonical_signed(g < 0 ? rotate_closed_path(cp, 1) : cp);
    }
  }
  return res;
}

}  // namespace ridgegap
