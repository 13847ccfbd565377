#include "ridgegap/paths.hpp"

#include <algorithm>
#include <string>

#include "ridgegap/error.hpp"

namespace ridgegap {

const char* to_string(EdgeKind k) noexcept { return k == EdgeKind::A ? "A" : "B"; }

EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "A") return EdgeKind::A;
  if (s == "B") return EdgeKind::B;
  throw InvalidInput("edge kind must be \"A\" or \"B\", got \"" + s + "\"");
}

namespace {

PathCheck fail(PathCheck::Failure why, std::string reason,
               std::optional<std::size_t> edge = std::nullopt,
               std::optional<EdgeKind> kind = std::nullopt) {
  PathCheck r;
  r.ok = false;
  r.failure = why;
  r.reason = std::move(reason);
  r.edge = edge;
  r.expected_kind = kind;
  return r;
}

bool same_level(const SampledDomain& dom, EdgeKind k, Index u, Index v) {
  return k == EdgeKind::A ? dom.a_level(u) == dom.a_level(v)
                          : dom.b_level(u) == dom.b_level(v);
}

}  // namespace

PathCheck validate_path(std::span<const Index> candidate, EdgeKind first_edge,
                        const SampledDomain& domain, bool closed) {
  if (candidate.empty()) return fail(PathCheck::Failure::Empty, "path is empty");
  for (Index i : candidate) {
    if (i >= domain.size()) {
      throw IndexOutOfRange("point index " + std::to_string(i) + " exceeds point count " +
                            std::to_string(domain.size()));
    }
  }
  if (candidate.size() < 2) {
    return fail(PathCheck::Failure::TooShort, "a path needs at least two points");
  }
  if (closed && candidate.size() % 2 != 0) {
    return fail(PathCheck::Failure::OddLength, "a closed path has even length");
  }
  const std::size_t edges = closed ? candidate.size() : candidate.size() - 1;
  for (std::size_t e = 0; e < edges; ++e) {
    const Index u = candidate[e];
    const Index v = candidate[(e + 1) % candidate.size()];
    const EdgeKind kind = edge_kind_at(first_edge, e);
    if (u == v) {
      return fail(PathCheck::Failure::RepeatedNeighbour,
                  "edge " + std::to_string(e) + " joins point " + std::to_string(u) +
                      " to itself",
                  e, kind);
    }
    if (!same_level(domain, kind, u, v)) {
      return fail(PathCheck::Failure::LevelMismatch,
                  "edge " + std::to_string(e) + " (" + to_string(kind) + "): points " +
                      std::to_string(u) + " and " + std::to_string(v) +
                      " lie on different " + to_string(kind) + "-levels",
                  e, kind);
    }
  }
  return {};
}

double path_functional(const ClosedPath& cp, std::span<const double> fvals) {
  double sum = 0.0;
  for (std::size_t k = 0; k < cp.pts.size(); ++k) {
    const Index i = cp.pts[k];
    if (i >= fvals.size()) {
      throw IndexOutOfRange("point index " + std::to_string(i) +
                            " has no function value");
    }
    sum += (k % 2 == 0) ? fvals[i] : -fvals[i];
  }
  return cp.pts.empty() ? 0.0 : sum / static_cast<double>(cp.pts.size());
}

ClosedPath rotate_closed_path(const ClosedPath& cp, long shift) {
  const long n = static_cast<long>(cp.pts.size());
  if (n == 0) return cp;
  const long s = ((shift % n) + n) % n;
  ClosedPath out;
  out.pts.reserve(cp.pts.size());
  for (long k = 0; k < n; ++k) out.pts.push_back(cp.pts[(k + s) % n]);
  out.first_edge = (s % 2 == 0) ? cp.first_edge : opposite(cp.first_edge);
  return out;
}

namespace {

// (p1, p2n, ..., p2): same cycle walked backwards, p1 keeps its + sign.
ClosedPath reversed_keep_sign(const ClosedPath& cp) {
  ClosedPath out;
  out.pts.reserve(cp.pts.size());
  if (cp.pts.empty()) return cp;
  out.pts.push_back(cp.pts.front());
  for (std::size_t k = cp.pts.size() - 1; k >= 1; --k) out.pts.push_back(cp.pts[k]);
  out.first_edge = opposite(cp.first_edge);
  return out;
}

ClosedPath smallest_rotation(const ClosedPath& cp, long step, ClosedPath best) {
  const long n = static_cast<long>(cp.pts.size());
  for (long s = 0; s < n; s += step) {
    ClosedPath r = rotate_closed_path(cp, s);
    if (r < best) best = std::move(r);
  }
  return best;
}

}  // namespace

ClosedPath canonical_closed_path(const ClosedPath& cp) {
  if (cp.pts.empty()) return cp;
  ClosedPath best = smallest_rotation(cp, 1, cp);
  return smallest_rotation(reversed_keep_sign(cp), 1, best);
}

ClosedPath canonical_signed(const ClosedPath& cp) {
  if (cp.pts.empty()) return cp;
  ClosedPath best = smallest_rotation(cp, 2, cp);
  return smallest_rotation(reversed_keep_sign(cp), 2, best);
}

}  // namespace ridgegap
