#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ridgegap/domain.hpp"

namespace ridgegap {

/// Which projection equality links two consecutive points of a path.
enum class EdgeKind { A, B };

constexpr EdgeKind opposite(EdgeKind k) noexcept {
  return k == EdgeKind::A ? EdgeKind::B : EdgeKind::A;
}
const char* to_string(EdgeKind k) noexcept;
/// Parses "A" or "B"; throws InvalidInput otherwise.
EdgeKind edge_kind_from_string(const std::string& s);

/// Edge kind of edge `i` (0-based, linking pts[i] and pts[i+1]).
constexpr EdgeKind edge_kind_at(EdgeKind first, std::size_t i) noexcept {
  return i % 2 == 0 ? first : opposite(first);
}

/// Alternating point sequence.  Points may repeat as long as neighbours differ.
struct Path {
  std::vector<Index> pts;
  EdgeKind first_edge = EdgeKind::A;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Path of even length 2n that stays a path when pts[0] is appended; the
/// wraparound edge has the kind opposite to first_edge.
struct ClosedPath {
  std::vector<Index> pts;
  EdgeKind first_edge = EdgeKind::A;
  friend bool operator==(const ClosedPath&, const ClosedPath&) = default;
  friend auto operator<=>(const ClosedPath&, const ClosedPath&) = default;
};

/// Outcome of validate_path.  On failure `edge` names the offending edge
/// (0-based; the wraparound edge of a closed path has index size()-1) and
/// `failure` says which condition broke.
struct PathCheck {
  enum class Failure { None, Empty, TooShort, OddLength, RepeatedNeighbour, LevelMismatch };

  bool ok = true;
  Failure failure = Failure::None;
  std::optional<std::size_t> edge;
  std::optional<EdgeKind> expected_kind;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks the path (and, when `closed`, closed-path) conditions against the
/// domain's level maps.  Throws IndexOutOfRange for indices past the domain.
PathCheck validate_path(std::span<const Index> candidate, EdgeKind first_edge,
                        const SampledDomain& domain, bool closed);

inline PathCheck validate_path(const Path& p, const SampledDomain& domain) {
  return validate_path(p.pts, p.first_edge, domain, false);
}
inline PathCheck validate_path(const ClosedPath& p, const SampledDomain& domain) {
  return validate_path(p.pts, p.first_edge, domain, true);
}

/// (1/2n) * sum_k (-1)^(k+1) f(p_k), with p_1 carrying the + sign.
double path_functional(const ClosedPath& cp, std::span<const double> fvals);

/// Cyclic rotation moving pts[shift] to the front.  An odd shift flips
/// first_edge and therefore the sign of path_functional.
ClosedPath rotate_closed_path(const ClosedPath& cp, long shift);

/// The lexicographically smallest (pts, first_edge) among all rotations and
/// reversals of `cp`.
ClosedPath canonical_closed_path(const ClosedPath& cp);

/// Same class restricted to even rotations and the reversal, so that the
/// functional's sign is preserved.
ClosedPath canonical_signed(const ClosedPath& cp);

}  // namespace ridgegap
