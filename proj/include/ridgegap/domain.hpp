#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ridgegap {

using Index = std::size_t;
using Point = std::vector<double>;

/// The two fixed weight vectors a and b.  Both must be nonzero and of the
/// same dimension; they may be parallel or even equal.
class DirectionPair {
 public:
  DirectionPair(std::vector<double> a, std::vector<double> b);

  const std::vector<double>& a() const noexcept { return a_; }
  const std::vector<double>& b() const noexcept { return b_; }
  std::size_t dims() const noexcept { return a_.size(); }

  double project_a(std::span<const double> x) const;
  double project_b(std::span<const double> x) const;

  /// a1*b2 - a2*b1; only meaningful for d = 2.
  double determinant() const;
  /// True when d = 2 and the determinant passes the singularity test used by
  /// inverse_transform.
  bool independent() const;

  static DirectionPair axes() { return DirectionPair({1.0, 0.0}, {0.0, 1.0}); }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

/// Groups projections into levels by single-linkage on sorted values: a new
/// level starts whenever the gap to the previous sorted value exceeds `tol`.
/// Level ids increase with the projection value.
std::vector<Index> quantize_levels(std::span<const double> projections, double tol);

/// Finite point set standing in for a compact domain, with the a-level and
/// b-level partition of its points.  Immutable after construction.
class SampledDomain {
 public:
  /// Groups levels with quantize_levels.  When `tol` is absent each direction
  /// uses 1e-9 times the spread of its projections.  Throws DuplicatePoint if
  /// two points coincide and InvalidInput on dimension mismatch.
  static SampledDomain from_points(std::vector<Point> points, DirectionPair dirs,
                                   std::optional<double> tol = std::nullopt);

  /// Uses caller-supplied level ids and level values (e.g. grid rows and
  /// columns).  Level ids must be dense in [0, count).
  static SampledDomain with_levels(std::vector<Point> points, DirectionPair dirs,
                                   std::vector<Index> a_level,
                                   std::vector<Index> b_level,
                                   std::vector<double> a_values,
                                   std::vector<double> b_values);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& point(Index i) const { return points_.at(i); }
  const DirectionPair& dirs() const noexcept { return dirs_; }

  Index a_level(Index i) const { return a_level_.at(i); }
  Index b_level(Index i) const { return b_level_.at(i); }
  const std::vector<Index>& a_levels() const noexcept { return a_level_; }
  const std::vector<Index>& b_levels() const noexcept { return b_level_; }

  std::size_t num_a_levels() const noexcept { return a_values_.size(); }
  std::size_t num_b_levels() const noexcept { return b_values_.size(); }
  /// Representative projection of each level (mean of its members).
  const std::vector<double>& a_level_values() const noexcept { return a_values_; }
  const std::vector<double>& b_level_values() const noexcept { return b_values_; }
  /// Point indices of each level, ascending.
  const std::vector<std::vector<Index>>& a_members() const noexcept { return a_members_; }
  const std::vector<std::vector<Index>>& b_members() const noexcept { return b_members_; }

  double a_tol() const noexcept { return a_tol_; }
  double b_tol() const noexcept { return b_tol_; }

  /// Copy restricted to the given point indices (kept in the given order).
  SampledDomain subset(std::span<const Index> keep) const;

 private:
  SampledDomain(std::vector<Point> points, DirectionPair dirs);
  void build_members();

  std::vector<Point> points_;
  DirectionPair dirs_;
  double a_tol_ = 0.0;
  double b_tol_ = 0.0;
  std::vector<Index> a_level_;
  std::vector<Index> b_level_;
  std::vector<double> a_values_;
  std::vector<double> b_values_;
  std::vector<std::vector<Index>> a_members_;
  std::vector<std::vector<Index>> b_members_;
};

/// Box in projection coordinates: c1 <= a.x <= d1, c2 <= b.x <= d2.
struct BoxDomainSpec {
  double c1 = 0.0;
  double d1 = 1.0;
  double c2 = 0.0;
  double d2 = 1.0;
  DirectionPair dirs = DirectionPair::axes();

  /// Throws InvalidInput for empty intervals or d != 2 and
  /// SingularDirections for dependent directions.
  void validate() const;
};

/// y = (a.x, b.x) for d = 2.
std::array<double, 2> forward_transform(std::span<const double> x,
                                        const DirectionPair& dirs);

/// Unique x with (a.x, b.x) = y.  Throws SingularDirections when
/// |a1*b2 - a2*b1| <= 1e-12 * max(|a|, |b|)^2.
std::array<double, 2> inverse_transform(std::span<const double> y,
                                        const DirectionPair& dirs);

/// m x m uniform grid over K = [c1,d1] x [c2,d2] mapped back into x-space.
/// Point i*m + j sits at grid row i (a-level i) and column j (b-level j).
SampledDomain sample_box(const BoxDomainSpec& spec, std::size_t m);

/// The grid node values c + (d - c) * k / (m - 1), with both ends exact.
std::vector<double> grid_nodes(double lo, double hi, std::size_t m);

}  // namespace ridgegap
