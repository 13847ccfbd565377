#include "ridgegap/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ridgegap/error.hpp"

namespace ridgegap {

namespace {

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double norm(std::span<const double> u) { return std::sqrt(dot(u, u)); }

bool singular(const DirectionPair& dirs) {
  const double scale = std::max(norm(dirs.a()), norm(dirs.b()));
  return std::abs(dirs.determinant()) <= 1e-12 * scale * scale;
}

// Renumbers arbitrary ids to 0..k-1 preserving their order.
std::vector<Index> densify(const std::vector<Index>& ids, std::vector<Index>* kept) {
  std::vector<Index> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Index> out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out[i] = static_cast<Index>(
        std::lower_bound(sorted.begin(), sorted.end(), ids[i]) - sorted.begin());
  }
  *kept = std::move(sorted);
  return out;
}

}  // namespace

DirectionPair::DirectionPair(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size()) {
    throw InvalidInput("direction vectors must be non-empty and of equal length");
  }
  auto nonzero = [](const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
  };
  if (!nonzero(a_) || !nonzero(b_)) {
    throw InvalidInput("direction vectors must be nonzero");
  }
  for (double x : a_) {
    if (!std::isfinite(x)) throw InvalidInput("direction a has a non-finite entry");
  }
  for (double x : b_) {
    if (!std::isfinite(x)) throw InvalidInput("direction b has a non-finite entry");
  }
}

double DirectionPair::project_a(std::span<const double> x) const {
  if (x.size() != a_.size()) throw InvalidInput("point dimension mismatch");
  return dot(a_, x);
}

double DirectionPair::project_b(std::span<const double> x) const {
  if (x.size() != b_.size()) throw InvalidInput("point dimension mismatch");
  return dot(b_, x);
}

double DirectionPair::determinant() const {
  if (dims() != 2) throw InvalidInput("determinant requires d = 2");
  return a_[0] * b_[1] - a_[1] * b_[0];
}

bool DirectionPair::independent() const { return dims() == 2 && !singular(*this); }

std::vector<Index> quantize_levels(std::span<const double> projections, double tol) {
  if (tol < 0.0) throw InvalidInput("level tolerance must be nonnegative");
  std::vector<Index> order(projections.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index l, Index r) {
    return projections[l] < projections[r];
  });
  std::vector<Index> level(projections.size());
  Index current = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && projections[order[k]] - projections[order[k - 1]] > tol) ++current;
    level[order[k]] = current;
  }
  return level;
}

SampledDomain::SampledDomain(std::vector<Point> points, DirectionPair dirs)
    : points_(std::move(points)), dirs_(std::move(dirs)) {
  for (const Point& p : points_) {
    if (p.size() != dirs_.dims()) {
      throw InvalidInput("point has dimension " + std::to_string(p.size()) +
                         ", expected " + std::to_string(dirs_.dims()));
    }
    for (double x : p) {
      if (!std::isfinite(x)) throw InvalidInput("point has a non-finite coordinate");
    }
  }
  std::vector<Index> order(points_.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(),
            [&](Index l, Index r) { return points_[l] < points_[r]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k]] == points_[order[k - 1]]) {
      throw DuplicatePoint("points " + std::to_string(order[k - 1]) + " and " +
                           std::to_string(order[k]) + " coincide");
    }
  }
}

void SampledDomain::build_members() {
  a_members_.assign(a_values_.size(), {});
  b_members_.assign(b_values_.size(), {});
  for (Index i = 0; i < points_.size(); ++i) {
    a_members_.at(a_level_[i]).push_back(i);
    b_members_.at(b_level_[i]).push_back(i);
  }
}

SampledDomain SampledDomain::from_points(std::vector<Point> points,
                                         DirectionPair dirs,
                                         std::optional<double> tol) {
  SampledDomain dom(std::move(points), std::move(dirs));
  const std::size_t n = dom.points_.size();
  std::vector<double> pa(n), pb(n);
  for (Index i = 0; i < n; ++i) {
    pa[i] = dom.dirs_.project_a(dom.points_[i]);
    pb[i] = dom.dirs_.project_b(dom.points_[i]);
  }
  auto spread = [](const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  if (tol && *tol < 0.0) throw InvalidInput("level tolerance must be nonnegative");
  dom.a_tol_ = tol ? *tol : 1e-9 * spread(pa);
  dom.b_tol_ = tol ? *tol : 1e-9 * spread(pb);
  dom.a_level_ = quantize_levels(pa, dom.a_tol_);
  dom.b_level_ = quantize_levels(pb, dom.b_tol_);

  auto level_means = [n](const std::vector<Index>& level, const std::vector<double>& proj) {
    const std::size_t count =
        n == 0 ? 0 : *std::max_element(level.begin(), level.end()) + 1;
    std::vector<double> sum(count, 0.0);
    std::vector<double> cnt(count, 0.0);
    for (Index i = 0; i < n; ++i) {
      sum[level[i]] += proj[i];
      cnt[level[i]] += 1.0;
    }
    for (std::size_t k = 0; k < count; ++k) sum[k] /= cnt[k];
    return sum;
  };
  dom.a_values_ = level_means(dom.a_level_, pa);
  dom.b_values_ = level_means(dom.b_level_, pb);
  dom.build_members();
  return dom;
}

SampledDomain SampledDomain::with_levels(std::vector<Point> points, DirectionPair dirs,
                                         std::vector<Index> a_level,
                                         std::vector<Index> b_level,
                                         std::vector<double> a_values,
                                         std::vector<double> b_values) {
  SampledDomain dom(std::move(points), std::move(dirs));
  if (a_level.size() != dom.size() || b_level.size() != dom.size()) {
    throw InvalidInput("level maps must cover every point");
  }
  for (Index i = 0; i < dom.size(); ++i) {
    if (a_level[i] >= a_values.size() || b_level[i] >= b_values.size()) {
      throw MissingLevel("point " + std::to_string(i) + " refers to an undefined level");
    }
  }
  dom.a_level_ = std::move(a_level);
  dom.b_level_ = std::move(b_level);
  dom.a_values_ = std::move(a_values);
  dom.b_values_ = std::move(b_values);
  dom.build_members();
  for (const auto& members : dom.a_members_) {
    if (members.empty()) throw InvalidInput("a-level ids must be dense");
  }
  for (const auto& members : dom.b_members_) {
    if (members.empty()) throw InvalidInput("b-level ids must be dense");
  }
  return dom;
}

SampledDomain SampledDomain::subset(std::span<const Index> keep) const {
  std::vector<Point> pts;
  std::vector<Index> al, bl;
  for (Index i : keep) {
    if (i >= size()) throw IndexOutOfRange("subset index " + std::to_string(i));
    pts.push_back(points_[i]);
    al.push_back(a_level_[i]);
    bl.push_back(b_level_[i]);
  }
  std::vector<Index> a_kept, b_kept;
  al = densify(al, &a_kept);
  bl = densify(bl, &b_kept);
  std::vector<double> av, bv;
  for (Index k : a_kept) av.push_back(a_values_[k]);
  for (Index k : b_kept) bv.push_back(b_values_[k]);
  SampledDomain dom = with_levels(std::move(pts), dirs_, std::move(al), std::move(bl),
                                  std::move(av), std::move(bv));
  dom.a_tol_ = a_tol_;
  dom.b_tol_ = b_tol_;
  return dom;
}

void BoxDomainSpec::validate() const {
  if (dirs.dims() != 2) throw InvalidInput("box domains require d = 2");
  if (!(c1 < d1) || !(c2 < d2)) {
    throw InvalidInput("box bounds must satisfy c1 < d1 and c2 < d2");
  }
  if (singular(dirs)) {
    throw SingularDirections("directions a and b are linearly dependent");
  }
}

std::array<double, 2> forward_transform(std::span<const double> x,
                                        const DirectionPair& dirs) {
  if (dirs.dims() != 2 || x.size() != 2) {
    throw InvalidInput("forward_transform requires d = 2");
  }
  return {dirs.a()[0] * x[0] + dirs.a()[1] * x[1],
          dirs.b()[0] * x[0] + dirs.b()[1] * x[1]};
}

std::array<double, 2> inverse_transform(std::span<const double> y,
                                        const DirectionPair& dirs) {
  if (dirs.dims() != 2 || y.size() != 2) {
    throw InvalidInput("inverse_transform requires d = 2");
  }
  if (singular(dirs)) {
    throw SingularDirections("directions a and b are linearly dependent");
  }
  const double a1 = dirs.a()[0], a2 = dirs.a()[1];
  const double b1 = dirs.b()[0], b2 = dirs.b()[1];
  const double det = a1 * b2 - a2 * b1;
  return {(y[0] * b2 - y[1] * a2) / det, (y[1] * a1 - y[0] * b1) / det};
}

std::vector<double> grid_nodes(double lo, double hi, std::size_t m) {
  if (m == 1) return {lo};
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(m - 1);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

SampledDomain sample_box(const BoxDomainSpec& spec, std::size_t m) {
  if (m < 2) throw InvalidInput("grid size must be at least 2");
  spec.validate();
  const std::vector<double> ys1 = grid_nodes(spec.c1, spec.d1, m);
  const std::vector<double> ys2 = grid_nodes(spec.c2, spec.d2, m);
  std::vector<Point> pts;
  std::vector<Index> al, bl;
  pts.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::array<double, 2> y{ys1[i], ys2[j]};
      const auto x = inverse_transform(y, spec.dirs);
      pts.push_back({x[0], x[1]});
      al.push_back(i);
      bl.push_back(j);
    }
  }
  return SampledDomain::with_levels(std::move(pts), spec.dirs, std::move(al),
                                    std::move(bl), ys1, ys2);
}

}  // namespace ridgegap
