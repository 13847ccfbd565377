#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ridgegap/error.hpp"
#include "ridgegap/extremal.hpp"
#include "ridgegap/random_instances.hpp"
#include "ridgegap/ridge.hpp"

using namespace ridgegap;

namespace {
std::vector<double> xy(const SampledDomain& d) {
  std::vector<double> f;
  for (const Point& p : d.points()) f.push_back(p[0] * p[1]);
  return f;
}
}  // namespace

TEST_CASE("evaluate_ridge") {
  const SampledDomain one = SampledDomain::from_points({{0.3, 0.7}}, DirectionPair::axes());
  CHECK(evaluate_ridge(RidgePair{{0.0}, {0.0}}, one, 0) == 0.0);
  CHECK(evaluate_ridge(RidgePair{{0.3}, {0.7}}, one, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(evaluate_ridge(RidgePair{{}, {0.7}}, one, 0), MissingLevel);
  CHECK_THROWS_AS(evaluate_ridge(RidgePair{{0.3}, {0.7}}, one, 4), IndexOutOfRange);

  Rng rng(1);
  const SampledDomain d = sample_box(BoxDomainSpec{}, 4);
  const RidgePair v = random_ridge_pair(rng, d);
  const auto vals = evaluate_ridge(v, d);
  for (const auto& members : d.a_members()) {
    const double ref = vals[members[0]] - v.h[d.b_level(members[0])];
    for (Index i : members) CHECK(std::abs(vals[i] - v.h[d.b_level(i)] - ref) <= 1e-15);
  }
}

TEST_CASE("functions in R(a,b) have zero error") {
  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const Instance inst = random_scattered_instance(rng, 80);
    const auto f = evaluate_ridge(random_ridge_pair(rng, inst.domain), inst.domain);
    const BestApprox b = best_ridge_linf(inst.domain, f);
    CHECK(b.error <= 1e-9);
    const auto back = evaluate_ridge(b.v0, inst.domain);
    for (Index i = 0; i < f.size(); ++i) CHECK(std::abs(back[i] - f[i]) <= 1e-9);
    CHECK(extremal_paths_of_residual(inst.domain, f, b).paths.empty());
  }
}

TEST_CASE("xy on the corner grid") {
  const SampledDomain d = sample_box(BoxDomainSpec{}, 2);
  const BestApprox b = best_ridge_linf(d, xy(d));
  CHECK(b.error == doctest::Approx(0.25));
  CHECK(b.pinned_a_levels == std::vector<Index>{0});
  CHECK(b.v0.g[0] == 0.0);
  for (Index i = 0; i < 4; ++i) {
    const Point& p = d.point(i);
    CHECK(evaluate_ridge(b.v0, d, i) == doctest::Approx(p[0] / 2 + p[1] / 2 - 0.25));
  }

  const ExtremalPaths ep = extremal_paths_of_residual(d, xy(d), b);
  REQUIRE_FALSE(ep.paths.empty());
  const ExtremalPath& first = ep.paths.front();
  CHECK(first.closed);
  REQUIRE(first.path.pts.size() == 4);
  CHECK(validate_path(first.path, d).ok);
  for (std::size_t k = 0; k < 4; ++k) {
    const double r = b.residual[first.path.pts[k]];
    const double next = b.residual[first.path.pts[(k + 1) % 4]];
    CHECK(std::abs(std::abs(r) - 0.25) <= 1e-9);
    CHECK(r * next < 0.0);
  }
}

TEST_CASE("degenerate domains") {
  const SampledDomain one = SampledDomain::from_points({{0.2, 0.4}}, DirectionPair::axes());
  CHECK(best_ridge_linf(one, std::vector<double>{3.0}).error == doctest::Approx(0.0));

  // two separate components: each gets its own pinned level
  const SampledDomain two = SampledDomain::from_points(
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {5, 5}, {5, 6}}, DirectionPair::axes());
  const std::vector<double> f{0, 0, 0, 1, 2, 3};
  const BestApprox b = best_ridge_linf(two, f);
  CHECK(b.error == doctest::Approx(0.25));
  CHECK(b.pinned_a_levels.size() == 2);
}

TEST_CASE("a unique maximum has no extremal partner") {
  const SampledDomain d = sample_box(BoxDomainSpec{}, 2);
  const std::vector<double> f{1.0, 0.0, 0.0, 0.0};
  BestApprox fake;
  fake.v0 = RidgePair{{0.0, 0.0}, {0.0, 0.0}};
  fake.error = 1.0;
  fake.residual = f;
  const ExtremalPaths ep = extremal_paths_of_residual(d, f, fake);
  CHECK(ep.paths.empty());
  CHECK(ep.advisory.has_value());
}

TEST_CASE("LP agrees with the Diliberto-Straus iteration on grids") {
  Rng rng(17);
  for (int t = 0; t < 12; ++t) {
    const std::size_t rows = uniform_index(rng, 2, 5);
    const std::size_t cols = uniform_index(rng, 2, 5);
    std::vector<std::vector<double>> f(rows, std::vector<double>(cols));
    std::vector<Point> pts;
    std::vector<double> flat;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        f[i][j] = uniform(rng, -1.0, 1.0);
        pts.push_back({double(i), double(j)});
        flat.push_back(f[i][j]);
      }
    }
    const SampledDomain d = SampledDomain::from_points(pts, DirectionPair::axes());
    const double lp = best_ridge_linf(d, flat).error;
    const double ds = oracle::diliberto_straus(f, 4000);
    CHECK(lp <= ds + 1e-12);
    CHECK(ds - lp <= 1e-4);
  }
}

TEST_CASE("duality on random instances") {
  Rng rng(99);
  for (int t = 0; t < 30; ++t) {
    const Instance inst = t % 2 ? random_grid_instance(rng, 8) : random_scattered_instance(rng, 100);
    const double sup = sup_closed_path(inst.domain, inst.f).value;
    const double lp = best_ridge_linf(inst.domain, inst.f).error;
    CHECK(std::abs(sup - lp) <= 1e-7 * std::max(1.0, lp));
  }
}
