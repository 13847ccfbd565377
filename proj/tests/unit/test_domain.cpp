#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ridgegap/domain.hpp"
#include "ridgegap/error.hpp"

using namespace ridgegap;

namespace {
std::vector<Index> q(std::vector<double> v, double tol) { return quantize_levels(v, tol); }
bool near(double x, double y, double tol = 1e-12) { return std::abs(x - y) <= tol; }
}  // namespace

TEST_CASE("quantize_levels merges within tolerance") {
  CHECK(q({1.0, 1.0, 2.0}, 1e-9) == std::vector<Index>{0, 0, 1});
  CHECK(q({0.0, 0.5, 1.0}, 0.0) == std::vector<Index>{0, 1, 2});
  CHECK(q({0.0, 1e-12, 1.0}, 1e-9) == std::vector<Index>{0, 0, 1});
  // ids increase with value regardless of input order
  CHECK(q({2.0, 0.0, 1.0}, 0.0) == std::vector<Index>{2, 0, 1});
}

TEST_CASE("forward and inverse transforms") {
  const DirectionPair axes = DirectionPair::axes();
  const DirectionPair rot({1.0, 1.0}, {1.0, -1.0});
  const std::array<double, 2> x{0.3, 0.7};
  auto y = forward_transform(x, axes);
  CHECK(near(y[0], 0.3));
  CHECK(near(y[1], 0.7));
  const std::array<double, 2> e1{1.0, 0.0};
  y = forward_transform(e1, rot);
  CHECK(near(y[0], 1.0));
  CHECK(near(y[1], 1.0));

  auto back = inverse_transform(x, axes);
  CHECK(near(back[0], 0.3));
  CHECK(near(back[1], 0.7));
  const std::array<double, 2> ones{1.0, 1.0};
  back = inverse_transform(ones, rot);
  CHECK(near(back[0], 1.0));
  CHECK(near(back[1], 0.0));

  CHECK_THROWS_AS(inverse_transform(ones, DirectionPair({1.0, 2.0}, {2.0, 4.0})),
                  SingularDirections);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const DirectionPair d({u(rng), u(rng)}, {u(rng), u(rng)});
    if (std::abs(d.determinant()) < 0.5) continue;
    const std::array<double, 2> p{u(rng), u(rng)};
    const auto r = inverse_transform(forward_transform(p, d), d);
    CHECK(near(r[0], p[0], 1e-12 * 10));
    CHECK(near(r[1], p[1], 1e-12 * 10));
  }
}

TEST_CASE("direction pairs are validated") {
  CHECK_THROWS_AS(DirectionPair({0.0, 0.0}, {0.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(DirectionPair({1.0, 0.0}, {0.0, 1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(DirectionPair({}, {}), InvalidInput);
  CHECK_FALSE(DirectionPair({1.0, 2.0}, {2.0, 4.0}).independent());
  CHECK(DirectionPair({1.0, 1.0}, {1.0, -1.0}).determinant() == doctest::Approx(-2.0));
}

TEST_CASE("sample_box") {
  BoxDomainSpec unit;
  const SampledDomain two = sample_box(unit, 2);
  REQUIRE(two.size() == 4);
  std::set<std::vector<double>> corners(two.points().begin(), two.points().end());
  CHECK(corners == std::set<std::vector<double>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const SampledDomain three = sample_box(unit, 3);
  CHECK(three.size() == 9);
  CHECK(three.num_a_levels() == 3);
  CHECK(three.num_b_levels() == 3);
  CHECK(three.a_level(5) == 1);
  CHECK(three.b_level(5) == 2);

  BoxDomainSpec rot;
  rot.dirs = DirectionPair({1.0, 1.0}, {1.0, -1.0});
  const SampledDomain r = sample_box(rot, 2);
  const std::vector<std::vector<double>> expect{{0, 0}, {0.5, -0.5}, {0.5, 0.5}, {1, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(near(r.point(i)[0], expect[i][0]));
    CHECK(near(r.point(i)[1], expect[i][1]));
  }

  BoxDomainSpec bad;
  bad.d1 = bad.c1;
  CHECK_THROWS_AS(sample_box(bad, 3), InvalidInput);
  BoxDomainSpec par;
  par.dirs = DirectionPair({1.0, 2.0}, {2.0, 4.0});
  CHECK_THROWS_AS(sample_box(par, 3), SingularDirections);
}

TEST_CASE("grid nodes hit both ends exactly") {
  const auto g = grid_nodes(0.1, 0.7, 7);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.7);
  CHECK(std::is_sorted(g.begin(), g.end()));
}

TEST_CASE("sampled domain from points") {
  const DirectionPair axes = DirectionPair::axes();
  CHECK_THROWS_AS(SampledDomain::from_points({{0, 0}, {1, 1}, {0, 0}}, axes), DuplicatePoint);
  CHECK_THROWS_AS(SampledDomain::from_points({{0, 0, 0}}, axes), InvalidInput);

  // rounding noise far below the default tolerance merges levels
  const SampledDomain d =
      SampledDomain::from_points({{0.0, 0.0}, {1e-13, 1.0}, {1.0, 0.0}, {1.0, 1.0}}, axes);
  CHECK(d.num_a_levels() == 2);
  CHECK(d.a_level(0) == d.a_level(1));
  CHECK(d.a_members()[0] == std::vector<Index>{0, 1});

  const SampledDomain sub = d.subset(std::vector<Index>{2, 3});
  CHECK(sub.size() == 2);
  CHECK(sub.num_a_levels() == 1);
  CHECK(sub.num_b_levels() == 2);
}
