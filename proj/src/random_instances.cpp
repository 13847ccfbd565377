#include "ridgegap/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ridgegap {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

DirectionPair random_directions(Rng& rng) {
  if (uniform_index(rng, 0, 1) == 0) return DirectionPair::axes();
  for (;;) {
    const double ta = uniform(rng, 0.0, M_PI);
    const double tb = uniform(rng, 0.0, M_PI);
    if (std::abs(std::sin(ta - tb)) < 0.3) continue;
    const double ra = uniform(rng, 0.5, 2.0);
    const double rb = uniform(rng, 0.5, 2.0);
    return DirectionPair({ra * std::cos(ta), ra * std::sin(ta)},
                         {rb * std::cos(tb), rb * std::sin(tb)});
  }
}

namespace {

// Sorted, well separated level values in [0, 1).
std::vector<double> level_values(Rng& rng, std::size_t k) {
  std::vector<double> v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = (static_cast<double>(i) + uniform(rng, 0.0, 0.5)) / static_cast<double>(k);
  }
  return v;
}

std::vector<double> random_values(Rng& rng, std::size_t n) {
  std::vector<double> f(n);
  for (double& x : f) x = uniform(rng, -1.0, 1.0);
  return f;
}

Instance from_level_pairs(Rng& rng, const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                          const std::vector<double>& ya, const std::vector<double>& yb,
                          std::string label) {
  const DirectionPair dirs = random_directions(rng);
  std::vector<Point> pts;
  for (const auto& [i, j] : cells) {
    const std::array<double, 2> y{ya[i], yb[j]};
    const auto x = inverse_transform(y, dirs);
    pts.push_back({x[0], x[1]});
  }
  SampledDomain dom = SampledDomain::from_points(std::move(pts), dirs);
  std::vector<double> f = random_values(rng, dom.size());
  return Instance{std::move(dom), std::move(f), std::move(label)};
}

}  // namespace

Instance random_grid_instance(Rng& rng, std::size_t max_side) {
  const std::size_t rows = uniform_index(rng, 2, max_side);
  const std::size_t cols = uniform_index(rng, 2, max_side);
  const auto ya = level_values(rng, rows);
  const auto yb = level_values(rng, cols);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cells.emplace_back(i, j);
  }
  return from_level_pairs(rng, cells, ya, yb,
                          "grid " + std::to_string(rows) + "x" + std::to_string(cols));
}

Instance random_scattered_instance(Rng& rng, std::size_t max_points) {
  const std::size_t ka = uniform_index(rng, 2, 15);
  const std::size_t kb = uniform_index(rng, 2, 15);
  const auto ya = level_values(rng, ka);
  const auto yb = level_values(rng, kb);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t j = 0; j < kb; ++j) cells.emplace_back(i, j);
  }
  std::shuffle(cells.begin(), cells.end(), rng);
  const std::size_t n = uniform_index(rng, 1, std::min(max_points, cells.size()));
  cells.resize(n);
  return from_level_pairs(rng, cells, ya, yb, "scattered " + std::to_string(n));
}

Instance random_small_instance(Rng& rng, std::size_t max_points, std::size_t level_values_count) {
  const std::size_t ka = uniform_index(rng, 2, level_values_count);
  const std::size_t kb = uniform_index(rng, 2, level_values_count);
  const auto ya = level_values(rng, ka);
  const auto yb = level_values(rng, kb);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t j = 0; j < kb; ++j) cells.emplace_back(i, j);
  }
  std::shuffle(cells.begin(), cells.end(), rng);
  const std::size_t n =
      uniform_index(rng, std::min<std::size_t>(4, cells.size()), std::min(max_points, cells.size()));
  cells.resize(n);
  return from_level_pairs(rng, cells, ya, yb, "small " + std::to_string(n));
}

RidgePair random_ridge_pair(Rng& rng, const SampledDomain& domain) {
  RidgePair v;
  v.g = random_values(rng, domain.num_a_levels());
  v.h = random_values(rng, domain.num_b_levels());
  return v;
}

ShallowNetwork random_network(Rng& rng, const std::string& sigma, std::size_t terms) {
  ShallowNetwork net;
  net.sigma = sigma;
  for (std::size_t k = 0; k < terms; ++k) {
    net.terms.push_back({uniform(rng, -2.0, 2.0),
                         uniform_index(rng, 0, 1) == 0 ? EdgeKind::A : EdgeKind::B,
                         uniform(rng, -2.0, 2.0)});
  }
  return net;
}

std::string random_smooth_expression(Rng& rng) {
  static const char* kPieces[] = {
      "x1*x2", "x1^2*x2", "x1*x2^3", "sin(x1)*x2", "cos(x1*x2)", "exp(x1*x2/2)",
      "x1^2-x2^2", "tanh(x1+x2)", "sin(x1+2*x2)", "x1^3",
  };
  std::ostringstream os;
  os.precision(17);
  const std::size_t count = uniform_index(rng, 1, 4);
  for (std::size_t k = 0; k < count; ++k) {
    const double c = uniform(rng, -2.0, 2.0);
    if (k > 0) os << " + ";
    os << "(" << c << ")*(" << kPieces[uniform_index(rng, 0, std::size(kPieces) - 1)] << ")";
  }
  return os.str();
}

}  // namespace ridgegap
