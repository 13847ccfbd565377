#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ridgegap/domain.hpp"
#include "ridgegap/network.hpp"
#include "ridgegap/ridge.hpp"

namespace ridgegap {

using Rng = std::mt19937_64;

/// A finite domain with function values, as used by the randomized suites.
struct Instance {
  SampledDomain domain;
  std::vector<double> f;
  std::string label;
};

double uniform(Rng& rng, double lo, double hi);
std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

/// Axis directions half of the time, otherwise a random well-conditioned pair.
DirectionPair random_directions(Rng& rng);

/// rows x cols grid (2..max_side each) in projection space, f ~ U[-1, 1].
Instance random_grid_instance(Rng& rng, std::size_t max_side = 12);

/// Up to max_points distinct points whose projections take few distinct
/// values, so levels collide at random; f ~ U[-1, 1].
Instance random_scattered_instance(Rng& rng, std::size_t max_points = 150);

/// 4..max_points points with at most `level_values` distinct a- and
/// b-projections, small enough for exhaustive path enumeration.
Instance random_small_instance(Rng& rng, std::size_t max_points = 10,
                               std::size_t level_values = 4);

RidgePair random_ridge_pair(Rng& rng, const SampledDomain& domain);

/// `terms` random terms with weights drawn from {a, b}.
ShallowNetwork random_network(Rng& rng, const std::string& sigma, std::size_t terms);

/// Random smooth expression in x1, x2 built from polynomial, trigonometric
/// and exponential pieces.
std::string random_smooth_expression(Rng& rng);

}  // namespace ridgegap
