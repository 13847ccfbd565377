#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ridgegap/domain.hpp"
#include "ridgegap/paths.hpp"
#include "ridgegap/ridge.hpp"

namespace ridgegap {

/// Why an activation's shift span is dense (it is not mean periodic).
enum class NonMeanPeriodicReason { Integrable, BoundedWithLimit, Unknown };

const char* to_string(NonMeanPeriodicReason r) noexcept;

struct Activation {
  std::string name;
  double (*eval)(double) = nullptr;
  NonMeanPeriodicReason reason = NonMeanPeriodicReason::Unknown;
};

/// Looks up sigmoid, tanh, gaussian or relu.  Mean periodic families
/// (polynomial, linear, sin, cos, exp) throw MeanPeriodicActivation with the
/// reason; anything else throws UnknownActivation.
const Activation& find_activation(const std::string& name);

/// Names accepted by find_activation, in registry order.
std::vector<std::string> activation_names();

struct NetworkTerm {
  double c = 0.0;
  EdgeKind w = EdgeKind::A;  ///< weight vector: dirs.a or dirs.b
  double theta = 0.0;
};

/// sum_i c_i * sigma(w_i . x - theta_i) with every w_i in {a, b}.
struct ShallowNetwork {
  std::string sigma;
  std::vector<NetworkTerm> terms;
};

double evaluate_network(const ShallowNetwork& net, const DirectionPair& dirs,
                        std::span<const double> x);
std::vector<double> evaluate_network(const ShallowNetwork& net, const SampledDomain& domain);

enum class FitSolver { Minimax, LeastSquares };

struct FitConfig {
  std::size_t m = 9;             ///< shifted terms per direction
  std::array<double, 2> theta_range{-2.0, 3.0};
  std::array<double, 2> interval{0.0, 1.0};
  FitSolver solver = FitSolver::Minimax;

  void validate() const;
  /// Thresholds spread over four times the interval width, centered on it.
  static FitConfig for_interval(std::array<double, 2> interval, std::size_t m,
                                FitSolver solver = FitSolver::Minimax);
};

/// Hull of all a- and b-projections of the domain, widened by `margin`.
std::array<double, 2> projection_interval(const SampledDomain& domain, double margin = 0.0);

struct UnivariateFit {
  std::vector<double> c;
  std::vector<double> theta;
  double sup_error = 0.0;  ///< max over the target grid
  FitSolver solver = FitSolver::Minimax;
  std::optional<std::string> advisory;
};

/// Fits sum_j c_j * sigma(t - theta_j) to target values at nodes t_k, with
/// thetas on a uniform grid of cfg.m nodes over cfg.theta_range.  Minimax
/// solves the Chebyshev LP; least squares falls back to minimax (with an
/// IllConditioned advisory) when the design matrix is rank deficient.
UnivariateFit fit_univariate_shifts(std::span<const double> nodes,
                                    std::span<const double> target,
                                    const Activation& sigma, const FitConfig& cfg);

/// g-terms tagged A followed by h-terms tagged B.
ShallowNetwork assemble_network(const UnivariateFit& g_fit, const UnivariateFit& h_fit,
                                const std::string& sigma);

/// max over domain points of |f - net|.
double network_error(const ShallowNetwork& net, const SampledDomain& domain,
                     std::span<const double> fvals);

struct ConstructedNetwork {
  ShallowNetwork net;
  UnivariateFit g_fit;
  UnivariateFit h_fit;
  double network_error = 0.0;
  std::size_t m = 0;
  bool reached = false;  ///< both fits within epsilon/2
  std::array<double, 2> interval{};
};

/// Fits the tables of `best` with m = 3, 5, 9, 17, ... shifted terms per
/// direction until each sup error is <= epsilon/2 or m exceeds `m_cap`.
ConstructedNetwork construct_network(const SampledDomain& domain,
                                     std::span<const double> fvals, const BestApprox& best,
                                     const Activation& sigma, double epsilon,
                                     std::size_t m_cap = 257,
                                     FitSolver solver = FitSolver::Minimax);

}  // namespace ridgegap
