#include <doctest.h>

#include <cmath>

#include "ridgegap/error.hpp"
#include "ridgegap/network.hpp"
#include "ridgegap/ridge.hpp"

using namespace ridgegap;

namespace {
std::vector<double> xy(const SampledDomain& d) {
  std::vector<double> f;
  for (const Point& p : d.points()) f.push_back(p[0] * p[1]);
  return f;
}
FitConfig config(std::size_t m, std::array<double, 2> theta, FitSolver s = FitSolver::Minimax) {
  FitConfig c;
  c.m = m;
  c.theta_range = theta;
  c.interval = {0.0, 1.0};
  c.solver = s;
  return c;
}
}  // namespace

TEST_CASE("activation registry") {
  const Activation& s = find_activation("sigmoid");
  CHECK(s.eval(0.0) == doctest::Approx(0.5));
  CHECK(s.reason == NonMeanPeriodicReason::BoundedWithLimit);
  CHECK(find_activation("gaussian").reason == NonMeanPeriodicReason::Integrable);
  CHECK(find_activation("relu").reason == NonMeanPeriodicReason::Unknown);
  try {
    find_activation("polynomial");
    FAIL("accepted");
  } catch (const MeanPeriodicActivation& e) {
    CHECK(std::string(e.what()).find("mean periodic") != std::string::npos);
  }
  CHECK_THROWS_AS(find_activation("sin"), MeanPeriodicActivation);
  CHECK_THROWS_AS(find_activation("softsign"), UnknownActivation);
  CHECK(activation_names().size() == 4);
}

TEST_CASE("projection interval") {
  const SampledDomain unit = sample_box(BoxDomainSpec{}, 3);
  auto iv = projection_interval(unit, 0.0);
  CHECK(iv[0] == doctest::Approx(0.0));
  CHECK(iv[1] == doctest::Approx(1.0));
  iv = projection_interval(unit, 0.5);
  CHECK(iv[0] == doctest::Approx(-0.5));
  CHECK(iv[1] == doctest::Approx(1.5));
  const SampledDomain rot = SampledDomain::from_points(
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, DirectionPair({1.0, 1.0}, {1.0, -1.0}));
  iv = projection_interval(rot, 0.0);
  CHECK(iv[0] == doctest::Approx(-1.0));
  CHECK(iv[1] == doctest::Approx(2.0));
  CHECK_THROWS_AS(projection_interval(unit, -1.0), InvalidInput);
}

TEST_CASE("univariate shift fits") {
  const Activation& sig = find_activation("sigmoid");
  const auto nodes = grid_nodes(0.0, 1.0, 41);

  const UnivariateFit zero =
      fit_univariate_shifts(nodes, std::vector<double>(nodes.size(), 0.0), sig, config(5, {-2, 3}));
  CHECK(zero.sup_error == 0.0);
  for (double c : zero.c) CHECK(c == 0.0);

  std::vector<double> basis;
  for (double t : nodes) basis.push_back(sig.eval(t - 0.5));
  const UnivariateFit exact = fit_univariate_shifts(nodes, basis, sig, config(3, {0.0, 1.0}));
  CHECK(exact.theta[1] == 0.5);
  CHECK(exact.sup_error <= 1e-9);

  const UnivariateFit line = fit_univariate_shifts(nodes, nodes, sig, config(24, {-2, 3}));
  CHECK(line.sup_error <= 0.01);

  const UnivariateFit ls =
      fit_univariate_shifts(nodes, nodes, sig, config(5, {-2, 3}, FitSolver::LeastSquares));
  CHECK(ls.solver == FitSolver::LeastSquares);
  CHECK(ls.sup_error <= 0.05);

  const std::vector<double> few{0.0, 0.5, 1.0};
  const UnivariateFit fallback =
      fit_univariate_shifts(few, few, sig, config(9, {-2, 3}, FitSolver::LeastSquares));
  CHECK(fallback.solver == FitSolver::Minimax);
  CHECK(fallback.advisory.has_value());

  CHECK_THROWS_AS(fit_univariate_shifts(std::vector<double>{2.0}, std::vector<double>{0.0}, sig,
                                        config(3, {0, 1})),
                  InvalidInput);
}

TEST_CASE("nested theta grids never get worse") {
  const Activation& tanh_act = find_activation("tanh");
  const auto nodes = grid_nodes(0.0, 1.0, 33);
  std::vector<double> target;
  for (double t : nodes) target.push_back(std::sin(5 * t) + t * t);
  double prev = INFINITY;
  for (std::size_t m : {3, 5, 9, 17}) {
    const auto fit = fit_univariate_shifts(
        nodes, target, tanh_act, FitConfig::for_interval({0.0, 1.0}, m, FitSolver::Minimax));
    CHECK(fit.sup_error <= prev + 1e-9);
    prev = fit.sup_error;
  }
}

TEST_CASE("assembling networks") {
  const SampledDomain d = sample_box(BoxDomainSpec{}, 5);
  const ShallowNetwork empty = assemble_network({}, {}, "sigmoid");
  CHECK(empty.terms.empty());
  for (double v : evaluate_network(empty, d)) CHECK(v == 0.0);
  CHECK(network_error(empty, d, std::vector<double>(d.size(), 0.0)) == 0.0);

  UnivariateFit g;
  g.c = {1.0, -0.5};
  g.theta = {0.2, 0.7};
  const ShallowNetwork only_a = assemble_network(g, {}, "tanh");
  const auto vals = evaluate_network(only_a, d);
  for (const auto& members : d.a_members()) {
    for (Index i : members) CHECK(vals[i] == doctest::Approx(vals[members[0]]));
  }
}

TEST_CASE("constructed network for xy") {
  const SampledDomain d = sample_box(BoxDomainSpec{}, 9);
  const auto f = xy(d);
  const BestApprox best = best_ridge_linf(d, f);
  double resid = 0.0;
  for (double r : best.residual) resid = std::max(resid, std::abs(r));
  CHECK(resid == doctest::Approx(best.error));

  for (const char* name : {"sigmoid", "tanh", "gaussian"}) {
    const ConstructedNetwork cn = construct_network(d, f, best, find_activation(name), 0.05);
    CHECK(cn.reached);
    CHECK(cn.network_error <= 0.30);
    const auto v0 = evaluate_ridge(best.v0, d);
    const auto nv = evaluate_network(cn.net, d);
    for (Index i = 0; i < d.size(); ++i) {
      CHECK(std::abs(nv[i] - v0[i]) <= cn.g_fit.sup_error + cn.h_fit.sup_error + 1e-9);
    }
  }
}
