#include "ridgegap/network.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ridgegap/error.hpp"
#include "ridgegap/simplex.hpp"

namespace ridgegap {

const char* to_string(NonMeanPeriodicReason r) noexcept {
  switch (r) {
    case NonMeanPeriodicReason::Integrable:
      return "integrable";
    case NonMeanPeriodicReason::BoundedWithLimit:
      return "bounded-with-limit";
    case NonMeanPeriodicReason::Unknown:
      break;
  }
  return "unknown";
}

namespace {

double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}
double tanh_fn(double t) { return std::tanh(t); }
double gaussian(double t) { return std::exp(-t * t); }
double relu(double t) { return t > 0.0 ? t : 0.0; }

const std::vector<Activation>& registry() {
  static const std::vector<Activation> acts{
      {"sigmoid", &sigmoid, NonMeanPeriodicReason::BoundedWithLimit},
      {"tanh", &tanh_fn, NonMeanPeriodicReason::BoundedWithLimit},
      {"gaussian", &gaussian, NonMeanPeriodicReason::Integrable},
      {"relu", &relu, NonMeanPeriodicReason::Unknown},
  };
  return acts;
}

struct Rejected {
  const char* name;
  const char* why;
};

constexpr Rejected kMeanPeriodic[] = {
    {"polynomial",
     "polynomials are mean periodic: shifts of a degree-k polynomial span only "
     "polynomials of degree <= k, which is not dense in C(R)"},
    {"linear", "linear functions are mean periodic: their shifts span a 2-dimensional space"},
    {"identity", "the identity is mean periodic: its shifts span a 2-dimensional space"},
    {"sin", "trigonometric functions are mean periodic: shifts of sin span {sin, cos}"},
    {"cos", "trigonometric functions are mean periodic: shifts of cos span {sin, cos}"},
    {"exp", "exponentials are mean periodic: every shift of exp is a multiple of exp"},
};

}  // namespace

const Activation& find_activation(const std::string& name) {
  for (const Activation& a : registry()) {
    if (a.name == name) return a;
  }
  for (const Rejected& r : kMeanPeriodic) {
    if (name == r.name) {
      throw MeanPeriodicActivation("activation '" + name + "' is rejected: " + r.why);
    }
  }
  throw UnknownActivation("unknown activation '" + name + "'");
}

std::vector<std::string> activation_names() {
  std::vector<std::string> out;
  for (const Activation& a : registry()) out.push_back(a.name);
  return out;
}

double evaluate_network(const ShallowNetwork& net, const DirectionPair& dirs,
                        std::span<const double> x) {
  const Activation& sigma = find_activation(net.sigma);
  const double pa = dirs.project_a(x);
  const double pb = dirs.project_b(x);
  double s = 0.0;
  for (const NetworkTerm& t : net.terms) {
    s += t.c * sigma.eval((t.w == EdgeKind::A ? pa : pb) - t.theta);
  }
  return s;
}

std::vector<double> evaluate_network(const ShallowNetwork& net, const SampledDomain& domain) {
  std::vector<double> out(domain.size());
  for (Index i = 0; i < domain.size(); ++i) {
    out[i] = evaluate_network(net, domain.dirs(), domain.point(i));
  }
  return out;
}

void FitConfig::validate() const {
  if (m < 1) throw InvalidInput("fit needs at least one shifted term");
  if (!(interval[0] < interval[1])) throw InvalidInput("fit interval must satisfy lo < hi");
  if (!(theta_range[0] <= theta_range[1])) throw InvalidInput("theta range is reversed");
}

FitConfig FitConfig::for_interval(std::array<double, 2> interval, std::size_t m,
                                  FitSolver solver) {
  FitConfig cfg;
  if (!(interval[0] < interval[1])) {
    interval = {interval[0] - 0.5, interval[0] + 0.5};
  }
  const double width = interval[1] - interval[0];
  const double center = 0.5 * (interval[0] + interval[1]);
  cfg.interval = interval;
  cfg.theta_range = {center - 2.0 * width, center + 2.0 * width};
  cfg.m = m;
  cfg.solver = solver;
  return cfg;
}

std::array<double, 2> projection_interval(const SampledDomain& domain, double margin) {
  if (margin < 0.0) throw InvalidInput("margin must be nonnegative");
  if (domain.empty()) return {-margin, margin};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : domain.points()) {
    for (double v : {domain.dirs().project_a(p), domain.dirs().project_b(p)}) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo - margin, hi + margin};
}

namespace {

std::vector<double> theta_grid(const FitConfig& cfg) {
  return grid_nodes(cfg.theta_range[0], cfg.theta_range[1], cfg.m);
}

double sup_deviation(std::span<const double> nodes, std::span<const double> target,
                     const Activation& sigma, const std::vector<double>& c,
                     const std::vector<double>& theta) {
  double worst = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * sigma.eval(nodes[k] - theta[j]);
    worst = std::max(worst, std::abs(target[k] - s));
  }
  return worst;
}

std::vector<double> minimax_coefficients(std::span<const double> nodes,
                                         std::span<const double> target,
                                         const Activation& sigma,
                                         const std::vector<double>& theta) {
  // Variables: c+ (m), c- (m), t.  maximize -t.
  const std::size_t m = theta.size();
  const std::size_t nv = 2 * m + 1;
  lp::Program prog;
  prog.num_vars = nv;
  prog.objective.assign(nv, 0.0);
  prog.objective[2 * m] = -1.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    lp::Row up{std::vector<double>(nv, 0.0), lp::Sense::GreaterEqual, target[k]};
    lp::Row dn{std::vector<double>(nv, 0.0), lp::Sense::GreaterEqual, -target[k]};
    for (std::size_t j = 0; j < m; ++j) {
      const double s = sigma.eval(nodes[k] - theta[j]);
      up.coeffs[j] = s;
      up.coeffs[m + j] = -s;
      dn.coeffs[j] = -s;
      dn.coeffs[m + j] = s;
    }
    up.coeffs[2 * m] = 1.0;
    dn.coeffs[2 * m] = 1.0;
    prog.rows.push_back(std::move(up));
    prog.rows.push_back(std::move(dn));
  }
  const lp::Solution sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) {
    throw SolverStall("minimax shift fit did not reach optimality");
  }
  std::vector<double> c(m);
  for (std::size_t j = 0; j < m; ++j) c[j] = sol.x[j] - sol.x[m + j];
  return c;
}

}  // namespace

UnivariateFit fit_univariate_shifts(std::span<const double> nodes,
                                    std::span<const double> target, const Activation& sigma,
                                    const FitConfig& cfg) {
  cfg.validate();
  if (nodes.size() != target.size()) {
    throw InvalidInput("fit nodes and target values differ in length");
  }
  for (double t : nodes) {
    if (t < cfg.interval[0] || t > cfg.interval[1]) {
      throw InvalidInput("fit node lies outside the configured interval");
    }
  }
  UnivariateFit fit;
  fit.theta = theta_grid(cfg);
  fit.solver = cfg.solver;
  if (nodes.empty()) {
    fit.c.assign(cfg.m, 0.0);
    return fit;
  }

  if (cfg.solver == FitSolver::LeastSquares) {
    const auto rows = static_cast<Eigen::Index>(nodes.size());
    const auto cols = static_cast<Eigen::Index>(cfg.m);
    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index k = 0; k < rows; ++k) {
      rhs(k) = target[static_cast<std::size_t>(k)];
      for (Eigen::Index j = 0; j < cols; ++j) {
        design(k, j) = sigma.eval(nodes[static_cast<std::size_t>(k)] -
                                  fit.theta[static_cast<std::size_t>(j)]);
      }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-12);
    if (qr.rank() == cols) {
      const Eigen::VectorXd c = qr.solve(rhs);
      fit.c.assign(c.data(), c.data() + c.size());
    } else {
      fit.advisory = "IllConditioned: least-squares design matrix has rank " +
                     std::to_string(qr.rank()) + " < " + std::to_string(cols) +
                     "; fell back to minimax";
      fit.solver = FitSolver::Minimax;
    }
  }
  if (fit.solver == FitSolver::Minimax) {
    fit.c = minimax_coefficients(nodes, target, sigma, fit.theta);
  }
  fit.sup_error = sup_deviation(nodes, target, sigma, fit.c, fit.theta);
  return fit;
}

ShallowNetwork assemble_network(const UnivariateFit& g_fit, const UnivariateFit& h_fit,
                                const std::string& sigma) {
  ShallowNetwork net;
  net.sigma = sigma;
  for (std::size_t j = 0; j < g_fit.c.size(); ++j) {
    net.terms.push_back({g_fit.c[j], EdgeKind::A, g_fit.theta.at(j)});
  }
  for (std::size_t j = 0; j < h_fit.c.size(); ++j) {
    net.terms.push_back({h_fit.c[j], EdgeKind::B, h_fit.theta.at(j)});
  }
  return net;
}

double network_error(const ShallowNetwork& net, const SampledDomain& domain,
                     std::span<const double> fvals) {
  if (fvals.size() != domain.size()) {
    throw InvalidInput("function values must cover every domain point");
  }
  double worst = 0.0;
  for (Index i = 0; i < domain.size(); ++i) {
    worst = std::max(worst,
                     std::abs(fvals[i] - evaluate_network(net, domain.dirs(), domain.point(i))));
  }
  return worst;
}

ConstructedNetwork construct_network(const SampledDomain& domain,
                                     std::span<const double> fvals, const BestApprox& best,
                                     const Activation& sigma, double epsilon,
                                     std::size_t m_cap, FitSolver solver) {
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  ConstructedNetwork out;
  out.interval = projection_interval(domain, 0.0);
  const auto& av = domain.a_level_values();
  const auto& bv = domain.b_level_values();
  // Level representatives may differ from raw projections by rounding.
  for (const auto* vals : {&av, &bv}) {
    for (double v : *vals) {
      out.interval[0] = std::min(out.interval[0], v);
      out.interval[1] = std::max(out.interval[1], v);
    }
  }
  for (std::size_t m = 3; m <= m_cap; m = 2 * m - 1) {
    const FitConfig cfg = FitConfig::for_interval(out.interval, m, solver);
    out.g_fit = fit_univariate_shifts(av, best.v0.g, sigma, cfg);
    out.h_fit = fit_univariate_shifts(bv, best.v0.h, sigma, cfg);
    out.m = m;
    out.interval = cfg.interval;
    if (out.g_fit.sup_error <= epsilon / 2 && out.h_fit.sup_error <= epsilon / 2) {
      out.reached = true;
      break;
    }
  }
  out.net = assemble_network(out.g_fit, out.h_fit, sigma.name);
  out.network_error = network_error(out.net, domain, fvals);
  return out;
}

}  // namespace ridgegap
