#include "ridgegap/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "ridgegap/closed_form.hpp"
#include "ridgegap/error.hpp"
#include "ridgegap/expr.hpp"
#include "ridgegap/extremal.hpp"
#include "ridgegap/log.hpp"
#include "ridgegap/ridge.hpp"

namespace ridgegap {

// ---------------------------------------------------------------- problem I/O

void ProblemSpec::validate() const {
  if (dims < 1) throw InvalidInput("dims must be positive");
  if (a.size() != dims || b.size() != dims) {
    throw InvalidInput("directions a and b must have dims = " + std::to_string(dims) +
                       " components");
  }
  if (points.has_value() == box.has_value()) {
    throw InvalidInput("give exactly one domain: explicit points or a box with a grid");
  }
  if (box) {
    if (dims != 2) throw InvalidInput("box domains need dims = 2");
    const auto& k = *box;
    for (double v : k) {
      if (!std::isfinite(v)) throw InvalidInput("box bounds must be finite");
    }
    if (!(k[0] < k[1]) || !(k[2] < k[3])) throw InvalidInput("box needs c1 < d1 and c2 < d2");
    if (grid < 2) throw InvalidInput("grid must be at least 2");
    if (values) throw InvalidInput("explicit values need an explicit point list");
  }
  if (points) {
    for (const Point& p : *points) {
      if (p.size() != dims) throw InvalidInput("every point must have dims coordinates");
    }
    if (values && values->size() != points->size()) {
      throw InvalidInput("values must match the number of points");
    }
  }
  if (f.empty() && !values) throw InvalidInput("a function expression or values is required");
  if (!f.empty() && values) throw InvalidInput("give either an expression or values, not both");
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  if (tol && !(*tol > 0.0)) throw InvalidInput("tol must be positive");
  if (max_len < 2) throw InvalidInput("max-len must be at least 2");
  if (quadrature_order < 2) throw InvalidInput("quadrature order must be at least 2");
  if (check_grid < 2) throw InvalidInput("check grid must be at least 2");
  if (m_cap < 3) throw InvalidInput("m cap must be at least 3");
}

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      throw InvalidInput("unknown key '" + key + "' in " + where);
    }
  }
}

std::size_t positive_int(const json& v, const std::string& name) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InvalidInput(name + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

double number(const json& v, const std::string& name) {
  if (!v.is_number()) throw InvalidInput(name + " must be a number");
  return v.get<double>();
}

std::vector<double> number_array(const json& v, const std::string& name) {
  if (!v.is_array()) throw InvalidInput(name + " must be an array of numbers");
  std::vector<double> out;
  for (const json& x : v) out.push_back(number(x, name));
  return out;
}

std::vector<Point> point_array(const json& v) {
  if (!v.is_array()) throw InvalidInput("points must be an array of coordinate arrays");
  std::vector<Point> pts;
  for (const json& p : v) pts.push_back(number_array(p, "point"));
  return pts;
}

FitSolver solver_from_string(const std::string& s) {
  if (s == "minimax") return FitSolver::Minimax;
  if (s == "least-squares") return FitSolver::LeastSquares;
  throw InvalidInput("solver must be minimax or least-squares");
}

const char* solver_name(FitSolver s) {
  return s == FitSolver::Minimax ? "minimax" : "least-squares";
}

}  // namespace

ProblemSpec ProblemSpec::from_json(const json& j) {
  require_keys(j, {"dims", "a", "b", "domain", "f", "values", "activation", "epsilon", "options"},
               "problem");
  ProblemSpec s;
  if (j.contains("dims")) s.dims = positive_int(j["dims"], "dims");
  if (!j.contains("a") || !j.contains("b")) throw InvalidInput("problem needs directions a and b");
  s.a = number_array(j["a"], "a");
  s.b = number_array(j["b"], "b");
  if (!j.contains("domain")) throw InvalidInput("problem needs a domain");
  const json& d = j["domain"];
  require_keys(d, {"box", "grid", "points"}, "domain");
  if (d.contains("box")) {
    const auto k = number_array(d["box"], "box");
    if (k.size() != 4) throw InvalidInput("box must be [c1, d1, c2, d2]");
    s.box = std::array<double, 4>{k[0], k[1], k[2], k[3]};
    if (d.contains("grid")) s.grid = positive_int(d["grid"], "grid");
  } else if (d.contains("grid")) {
    throw InvalidInput("grid only applies to a box domain");
  }
  if (d.contains("points")) s.points = point_array(d["points"]);
  if (j.contains("f")) {
    if (!j["f"].is_string()) throw InvalidInput("f must be an expression string");
    s.f = j["f"].get<std::string>();
  }
  if (j.contains("values")) s.values = number_array(j["values"], "values");
  if (j.contains("activation")) {
    if (!j["activation"].is_string()) throw InvalidInput("activation must be a string");
    s.activation = j["activation"].get<std::string>();
  }
  if (j.contains("epsilon")) s.epsilon = number(j["epsilon"], "epsilon");
  if (j.contains("options")) {
    const json& o = j["options"];
    require_keys(o, {"tol", "maxLen", "quadratureOrder", "checkGrid", "mCap", "solver"},
                 "options");
    if (o.contains("tol")) s.tol = number(o["tol"], "tol");
    if (o.contains("maxLen")) s.max_len = positive_int(o["maxLen"], "maxLen");
    if (o.contains("quadratureOrder")) {
      s.quadrature_order = positive_int(o["quadratureOrder"], "quadratureOrder");
    }
    if (o.contains("checkGrid")) s.check_grid = positive_int(o["checkGrid"], "checkGrid");
    if (o.contains("mCap")) s.m_cap = positive_int(o["mCap"], "mCap");
    if (o.contains("solver")) {
      if (!o["solver"].is_string()) throw InvalidInput("solver must be a string");
      s.solver = solver_from_string(o["solver"].get<std::string>());
    }
  }
  s.validate();
  return s;
}

json ProblemSpec::to_json() const {
  json dom = json::object();
  if (box) {
    dom["box"] = *box;
    dom["grid"] = grid;
  }
  if (points) dom["points"] = *points;
  json j{{"dims", dims}, {"a", a}, {"b", b}, {"domain", dom}};
  if (!f.empty()) j["f"] = f;
  if (values) j["values"] = *values;
  j["activation"] = activation;
  j["epsilon"] = epsilon;
  json o{{"maxLen", max_len},
         {"quadratureOrder", quadrature_order},
         {"checkGrid", check_grid},
         {"mCap", m_cap},
         {"solver", solver_name(solver)}};
  if (tol) o["tol"] = *tol;
  j["options"] = o;
  return j;
}

void load_points_file(const std::string& path, ProblemSpec& spec) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open points file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("points file '" + path + "' is not valid JSON: " + e.what());
  }
  if (j.is_array()) {
    spec.points = point_array(j);
    return;
  }
  require_keys(j, {"points", "values"}, "points file");
  if (!j.contains("points")) throw InvalidInput("points file needs a points array");
  spec.points = point_array(j["points"]);
  if (j.contains("values")) spec.values = number_array(j["values"], "values");
}

// ---------------------------------------------------------------- helpers

json error_object(const std::exception& e) {
  json o{{"kind", "InternalError"}, {"message", e.what()}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) o["kind"] = err->kind();
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    o["offset"] = se->offset();
    o["expected"] = se->expected();
  } else if (const auto* ui = dynamic_cast<const UnknownIdentifier*>(&e)) {
    o["offset"] = ui->offset();
  } else if (const auto* de = dynamic_cast<const DimensionExceeded*>(&e)) {
    o["offset"] = de->offset();
  } else if (const auto* dm = dynamic_cast<const DomainError*>(&e)) {
    o["node"] = dm->node();
  }
  return o;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

namespace {

int exit_code_for(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (!err) return exit_code::kComputation;
  static const std::set<std::string> kBadInput{
      "InvalidInput",      "SingularDirections", "IndexOutOfRange",
      "DuplicatePoint",    "MissingLevel",       "UnknownActivation",
      "MeanPeriodicActivation", "SyntaxError",   "UnknownIdentifier",
      "DimensionExceeded"};
  if (err->kind() == "CombinatorialBlowup") return exit_code::kBlowup;
  return kBadInput.count(err->kind()) ? exit_code::kBadInput : exit_code::kComputation;
}

void fail(Outcome& out, const std::exception& e) {
  out.exit_code = exit_code_for(e);
  out.error = error_object(e);
}

struct Problem {
  SampledDomain domain;
  std::vector<double> f;
  std::optional<BoxDomainSpec> box;  ///< set only when the box is usable
  std::optional<expr::Expr> expression;
  std::optional<json> singular;      ///< error object for dependent directions
};

bool twice_differentiable(const expr::Expr& e) {
  if (e.op() == expr::Op::Call &&
      (e.fn() == expr::Fn::Abs || e.fn() == expr::Fn::Sign)) {
    return false;
  }
  switch (e.op()) {
    case expr::Op::Const:
    case expr::Op::Var:
      return true;
    case expr::Op::Pow:
    case expr::Op::Call:
      return twice_differentiable(e.lhs());
    default:
      return twice_differentiable(e.lhs()) && twice_differentiable(e.rhs());
  }
}

Problem build_problem(const ProblemSpec& spec) {
  spec.validate();
  Problem p{SampledDomain::from_points({}, DirectionPair(spec.a, spec.b)), {}, {}, {}, {}};
  const DirectionPair dirs(spec.a, spec.b);
  if (!spec.f.empty()) p.expression = expr::parse(spec.f, spec.dims);

  if (spec.box) {
    const auto& k = *spec.box;
    BoxDomainSpec bs{k[0], k[1], k[2], k[3], dirs};
    try {
      bs.validate();
      p.domain = sample_box(bs, spec.grid);
      p.box = bs;
    } catch (const SingularDirections& e) {
      // The projection box has no preimage grid; sample the box in x instead.
      p.singular = error_object(e);
      std::vector<Point> pts;
      for (double x1 : grid_nodes(k[0], k[1], spec.grid)) {
        for (double x2 : grid_nodes(k[2], k[3], spec.grid)) pts.push_back({x1, x2});
      }
      p.domain = SampledDomain::from_points(std::move(pts), dirs, spec.tol);
    }
  } else {
    p.domain = SampledDomain::from_points(*spec.points, dirs, spec.tol);
  }

  if (spec.values) {
    p.f = *spec.values;
  } else {
    p.f.resize(p.domain.size());
    for (Index i = 0; i < p.domain.size(); ++i) {
      p.f[i] = expr::eval(*p.expression, p.domain.point(i));
    }
  }
  log::debug("domain has " + std::to_string(p.domain.size()) + " points, " +
             std::to_string(p.domain.num_a_levels()) + " a-levels, " +
             std::to_string(p.domain.num_b_levels()) + " b-levels");
  return p;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on) {}
  void lap(const char* name) {
    if (!on_) return;
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  void attach(json& report) const {
    if (on_) report["timings"] = laps_;
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  json laps_ = json::object();
};

json domain_summary(const SampledDomain& d) {
  return json{{"points", d.size()},
              {"aLevels", d.num_a_levels()},
              {"bLevels", d.num_b_levels()}};
}

bool close_to(double x, double ref) {
  return std::abs(x - ref) <= 1e-7 * std::max(1.0, std::abs(ref));
}

}  // namespace

// ---------------------------------------------------------------- commands

Outcome cmd_error(const ProblemSpec& spec) {
  Outcome out;
  out.report = json::object();
  try {
    Stopwatch clock(spec.timings);
    const Problem p = build_problem(spec);
    clock.lap("setup");
    out.report["domain"] = domain_summary(p.domain);

    const SupResult sup = sup_closed_path(p.domain, p.f);
    clock.lap("lowerBound");
    out.report["lowerBound"] = to_json(sup);

    const BestApprox best = best_ridge_linf(p.domain, p.f);
    clock.lap("bestRidge");
    json br = to_json(best, p.domain);
    br["extremalPaths"] = to_json(extremal_paths_of_residual(p.domain, p.f, best));
    out.report["bestRidge"] = br;

    json agreement{{"closed_path_duality", close_to(sup.value, best.error)}};

    out.report["closedForm"] = nullptr;
    if (p.box && p.expression && twice_differentiable(*p.expression)) {
      const ClosedFormReport cf = closed_form_report(
          SmoothFunction2D::from_expr(*p.expression), *p.box,
          {spec.check_grid, spec.quadrature_order});
      clock.lap("closedForm");
      out.report["closedForm"] = to_json(cf);
      agreement["fubini"] =
          std::abs(cf.literal_integral - 4.0 * cf.corner_value) <= cf.quadrature_tol;
      agreement["closed_form"] =
          cf.certified ? json(close_to(cf.corner_value, best.error)) : json(nullptr);
    } else if (p.box && p.expression) {
      out.warnings.push_back("closed form skipped: f uses abs or sign");
    }
    out.report["network"] = nullptr;
    out.report["agreement"] = agreement;

    bool agree = true;
    for (const auto& [_, v] : agreement.items()) {
      if (v.is_boolean() && !v.get<bool>()) agree = false;
    }
    if (!agree) out.exit_code = exit_code::kDisagreement;
    if (p.singular) {
      out.warnings.push_back("closed form skipped: directions are dependent");
      out.error = *p.singular;
      out.exit_code = exit_code::kBadInput;
    }
    clock.attach(out.report);
  } catch (const std::exception& e) {
    fail(out, e);
  }
  if (!out.report.empty()) out.report["warnings"] = out.warnings;
  return out;
}

Outcome cmd_fit_network(const ProblemSpec& spec) {
  Outcome out;
  out.report = json::object();
  try {
    Stopwatch clock(spec.timings);
    const Activation& sigma = find_activation(spec.activation);
    if (sigma.reason == NonMeanPeriodicReason::Unknown) {
      out.warnings.push_back("activation '" + sigma.name +
                             "' has no recorded reason for being non-mean-periodic; "
                             "convergence of the construction is not guaranteed");
    }
    const Problem p = build_problem(spec);
    if (p.singular) throw SingularDirections(p.singular->at("message").get<std::string>());
    clock.lap("setup");
    out.report["domain"] = domain_summary(p.domain);

    const BestApprox best = best_ridge_linf(p.domain, p.f);
    clock.lap("bestRidge");
    out.report["bestRidge"] = to_json(best, p.domain);

    const ConstructedNetwork cn =
        construct_network(p.domain, p.f, best, sigma, spec.epsilon, spec.m_cap, spec.solver);
    clock.lap("network");
    json net = to_json(cn.net);
    net["networkError"] = cn.network_error;
    net["m"] = cn.m;
    net["reached"] = cn.reached;
    net["epsilon"] = spec.epsilon;
    net["interval"] = cn.interval;
    net["gFitError"] = cn.g_fit.sup_error;
    net["hFitError"] = cn.h_fit.sup_error;
    net["solver"] = solver_name(cn.g_fit.solver);
    net["activationReason"] = to_string(sigma.reason);
    for (const auto* fit : {&cn.g_fit, &cn.h_fit}) {
      if (fit->advisory) out.warnings.push_back(*fit->advisory);
    }
    out.report["network"] = net;
    if (!cn.reached) {
      out.exit_code = exit_code::kUnreachable;
      out.error = json{{"kind", "EpsilonUnreachable"},
                       {"message", "fit error above epsilon/2 at the m cap " +
                                       std::to_string(spec.m_cap)}};
    }
    clock.attach(out.report);
  } catch (const std::exception& e) {
    fail(out, e);
  }
  if (!out.report.empty()) out.report["warnings"] = out.warnings;
  return out;
}

EnumerateOutcome cmd_enumerate_paths(const ProblemSpec& spec) {
  EnumerateOutcome out;
  try {
    const Problem p = build_problem(spec);
    const EnumerationResult en = enumerate_closed_paths(p.domain, spec.max_len);
    struct Item {
      double value;
      const ClosedPath* path;
    };
    std::vector<Item> items;
    for (const ClosedPath& cp : en.paths) items.push_back({path_functional(cp, p.f), &cp});
    std::stable_sort(items.begin(), items.end(), [](const Item& l, const Item& r) {
      return std::abs(l.value) > std::abs(r.value);
    });
    for (const Item& it : items) {
      json line = to_json(*it.path);
      line["value"] = it.value;
      out.lines.push_back(std::move(line));
    }
    if (en.blowup) {
      out.partial = true;
      out.exit_code = exit_code::kBlowup;
      out.error = json{{"kind", "CombinatorialBlowup"},
                       {"message", "enumeration cap reached; output is partial"}};
    }
    if (p.singular) {
      out.exit_code = exit_code::kBadInput;
      out.error = *p.singular;
    }
  } catch (const std::exception& e) {
    out.exit_code = exit_code_for(e);
    out.error = error_object(e);
  }
  return out;
}

Outcome cmd_verify(std::uint64_t seed, std::size_t trials, Fault fault) {
  Outcome out;
  out.report = json::object();
  try {
    const VerifySummary sum = run_verify(seed, trials, fault);
    out.report = sum.to_json();
    if (fault != Fault::None) out.report["fault"] = to_string(fault);
    if (!sum.passed()) out.exit_code = exit_code::kDisagreement;
  } catch (const std::exception& e) {
    fail(out, e);
  }
  return out;
}

// ---------------------------------------------------------------- refinement

std::vector<std::size_t> refinement_sizes(std::size_t grid) {
  std::vector<std::size_t> out;
  for (std::size_t m = 2; m < grid; m = m == 2 ? 3 : 2 * m - 1) out.push_back(m);
  if (grid >= 2) out.push_back(grid);
  return out;
}

std::string refinement_csv(const ProblemSpec& spec, std::size_t jobs) {
  if (!spec.box) throw InvalidInput("refinement curves need a box domain");
  const auto sizes = refinement_sizes(spec.grid);
  struct Row {
    double lower = 0.0;
    double best = 0.0;
    std::exception_ptr err;
  };
  std::vector<Row> rows(sizes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < sizes.size();) {
      try {
        ProblemSpec s = spec;
        s.grid = sizes[k];
        const Problem p = build_problem(s);
        rows[k].lower = sup_closed_path(p.domain, p.f).value;
        rows[k].best = best_ridge_linf(p.domain, p.f).error;
        log::debug("refinement m=" + std::to_string(sizes[k]) + " done");
      } catch (...) {
        rows[k].err = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(jobs, 1, sizes.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream csv;
  csv.precision(17);
  csv << "m,lowerBound,bestRidge\n";
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (rows[k].err) std::rethrow_exception(rows[k].err);
    csv << sizes[k] << ',' << rows[k].lower << ',' << rows[k].best << '\n';
  }
  return csv.str();
}

}  // namespace ridgegap
