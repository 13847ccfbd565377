// ridgegap command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ridgegap/commands.hpp"
#include "ridgegap/error.hpp"
#include "ridgegap/log.hpp"

namespace {

using namespace ridgegap;

struct Flags {
  std::string problem;
  std::string f;
  std::vector<double> a;
  std::vector<double> b;
  std::string points;
  std::vector<double> box;
  std::optional<std::size_t> grid;
  std::optional<std::string> activation;
  std::optional<double> epsilon;
  std::optional<std::size_t> max_len;
  std::optional<double> tol;
  std::string output;
  std::string csv;
  std::size_t jobs = 1;
  bool timings = false;
};

void add_problem_flags(CLI::App* cmd, Flags& fl) {
  cmd->add_option("--problem", fl.problem, "problem JSON file (flags override its fields)");
  cmd->add_option("--f", fl.f, "function expression in x1, x2, ...");
  cmd->add_option("--a", fl.a, "first direction, comma separated")->delimiter(',');
  cmd->add_option("--b", fl.b, "second direction, comma separated")->delimiter(',');
  cmd->add_option("--points", fl.points, "JSON file with points (and optional values)");
  cmd->add_option("--box", fl.box, "box c1 d1 c2 d2 in projection coordinates")
      ->expected(4)
      ->allow_extra_args();
  cmd->add_option("--grid", fl.grid, "grid size per box side");
  cmd->add_option("--tol", fl.tol, "level tolerance for explicit points");
  cmd->add_option("--output", fl.output, "write the report here instead of stdout");
  cmd->add_flag("--timings", fl.timings, "add wall-clock timings to the report");
}

ProblemSpec make_spec(const Flags& fl) {
  ProblemSpec spec;
  if (!fl.problem.empty()) {
    std::ifstream in(fl.problem);
    if (!in) throw InvalidInput("cannot open problem file '" + fl.problem + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidInput("problem file is not valid JSON: " + std::string(e.what()));
    }
    spec = ProblemSpec::from_json(j);
  }
  if (!fl.a.empty()) spec.a = fl.a;
  if (!fl.b.empty()) spec.b = fl.b;
  if (!fl.a.empty() || !fl.b.empty()) spec.dims = spec.a.size();
  if (!fl.f.empty()) {
    spec.f = fl.f;
    spec.values.reset();
  }
  if (!fl.points.empty()) {
    spec.box.reset();
    spec.values.reset();
    load_points_file(fl.points, spec);
    if (!fl.f.empty()) {
      spec.values.reset();
    } else if (spec.values) {
      spec.f.clear();
    }
  }
  if (!fl.box.empty()) {
    if (!fl.points.empty()) throw InvalidInput("--points and --box are mutually exclusive");
    spec.points.reset();
    spec.values.reset();
    spec.box = std::array<double, 4>{fl.box[0], fl.box[1], fl.box[2], fl.box[3]};
  }
  if (fl.grid) spec.grid = *fl.grid;
  if (fl.activation) spec.activation = *fl.activation;
  if (fl.epsilon) spec.epsilon = *fl.epsilon;
  if (fl.max_len) spec.max_len = *fl.max_len;
  if (fl.tol) spec.tol = *fl.tol;
  spec.timings = fl.timings;
  spec.validate();
  return spec;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

int finish(const Outcome& o, const std::string& output) {
  for (const auto& w : o.warnings) log::warn(w);
  if (!o.report.empty()) write_text(output, render(o.report));
  if (o.error) std::cerr << json{{"error", *o.error}}.dump() << '\n';
  return o.exit_code;
}

int bad_input(const std::exception& e) {
  std::cerr << json{{"error", error_object(e)}}.dump() << '\n';
  return exit_code::kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform approximation error of two-direction ridge sums and shallow networks"};
  app.require_subcommand(1);
  Flags fl;

  auto* err = app.add_subcommand("error", "closed-path lower bound, LP best approximation, closed form");
  add_problem_flags(err, fl);
  err->add_option("--csv", fl.csv, "write an (m, lowerBound, bestRidge) refinement curve");
  err->add_option("--jobs", fl.jobs, "threads for the refinement curve")->check(CLI::PositiveNumber);

  auto* fit = app.add_subcommand("fit-network", "construct a shallow network near the best approximation");
  add_problem_flags(fit, fl);
  fit->add_option("--activation", fl.activation, "sigmoid, tanh, gaussian or relu");
  fit->add_option("--epsilon", fl.epsilon, "target fit accuracy");

  auto* en = app.add_subcommand("enumerate-paths", "list closed paths up to a length");
  add_problem_flags(en, fl);
  en->add_option("--max-len", fl.max_len, "longest closed path to list");

  std::uint64_t seed = 42;
  long long trials = 100;
  std::string fault = "none";
  auto* ver = app.add_subcommand("verify", "randomized invariant suites");
  ver->add_option("--seed", seed, "generator seed");
  ver->add_option("--trials", trials, "trials per suite");
  ver->add_option("--inject-fault", fault, "none or flipped-b-edge-sign (harness self-test)");
  ver->add_option("--output", fl.output, "write the summary here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_code::kBadInput;
  }

  if (ver->parsed()) {
    if (trials < 1) {
      return bad_input(InvalidInput("--trials must be at least 1"));
    }
    Fault fl_fault;
    try {
      fl_fault = fault_from_string(fault);
    } catch (const std::exception& e) {
      return bad_input(e);
    }
    log::info("verify seed=" + std::to_string(seed) + " trials=" + std::to_string(trials));
    return finish(cmd_verify(seed, static_cast<std::size_t>(trials), fl_fault), fl.output);
  }

  ProblemSpec spec;
  try {
    spec = make_spec(fl);
  } catch (const std::exception& e) {
    return bad_input(e);
  }

  if (err->parsed()) {
    const Outcome o = cmd_error(spec);
    int code = finish(o, fl.output);
    if (!fl.csv.empty()) {
      try {
        write_text(fl.csv, refinement_csv(spec, fl.jobs));
      } catch (const std::exception& e) {
        std::cerr << json{{"error", error_object(e)}}.dump() << '\n';
        if (code == exit_code::kOk) code = exit_code::kComputation;
      }
    }
    return code;
  }
  if (fit->parsed()) return finish(cmd_fit_network(spec), fl.output);

  const EnumerateOutcome o = cmd_enumerate_paths(spec);
  std::string text;
  for (const json& line : o.lines) text += line.dump() + "\n";
  if (o.partial) text += json{{"partial", true}, {"count", o.lines.size()}}.dump() + "\n";
  try {
    write_text(fl.output, text);
  } catch (const std::exception& e) {
    return bad_input(e);
  }
  if (o.error) std::cerr << json{{"error", *o.error}}.dump() << '\n';
  return o.exit_code;
}
