#include <doctest.h>

#include "ridgegap/commands.hpp"
#include "ridgegap/error.hpp"

using namespace ridgegap;

namespace {
ProblemSpec box_problem(const std::string& f, std::size_t grid = 9) {
  ProblemSpec s;
  s.box = std::array<double, 4>{0, 1, 0, 1};
  s.grid = grid;
  s.f = f;
  return s;
}
}  // namespace

TEST_CASE("error report for xy") {
  const Outcome o = cmd_error(box_problem("x1*x2"));
  CHECK(o.exit_code == 0);
  const json& r = o.report;
  CHECK(r["lowerBound"]["value"].get<double>() == doctest::Approx(0.25));
  CHECK(r["bestRidge"]["error"].get<double>() == doctest::Approx(0.25));
  CHECK(r["closedForm"]["cornerValue"].get<double>() == doctest::Approx(0.25));
  CHECK(r["agreement"]["closed_path_duality"].get<bool>());
  CHECK(r["agreement"]["closed_form"].get<bool>());
  CHECK(r["network"].is_null());
  CHECK_FALSE(r.contains("timings"));
  CHECK(render(r) == render(cmd_error(box_problem("x1*x2")).report));
}

TEST_CASE("error report for a ridge sum is zero") {
  const Outcome o = cmd_error(box_problem("x1+x2"));
  CHECK(o.exit_code == 0);
  CHECK(o.report["lowerBound"]["value"].get<double>() == doctest::Approx(0.0));
  CHECK(o.report["bestRidge"]["error"].get<double>() <= 1e-12);
  CHECK(std::abs(o.report["closedForm"]["cornerValue"].get<double>()) <= 1e-12);
}

TEST_CASE("dependent directions with a box") {
  ProblemSpec s = box_problem("x1*x2", 5);
  s.a = {1, 1};
  s.b = {2, 2};
  const Outcome o = cmd_error(s);
  CHECK(o.exit_code == exit_code::kBadInput);
  REQUIRE(o.error);
  CHECK((*o.error)["kind"] == "SingularDirections");
  CHECK(o.report.contains("lowerBound"));
  CHECK(o.report.contains("bestRidge"));
  CHECK(o.report["closedForm"].is_null());
  CHECK(o.report["agreement"]["closed_path_duality"].get<bool>());
}

TEST_CASE("bad input and computation errors") {
  Outcome o = cmd_error(box_problem("sin(x1*("));
  CHECK(o.exit_code == exit_code::kBadInput);
  CHECK((*o.error)["kind"] == "SyntaxError");
  CHECK((*o.error)["offset"] == 8);
  o = cmd_error(box_problem("log(x1 - 2)"));
  CHECK(o.exit_code == exit_code::kComputation);
  CHECK((*o.error)["kind"] == "DomainError");
  CHECK(o.report.empty());
}

TEST_CASE("fit-network") {
  ProblemSpec s = box_problem("x1*x2");
  Outcome o = cmd_fit_network(s);
  CHECK(o.exit_code == 0);
  CHECK(o.report["network"]["networkError"].get<double>() <= 0.30);

  s = box_problem("x1+x2");
  s.epsilon = 0.01;
  o = cmd_fit_network(s);
  CHECK(o.exit_code == 0);
  CHECK(o.report["network"]["networkError"].get<double>() <= 0.01);

  s.activation = "polynomial";
  o = cmd_fit_network(s);
  CHECK(o.exit_code == exit_code::kBadInput);
  CHECK((*o.error)["kind"] == "MeanPeriodicActivation");

  s.activation = "relu";
  o = cmd_fit_network(s);
  CHECK(o.warnings.size() == 1);

  s = box_problem("sin(9*x1*x2)", 17);
  s.epsilon = 1e-9;
  s.m_cap = 5;
  o = cmd_fit_network(s);
  CHECK(o.exit_code == exit_code::kUnreachable);
}

TEST_CASE("enumerate-paths") {
  EnumerateOutcome o = cmd_enumerate_paths(box_problem("x1*x2", 2));
  CHECK(o.exit_code == 0);
  REQUIRE(o.lines.size() == 1);
  CHECK(std::abs(o.lines[0]["value"].get<double>()) == doctest::Approx(0.25));

  ProblemSpec s = box_problem("x1*x2", 3);
  s.max_len = 4;
  o = cmd_enumerate_paths(s);
  CHECK(o.lines.size() == 9);
  for (std::size_t k = 1; k < o.lines.size(); ++k) {
    CHECK(std::abs(o.lines[k - 1]["value"].get<double>()) >=
          std::abs(o.lines[k]["value"].get<double>()));
  }

  ProblemSpec diag;
  diag.points = std::vector<Point>{{0, 0}, {1, 1}, {2, 2}};
  diag.f = "x1";
  o = cmd_enumerate_paths(diag);
  CHECK(o.exit_code == 0);
  CHECK(o.lines.empty());
}

TEST_CASE("verify") {
  Outcome o = cmd_verify(42, 100);
  CHECK(o.exit_code == 0);
  CHECK(o.report["passed"].get<bool>());
  CHECK(o.report["suites"]["duality"]["pass"] == 100);

  o = cmd_verify(42, 0);
  CHECK(o.exit_code == exit_code::kBadInput);

  o = cmd_verify(42, 5, Fault::FlippedBEdgeSign);
  CHECK(o.exit_code == exit_code::kDisagreement);
  CHECK(o.report["suites"]["duality"]["fail"].get<int>() > 0);
  REQUIRE(o.report.contains("counterexample"));
  CHECK(o.report["counterexample"]["suite"] == "duality");
  CHECK(o.report["counterexample"]["points"].size() <= 8);
}

TEST_CASE("problem JSON") {
  const json j = json::parse(R"({"a":[1,0],"b":[0,1],"domain":{"box":[0,1,0,1],"grid":5},
                                 "f":"x1*x2","options":{"maxLen":6}})");
  const ProblemSpec s = ProblemSpec::from_json(j);
  CHECK(s.grid == 5);
  CHECK(s.max_len == 6);
  CHECK(ProblemSpec::from_json(s.to_json()).to_json() == s.to_json());

  CHECK_THROWS_AS(ProblemSpec::from_json(json::parse(R"({"a":[1,0],"b":[0,1],"domain":{"box":[0,1,0,1]},"f":"x1","colour":1})")),
                  InvalidInput);
  CHECK_THROWS_AS(ProblemSpec::from_json(json::parse(R"({"a":[1,0],"b":[0,1],"domain":{"box":[0,1,0,1],"points":[[0,0]]},"f":"x1"})")),
                  InvalidInput);
  CHECK_THROWS_AS(ProblemSpec::from_json(json::parse(R"({"a":[1,0],"b":[0,1],"domain":{"box":[0,1,0,1]},"f":"x1","epsilon":-1})")),
                  InvalidInput);
  CHECK_THROWS_AS(ProblemSpec::from_json(json::parse(R"({"a":[1,0],"b":[0,1],"domain":{"points":[[0,0]]},"values":[1,2]})")),
                  InvalidInput);
}

TEST_CASE("refinement curve") {
  CHECK(refinement_sizes(33) == std::vector<std::size_t>{2, 3, 5, 9, 17, 33});
  CHECK(refinement_sizes(12) == std::vector<std::size_t>{2, 3, 5, 9, 12});
  const ProblemSpec s = box_problem("x1*x2", 17);
  const std::string one = refinement_csv(s, 1);
  CHECK(one == refinement_csv(s, 4));
  CHECK(one.rfind("m,lowerBound,bestRidge\n2,0.25,0.25\n", 0) == 0);
}
