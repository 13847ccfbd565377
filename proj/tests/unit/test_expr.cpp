#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ridgegap/error.hpp"
#include "ridgegap/expr.hpp"

using namespace ridgegap;
using namespace ridgegap::expr;

namespace {
double at(const std::string& src, std::vector<double> x) { return eval(parse(src, x.size()), x); }
}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("x1*x2", 2) == Expr::mul(Expr::var(1), Expr::var(2)));
  CHECK(parse("x1^2 - x2^2", 2) ==
        Expr::sub(Expr::pow(Expr::var(1), 2), Expr::pow(Expr::var(2), 2)));
  CHECK(parse("-3", 1) == Expr::constant(-3.0));
  CHECK(parse("-x1", 1) == Expr::mul(Expr::constant(-1.0), Expr::var(1)));
  CHECK(parse(" 1 + 2 * 3 ", 1) ==
        Expr::add(Expr::constant(1), Expr::mul(Expr::constant(2), Expr::constant(3))));
  CHECK(parse("1e-3", 1).value() == doctest::Approx(0.001));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("sin(x1*(", 2);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 8);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse("x1 +", 2), SyntaxError);
  CHECK_THROWS_AS(parse("x1 x2", 2), SyntaxError);
  CHECK_THROWS_AS(parse("x1^x2", 2), SyntaxError);
  try {
    parse("x1 + foo(x2)", 2);
    FAIL("no error");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.offset() == 5);
  }
  try {
    parse("x1 + x3", 2);
    FAIL("no error");
  } catch (const DimensionExceeded& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("evaluation") {
  CHECK(at("x1*x2", {0.5, 0.4}) == doctest::Approx(0.2));
  CHECK(at("exp(x1)+tanh(x2)", {0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(at("2^3^2", {0.0}) == doctest::Approx(512.0));
  CHECK(at("-x1^2", {3.0}) == doctest::Approx(-9.0));
  CHECK(at("abs(x1) + sign(x1)", {-2.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(at("log(x1)", {-1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(at("sqrt(x1)", {-1.0}), DomainError);
  CHECK_THROWS_AS(at("1/x1", {0.0}), DomainError);
  try {
    at("1 + log(x1)", {-1.0});
  } catch (const DomainError& e) {
    CHECK(e.node().find("log") != std::string::npos);
  }
  CHECK_THROWS_AS(eval(parse("x2", 2), std::vector<double>{1.0}), IndexOutOfRange);
}

TEST_CASE("symbolic derivatives") {
  CHECK(differentiate(parse("x1*x2", 2), 1) == Expr::var(2));
  const Expr f = parse("x1^2 - x2^2", 2);
  CHECK(differentiate(differentiate(f, 1), 2).is_constant(0.0));
  CHECK(print(differentiate(parse("sin(x1*x2)", 2), 1)) == print(parse("cos(x1*x2)*x2", 2)));
  CHECK(differentiate(parse("7", 1), 1).is_constant(0.0));
}

TEST_CASE("printing round-trips") {
  CHECK(print(parse("x1*x2 + 1", 2)) == "((x1*x2)+1)");
  for (const char* src : {"-2.5*x1", "x1 - -3", "(x1+x2)^3", "sqrt(abs(x1))/ (1+x2^2)",
                          "1e-7 * exp(-x1)"}) {
    const Expr e = parse(src, 2);
    CHECK(parse(print(e), 2) == e);
  }
}

TEST_CASE("random trees: fixpoint and finite differences") {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 150; ++t) {
    const Expr e = oracle::random_expr(rng, 2, 4);
    const std::string text = print(e);
    CHECK(parse(text, 2) == e);
    CHECK(print(parse(text, 2)) == text);
    const std::vector<double> x{u(rng), u(rng)};
    for (std::size_t v : {1, 2}) {
      const double fd = oracle::ridders_derivative(
          [&](const std::vector<double>& p) { return eval(e, p); }, x, v);
      const double sym = eval(differentiate(e, v), x);
      CHECK(std::abs(fd - sym) <= std::max(1e-6, 1e-6 * std::abs(sym)));
    }
  }
}
