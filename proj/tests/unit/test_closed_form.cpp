#include <doctest.h>

#include <cmath>

#include "ridgegap/closed_form.hpp"
#include "ridgegap/error.hpp"
#include "ridgegap/random_instances.hpp"
#include "ridgegap/ridge.hpp"

using namespace ridgegap;

namespace {
const DirectionPair kRot({1.0, 1.0}, {1.0, -1.0});
BoxDomainSpec box(double c1, double d1, double c2, double d2,
                  DirectionPair dirs = DirectionPair::axes()) {
  return BoxDomainSpec{c1, d1, c2, d2, std::move(dirs)};
}
TransformedFunction axes_fn(const char* src) {
  return TransformedFunction(SmoothFunction2D::parse(src), DirectionPair::axes());
}
}  // namespace

TEST_CASE("class condition margins") {
  const auto xy = SmoothFunction2D::parse("x1*x2");
  const ConditionCheck c1 = check_class_condition(xy, box(0, 1, 0, 1));
  CHECK(c1.ok);
  CHECK(c1.margin == doctest::Approx(1.0));

  const ConditionCheck c2 =
      check_class_condition(SmoothFunction2D::parse("x1^2 - x2^2"), box(0, 1, 0, 1, kRot));
  CHECK(c2.ok);
  CHECK(c2.margin == doctest::Approx(4.0));

  const ConditionCheck c3 =
      check_class_condition(SmoothFunction2D::parse("-x1*x2"), box(0, 1, 0, 1));
  CHECK_FALSE(c3.ok);
  CHECK(c3.margin == doctest::Approx(-1.0));
}

TEST_CASE("transformed function") {
  const auto f = SmoothFunction2D::parse("sin(x1) + x1*x2^2");
  const TransformedFunction g(f, DirectionPair::axes());
  const std::vector<double> p{0.3, -0.8};
  CHECK(g.value(0.3, -0.8) == doctest::Approx(expr::eval(f.f, p)));

  const TransformedFunction r(SmoothFunction2D::parse("x1^2 - x2^2"), kRot);
  for (double y1 : {0.0, 0.3, 1.0}) {
    for (double y2 : {-0.5, 0.25, 1.0}) {
      CHECK(r.value(y1, y2) == doctest::Approx(y1 * y2));
      CHECK(r.mixed(y1, y2) == doctest::Approx(1.0));
    }
  }
  CHECK_THROWS_AS(TransformedFunction(f, DirectionPair({1.0, 2.0}, {2.0, 4.0})),
                  SingularDirections);
}

TEST_CASE("class condition implies nonnegative mixed partial") {
  Rng rng(8);
  int accepted = 0;
  for (int t = 0; t < 60; ++t) {
    const auto f = SmoothFunction2D::parse(random_smooth_expression(rng));
    BoxDomainSpec k = box(0, 1, 0, 1, random_directions(rng));
    if (!check_class_condition(f, k, 17).ok) continue;
    ++accepted;
    const TransformedFunction g(f, k.dirs);
    CHECK(check_curvature(g, k, 17).margin >= -1e-9);
  }
  CHECK(accepted > 0);
}

TEST_CASE("corner formula") {
  CHECK(corner_formula_error(axes_fn("x1*x2"), box(0, 1, 0, 1)).value == doctest::Approx(0.25));
  CHECK(std::abs(corner_formula_error(axes_fn("sin(x1) + x2^3"), box(0, 1, 0, 1)).value) <= 1e-15);
  CHECK(corner_formula_error(axes_fn("x1*x2"), box(0, 2, 0, 3)).value == doctest::Approx(1.5));
  const CornerFormula bad = corner_formula_error(axes_fn("-x1*x2"), box(0, 1, 0, 1), false);
  CHECK_FALSE(bad.certified);
  CHECK(bad.advisory.has_value());

  // the LP on the corner grid gives the same value
  const SampledDomain corners = sample_box(box(0, 2, 0, 3), 2);
  std::vector<double> f;
  for (const Point& p : corners.points()) f.push_back(p[0] * p[1]);
  CHECK(best_ridge_linf(corners, f).error == doctest::Approx(1.5));
}

TEST_CASE("mixed partial quadrature") {
  for (std::size_t n : {2, 3, 5}) {
    CHECK(mixed_partial_integral(axes_fn("x1*x2"), box(0, 1, 0, 1), n) == doctest::Approx(1.0));
  }
  CHECK(std::abs(mixed_partial_integral(axes_fn("cos(x1) + x2^2"), box(0, 1, 0, 1), 8)) <= 1e-14);
  CHECK(std::abs(mixed_partial_integral(axes_fn("sin(x1)*x2"), box(0, 1, 0, 1), 64) -
                 std::sin(1.0)) <= 1e-6);
  const TransformedFunction g = axes_fn("exp(x1*x2)");
  const BoxDomainSpec k = box(-0.5, 1.0, 0.2, 0.9);
  CHECK(std::abs(mixed_partial_integral(g, k, 32) - corner_sum(g, k)) <= 1e-10);
}

TEST_CASE("closed-form report") {
  const ClosedFormReport r = closed_form_report(SmoothFunction2D::parse("x1*x2"), box(0, 1, 0, 1));
  CHECK(r.in_class);
  CHECK(r.curvature_ok);
  CHECK(r.certified);
  CHECK(r.corner_value == doctest::Approx(0.25));
  CHECK(r.quadrature_value == doctest::Approx(0.25));
  CHECK(r.literal_integral == doctest::Approx(1.0));
  CHECK(r.note.find("factor of 4") != std::string::npos);

  const ClosedFormReport rot =
      closed_form_report(SmoothFunction2D::parse("x1^2 - x2^2"), box(0, 1, 0, 1, kRot));
  CHECK(rot.class_margin == doctest::Approx(4.0));
  CHECK(rot.corner_value == doctest::Approx(0.25));
}
