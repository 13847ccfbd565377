#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ridgegap/domain.hpp"
#include "ridgegap/expr.hpp"

namespace ridgegap {

/// f(x1, x2) with its symbolic second partials.
struct SmoothFunction2D {
  expr::Expr f;
  expr::Expr d11;
  expr::Expr d12;
  expr::Expr d22;

  static SmoothFunction2D from_expr(expr::Expr f);
  static SmoothFunction2D parse(std::string_view src);
};

struct ConditionCheck {
  bool ok = false;
  double margin = 0.0;                 ///< minimum over the samples
  std::array<double, 2> worst_point{};  ///< x where the minimum occurs
};

/// d12*(a1*b2 + a2*b1) - d11*a2*b2 - d22*a1*b1 at x: the mixed partial of the
/// transformed function times (a1*b2 - a2*b1)^2.
double curvature_expression(const SmoothFunction2D& f, const DirectionPair& dirs,
                            std::array<double, 2> x);

/// Samples the curvature expression on the m x m grid of the box domain and
/// accepts when its minimum is >= -1e-9.  Domain errors are rethrown with
/// the offending point.
ConditionCheck check_class_condition(const SmoothFunction2D& f, const BoxDomainSpec& spec,
                                     std::size_t m = 65);

/// g(y1, y2) = f(inverse_transform(y)) together with its mixed partial.
class TransformedFunction {
 public:
  /// Throws SingularDirections for dependent directions.
  TransformedFunction(SmoothFunction2D f, DirectionPair dirs);

  double value(double y1, double y2) const;
  /// d2g/dy1dy2 by the chain rule through the inverse change of variables.
  double mixed(double y1, double y2) const;
  const DirectionPair& dirs() const noexcept { return dirs_; }

 private:
  SmoothFunction2D f_;
  DirectionPair dirs_;
  double det_ = 1.0;
};

/// Minimum of g_y1y2 over an m x m grid of K.
ConditionCheck check_curvature(const TransformedFunction& g, const BoxDomainSpec& k,
                               std::size_t m = 65);

/// Corner sum g(d1,d2) - g(d1,c2) - g(c1,d2) + g(c1,c2) over K.
double corner_sum(const TransformedFunction& g, const BoxDomainSpec& k);

struct CornerFormula {
  double value = 0.0;   ///< one quarter of the corner sum
  bool certified = true;
  std::optional<std::string> advisory;
};

/// Uniform error of g from univariate sums on K when g_y1y2 >= 0.  With
/// `curvature_ok` false the value is still computed but flagged uncertified.
CornerFormula corner_formula_error(const TransformedFunction& g, const BoxDomainSpec& k,
                                   bool curvature_ok = true);

/// Composite three-point Gauss-Legendre quadrature of g_y1y2 over K on an
/// n x n panel grid.  Equals corner_sum up to quadrature error.
double mixed_partial_integral(const TransformedFunction& g, const BoxDomainSpec& k,
                              std::size_t n);

struct ClosedFormOptions {
  std::size_t check_grid = 65;
  std::size_t quadrature_order = 64;
};

struct ClosedFormReport {
  bool in_class = false;
  double class_margin = 0.0;
  bool curvature_ok = false;
  double curvature_margin = 0.0;
  double corner_value = 0.0;      ///< (1/4) * corner sum: the uniform error
  double quadrature_value = 0.0;  ///< (1/4) * mixed_partial_integral
  double literal_integral = 0.0;  ///< unscaled double integral of g_y1y2
  double quadrature_tol = 0.0;
  double error_estimate = 0.0;
  bool certified = false;
  std::string note;
};

/// Runs the whole box-domain pipeline for f on the domain described by `spec`.
ClosedFormReport closed_form_report(const SmoothFunction2D& f, const BoxDomainSpec& spec,
                                    const ClosedFormOptions& options = {});

}  // namespace ridgegap
