#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace ridgegap::expr {

enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Call };

/// `Sign` is the derivative of `Abs` (sign(0) = 0); it can also be written
/// directly in expressions.
enum class Fn { Sin, Cos, Exp, Log, Tanh, Abs, Sqrt, Sign };

const char* function_name(Fn fn) noexcept;

/// Immutable expression tree over variables x1..xd.  Copies share nodes.
class Expr {
 public:
  static Expr constant(double v);
  /// 1-based variable index.
  static Expr var(std::size_t index);
  static Expr add(Expr l, Expr r);
  static Expr sub(Expr l, Expr r);
  static Expr mul(Expr l, Expr r);
  static Expr div(Expr l, Expr r);
  static Expr pow(Expr base, unsigned exponent);
  static Expr call(Fn fn, Expr arg);

  Op op() const noexcept;
  double value() const;           // Const
  std::size_t var_index() const;  // Var
  unsigned exponent() const;      // Pow
  Fn fn() const;                  // Call
  const Expr& lhs() const;        // binary ops, Pow base, Call argument
  const Expr& rhs() const;        // binary ops

  bool is_constant(double v) const noexcept;
  /// Largest variable index referenced (0 for none).
  std::size_t max_var() const noexcept;

  friend bool operator==(const Expr& l, const Expr& r);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar (whitespace insignificant):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)*          right-associative
///   primary := number | 'x'k | fn '(' expr ')' | '(' expr ')'
/// Unary minus on a bare number yields a negative constant; otherwise it
/// becomes (-1)*operand.  Throws SyntaxError, UnknownIdentifier or
/// DimensionExceeded.
Expr parse(std::string_view src, std::size_t dims);

/// Evaluates at `point` (x1 = point[0]).  Throws DomainError for log or sqrt
/// outside their domain and division by zero; IndexOutOfRange when the
/// expression references a variable past the end of `point`.
double eval(const Expr& e, std::span<const double> point);

/// Symbolic partial derivative with respect to x_var (1-based), with constant
/// folding (0*e -> 0, 1*e -> e, e+0 -> e, const op const -> const).
Expr differentiate(const Expr& e, std::size_t var);

/// Canonical fully parenthesized form; parse(print(e)) == e.
std::string print(const Expr& e);

}  // namespace ridgegap::expr
