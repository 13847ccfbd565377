#include "ridgegap/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>
#include <vector>

#include "ridgegap/error.hpp"

namespace ridgegap::expr {

struct Expr::Node {
  Op op = Op::Const;
  double value = 0.0;
  std::size_t index = 0;  // variable index (Var) or exponent (Pow)
  Fn fn = Fn::Sin;
  std::vector<Expr> kids;
};

namespace {

constexpr std::array<std::pair<const char*, Fn>, 8> kFunctions{{
    {"sin", Fn::Sin},
    {"cos", Fn::Cos},
    {"exp", Fn::Exp},
    {"log", Fn::Log},
    {"tanh", Fn::Tanh},
    {"abs", Fn::Abs},
    {"sqrt", Fn::Sqrt},
    {"sign", Fn::Sign},
}};

}  // namespace

const char* function_name(Fn fn) noexcept {
  for (const auto& [name, f] : kFunctions) {
    if (f == fn) return name;
  }
  return "?";
}

Expr Expr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::var(std::size_t index) {
  if (index == 0) throw InvalidInput("variable indices start at 1");
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->index = index;
  return Expr(std::move(n));
}

#define RIDGEGAP_BINARY(name, OP)                 \
  Expr Expr::name(Expr l, Expr r) {               \
    auto n = std::make_shared<Node>();            \
    n->op = Op::OP;                               \
    n->kids = {std::move(l), std::move(r)};       \
    return Expr(std::move(n));                    \
  }
RIDGEGAP_BINARY(add, Add)
RIDGEGAP_BINARY(sub, Sub)
RIDGEGAP_BINARY(mul, Mul)
RIDGEGAP_BINARY(div, Div)
#undef RIDGEGAP_BINARY

Expr Expr::pow(Expr base, unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::Pow;
  n->index = exponent;
  n->kids = {std::move(base)};
  return Expr(std::move(n));
}

Expr Expr::call(Fn fn, Expr arg) {
  auto n = std::make_shared<Node>();
  n->op = Op::Call;
  n->fn = fn;
  n->kids = {std::move(arg)};
  return Expr(std::move(n));
}

Op Expr::op() const noexcept { return node_->op; }

double Expr::value() const {
  if (node_->op != Op::Const) throw InvalidInput("not a constant node");
  return node_->value;
}

std::size_t Expr::var_index() const {
  if (node_->op != Op::Var) throw InvalidInput("not a variable node");
  return node_->index;
}

unsigned Expr::exponent() const {
  if (node_->op != Op::Pow) throw InvalidInput("not a power node");
  return static_cast<unsigned>(node_->index);
}

Fn Expr::fn() const {
  if (node_->op != Op::Call) throw InvalidInput("not a call node");
  return node_->fn;
}

const Expr& Expr::lhs() const {
  if (node_->kids.empty()) throw InvalidInput("leaf node has no operand");
  return node_->kids[0];
}

const Expr& Expr::rhs() const {
  if (node_->kids.size() < 2) throw InvalidInput("node has no right operand");
  return node_->kids[1];
}

bool Expr::is_constant(double v) const noexcept {
  return node_->op == Op::Const && node_->value == v;
}

std::size_t Expr::max_var() const noexcept {
  std::size_t m = node_->op == Op::Var ? node_->index : 0;
  for (const Expr& k : node_->kids) m = std::max(m, k.max_var());
  return m;
}

bool operator==(const Expr& l, const Expr& r) {
  if (l.node_ == r.node_) return true;
  const auto& a = *l.node_;
  const auto& b = *r.node_;
  if (a.op != b.op || a.kids.size() != b.kids.size()) return false;
  switch (a.op) {
    case Op::Const:
      if (a.value != b.value) return false;
      break;
    case Op::Var:
    case Op::Pow:
      if (a.index != b.index) return false;
      break;
    case Op::Call:
      if (a.fn != b.fn) return false;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < a.kids.size(); ++k) {
    if (!(a.kids[k] == b.kids[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view src, std::size_t dims) : src_(src), dims_(dims) {}

  Expr parse_all() {
    Expr e = expression();
    skip_ws();
    if (pos_ != src_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k) msg += ", ";
      msg += expected[k];
    }
    if (pos_ < src_.size()) {
      msg += std::string(" but found '") + src_[pos_] + "'";
    } else {
      msg += " but reached end of input";
    }
    throw SyntaxError(pos_, std::move(expected), msg);
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept('+')) {
        e = Expr::add(std::move(e), term());
      } else if (accept('-')) {
        e = Expr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) {
        e = Expr::mul(std::move(e), unary());
      } else if (accept('/')) {
        e = Expr::div(std::move(e), unary());
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (accept('-')) {
      Expr operand = unary();
      if (operand.op() == Op::Const && last_was_literal_) {
        return Expr::constant(-operand.value());
      }
      last_was_literal_ = false;
      return Expr::mul(Expr::constant(-1.0), std::move(operand));
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    std::vector<unsigned> exps;
    while (accept('^')) {
      exps.push_back(integer_literal());
      last_was_literal_ = false;
    }
    if (exps.empty()) return base;
    // a^b^c = a^(b^c) with integer literals b, c.
    unsigned long long e = exps.back();
    for (std::size_t k = exps.size() - 1; k-- > 0;) {
      unsigned long long p = 1;
      for (unsigned long long i = 0; i < e; ++i) {
        p *= exps[k];
        if (p > 1'000'000) throw InvalidInput("exponent too large");
      }
      e = p;
    }
    if (e > 1'000'000) throw InvalidInput("exponent too large");
    return Expr::pow(std::move(base), static_cast<unsigned>(e));
  }

  unsigned integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail({"nonnegative integer exponent"});
    if (pos_ < src_.size() && (src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E')) {
      pos_ = start;
      fail({"nonnegative integer exponent"});
    }
    unsigned v = 0;
    auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail({"nonnegative integer exponent"});
    }
    return v;
  }

  Expr primary() {
    skip_ws();
    last_was_literal_ = false;
    if (pos_ >= src_.size()) fail({"number", "identifier", "'('", "'-'"});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!accept(')')) fail({"')'"});
      last_was_literal_ = false;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail({"number", "identifier", "'('", "'-'"});
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      const std::size_t exp_start = pos_;
      digits();
      if (pos_ == exp_start) pos_ = save;  // 'e' belongs to something else
    }
    double v = 0.0;
    auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc() || p != src_.data() + pos_) {
      pos_ = start;
      fail({"number"});
    }
    last_was_literal_ = true;
    return Expr::constant(v);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name.size() >= 2 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      std::size_t idx = 0;
      auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
      if (ec != std::errc() || idx == 0) {
        throw UnknownIdentifier(start, "unknown identifier '" + std::string(name) +
                                           "' at offset " + std::to_string(start));
      }
      if (idx > dims_) {
        throw DimensionExceeded(start, "variable '" + std::string(name) +
                                           "' exceeds dimension " + std::to_string(dims_));
      }
      return Expr::var(idx);
    }
    for (const auto& [fname, fn] : kFunctions) {
      if (name == fname) {
        if (!accept('(')) fail({"'('"});
        Expr arg = expression();
        if (!accept(')')) fail({"')'"});
        last_was_literal_ = false;
        return Expr::call(fn, std::move(arg));
      }
    }
    throw UnknownIdentifier(start, "unknown identifier '" + std::string(name) +
                                       "' at offset " + std::to_string(start));
  }

  std::string_view src_;
  std::size_t dims_;
  std::size_t pos_ = 0;
  bool last_was_literal_ = false;
};

}  // namespace

Expr parse(std::string_view src, std::size_t dims) { return Parser(src, dims).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(v));
  std::string digits(buf.data(), p);
  return std::signbit(v) ? "(-" + digits + ")" : digits;
}

void print_into(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Const:
      out += format_number(e.value());
      return;
    case Op::Var:
      out += "x" + std::to_string(e.var_index());
      return;
    case Op::Pow:
      out += '(';
      print_into(e.lhs(), out);
      out += '^' + std::to_string(e.exponent()) + ')';
      return;
    case Op::Call:
      out += function_name(e.fn());
      out += '(';
      print_into(e.lhs(), out);
      out += ')';
      return;
    default:
      break;
  }
  const char sym = e.op() == Op::Add ? '+' : e.op() == Op::Sub ? '-' : e.op() == Op::Mul ? '*' : '/';
  out += '(';
  print_into(e.lhs(), out);
  out += sym;
  print_into(e.rhs(), out);
  out += ')';
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

double eval(const Expr& e, std::span<const double> point) {
  switch (e.op()) {
    case Op::Const:
      return e.value();
    case Op::Var:
      if (e.var_index() > point.size()) {
        throw IndexOutOfRange("x" + std::to_string(e.var_index()) +
                              " is outside a point of dimension " +
                              std::to_string(point.size()));
      }
      return point[e.var_index() - 1];
    case Op::Add:
      return eval(e.lhs(), point) + eval(e.rhs(), point);
    case Op::Sub:
      return eval(e.lhs(), point) - eval(e.rhs(), point);
    case Op::Mul:
      return eval(e.lhs(), point) * eval(e.rhs(), point);
    case Op::Div: {
      const double num = eval(e.lhs(), point);
      const double den = eval(e.rhs(), point);
      if (den == 0.0) throw DomainError(print(e), "division by zero in " + print(e));
      return num / den;
    }
    case Op::Pow: {
      const double base = eval(e.lhs(), point);
      double acc = 1.0;
      for (unsigned k = 0; k < e.exponent(); ++k) acc *= base;
      return acc;
    }
    case Op::Call: {
      const double x = eval(e.lhs(), point);
      switch (e.fn()) {
        case Fn::Sin:
          return std::sin(x);
        case Fn::Cos:
          return std::cos(x);
        case Fn::Exp:
          return std::exp(x);
        case Fn::Log:
          if (!(x > 0.0)) throw DomainError(print(e), "log of non-positive value in " + print(e));
          return std::log(x);
        case Fn::Tanh:
          return std::tanh(x);
        case Fn::Abs:
          return std::abs(x);
        case Fn::Sqrt:
          if (x < 0.0) throw DomainError(print(e), "sqrt of negative value in " + print(e));
          return std::sqrt(x);
        case Fn::Sign:
          return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
      }
    }
  }
  throw InvalidInput("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

bool is_const(const Expr& e) { return e.op() == Op::Const; }

Expr make_add(Expr l, Expr r) {
  if (is_const(l) && is_const(r)) return Expr::constant(l.value() + r.value());
  if (l.is_constant(0.0)) return r;
  if (r.is_constant(0.0)) return l;
  return Expr::add(std::move(l), std::move(r));
}

Expr make_mul(Expr l, Expr r) {
  if (l.is_constant(0.0) || r.is_constant(0.0)) return Expr::constant(0.0);
  if (is_const(l) && is_const(r)) return Expr::constant(l.value() * r.value());
  if (l.is_constant(1.0)) return r;
  if (r.is_constant(1.0)) return l;
  return Expr::mul(std::move(l), std::move(r));
}

Expr make_sub(Expr l, Expr r) {
  if (is_const(l) && is_const(r)) return Expr::constant(l.value() - r.value());
  if (r.is_constant(0.0)) return l;
  if (l.is_constant(0.0)) return make_mul(Expr::constant(-1.0), std::move(r));
  return Expr::sub(std::move(l), std::move(r));
}

Expr make_div(Expr l, Expr r) {
  if (l.is_constant(0.0)) return Expr::constant(0.0);
  if (r.is_constant(1.0)) return l;
  if (is_const(l) && is_const(r) && r.value() != 0.0) {
    return Expr::constant(l.value() / r.value());
  }
  return Expr::div(std::move(l), std::move(r));
}

Expr make_pow(Expr base, unsigned n) {
  if (n == 0) return Expr::constant(1.0);
  if (n == 1) return base;
  if (is_const(base)) {
    double acc = 1.0;
    for (unsigned k = 0; k < n; ++k) acc *= base.value();
    return Expr::constant(acc);
  }
  return Expr::pow(std::move(base), n);
}

}  // namespace

Expr differentiate(const Expr& e, std::size_t var) {
  if (var == 0) throw InvalidInput("variable indices start at 1");
  switch (e.op()) {
    case Op::Const:
      return Expr::constant(0.0);
    case Op::Var:
      return Expr::constant(e.var_index() == var ? 1.0 : 0.0);
    case Op::Add:
      return make_add(differentiate(e.lhs(), var), differentiate(e.rhs(), var));
    case Op::Sub:
      return make_sub(differentiate(e.lhs(), var), differentiate(e.rhs(), var));
    case Op::Mul:
      return make_add(make_mul(differentiate(e.lhs(), var), e.rhs()),
                      make_mul(e.lhs(), differentiate(e.rhs(), var)));
    case Op::Div:
      return make_div(make_sub(make_mul(differentiate(e.lhs(), var), e.rhs()),
                               make_mul(e.lhs(), differentiate(e.rhs(), var))),
                      make_pow(e.rhs(), 2));
    case Op::Pow: {
      const unsigned n = e.exponent();
      if (n == 0) return Expr::constant(0.0);
      return make_mul(make_mul(Expr::constant(static_cast<double>(n)), make_pow(e.lhs(), n - 1)),
                      differentiate(e.lhs(), var));
    }
    case Op::Call: {
      const Expr& u = e.lhs();
      Expr du = differentiate(u, var);
      if (du.is_constant(0.0)) return du;
      switch (e.fn()) {
        case Fn::Sin:
          return make_mul(Expr::call(Fn::Cos, u), du);
        case Fn::Cos:
          return make_mul(make_mul(Expr::constant(-1.0), Expr::call(Fn::Sin, u)), du);
        case Fn::Exp:
          return make_mul(e, du);
        case Fn::Log:
          return make_div(du, u);
        case Fn::Tanh:
          return make_mul(make_sub(Expr::constant(1.0), make_pow(e, 2)), du);
        case Fn::Abs:
          return make_mul(Expr::call(Fn::Sign, u), du);
        case Fn::Sqrt:
          return make_div(du, make_mul(Expr::constant(2.0), e));
        case Fn::Sign:
          return Expr::constant(0.0);
      }
    }
  }
  throw InvalidInput("corrupt expression node");
}

}  // namespace ridgegap::expr
