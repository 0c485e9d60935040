#include "normgeom/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "normgeom/errors.hpp"

namespace normgeom {

struct Expr::Node {
  ExprKind kind = ExprKind::Number;
  double value = 0.0;
  Func func = Func::Sin;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  bool constant = true;
};

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 7> kFuncs{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"sqrt", Func::Sqrt},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"abs", Func::Abs},
}};

bool is_literal(const Expr& e, double v) {
  return e.kind() == ExprKind::Number && e.value() == v;
}

bool is_number(const Expr& e) { return e.kind() == ExprKind::Number; }

}  // namespace

std::string_view func_name(Func f) {
  for (const auto& [name, func] : kFuncs) {
    if (func == f) return name;
  }
  return "?";
}

// Raw node construction, no folding. Used by the parser so that printed and
// re-parsed trees compare equal.
class ExprBuilder {
 public:
  static Expr leaf(ExprKind kind, double value) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->value = value;
    node->constant = kind != ExprKind::Var;
    return Expr(std::move(node));
  }
  static Expr unary(ExprKind kind, const Expr& a, Func f = Func::Sin) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->func = f;
    node->a = a.node_;
    node->constant = a.is_constant();
    return Expr(std::move(node));
  }
  static Expr binary(ExprKind kind, const Expr& a, const Expr& b) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->a = a.node_;
    node->b = b.node_;
    node->constant = a.is_constant() && b.is_constant();
    return Expr(std::move(node));
  }
};

namespace {

const std::shared_ptr<const Expr::Node>& zero_node() {
  static const auto node = std::make_shared<const Expr::Node>();
  return node;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr Expr::number(double value) { return ExprBuilder::leaf(ExprKind::Number, value); }
Expr Expr::pi() { return ExprBuilder::leaf(ExprKind::Pi, 0.0); }
Expr Expr::var() { return ExprBuilder::leaf(ExprKind::Var, 0.0); }

ExprKind Expr::kind() const { return node_->kind; }
double Expr::value() const {
  if (node_->kind == ExprKind::Pi) return std::numbers::pi;
  return node_->value;
}
Func Expr::func() const { return node_->func; }
Expr Expr::lhs() const { return node_->a ? Expr(node_->a) : Expr(); }
Expr Expr::rhs() const { return node_->b ? Expr(node_->b) : Expr(); }
bool Expr::is_constant() const { return node_->constant; }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double apply(Func f, double x) {
  switch (f) {
    case Func::Sin: return std::sin(x);
    case Func::Cos: return std::cos(x);
    case Func::Tan: return std::tan(x);
    case Func::Sqrt:
      if (x < 0.0) throw DomainError("sqrt of negative argument");
      return std::sqrt(x);
    case Func::Exp: return std::exp(x);
    case Func::Log:
      if (x <= 0.0) throw DomainError("log of non-positive argument");
      return std::log(x);
    case Func::Abs: return std::abs(x);
  }
  return 0.0;
}

double power(double base, double exponent) {
  if (std::trunc(exponent) == exponent) {
    if (base == 0.0 && exponent < 0.0) throw DomainError("division by zero in power");
    return std::pow(base, exponent);
  }
  if (!(base > 0.0)) throw DomainError("non-integer exponent requires a positive base");
  return std::pow(base, exponent);
}

double eval_node(const Expr::Node& n, double t) {
  switch (n.kind) {
    case ExprKind::Number: return n.value;
    case ExprKind::Pi: return std::numbers::pi;
    case ExprKind::Var: return t;
    case ExprKind::Neg: return -eval_node(*n.a, t);
    case ExprKind::Add: return eval_node(*n.a, t) + eval_node(*n.b, t);
    case ExprKind::Sub: return eval_node(*n.a, t) - eval_node(*n.b, t);
    case ExprKind::Mul: return eval_node(*n.a, t) * eval_node(*n.b, t);
    case ExprKind::Div: {
      const double num = eval_node(*n.a, t);
      const double den = eval_node(*n.b, t);
      if (den == 0.0) throw DomainError("division by zero");
      return num / den;
    }
    case ExprKind::Pow: return power(eval_node(*n.a, t), eval_node(*n.b, t));
    case ExprKind::Call: return apply(n.func, eval_node(*n.a, t));
  }
  return 0.0;
}

}  // namespace

double eval(const Expr& e, double t) {
  const double v = eval_node(*e.node_, t);
  if (!std::isfinite(v)) throw DomainError("non-finite result");
  return v;
}

// ---------------------------------------------------------------------------
// Folding constructors

namespace {

// Folds a constant subtree to a literal when it evaluates cleanly.
Expr fold(const Expr& e) {
  if (!e.is_constant() || e.kind() == ExprKind::Number || e.kind() == ExprKind::Pi) return e;
  try {
    return Expr::number(eval(e, 0.0));
  } catch (const DomainError&) {
    return e;
  }
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  if (is_literal(a, 0.0)) return b;
  if (is_literal(b, 0.0)) return a;
  if (is_number(a) && is_number(b)) return Expr::number(a.value() + b.value());
  return ExprBuilder::binary(ExprKind::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (is_literal(b, 0.0)) return a;
  if (is_literal(a, 0.0)) return -b;
  if (is_number(a) && is_number(b)) return Expr::number(a.value() - b.value());
  return ExprBuilder::binary(ExprKind::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (is_literal(a, 0.0) || is_literal(b, 0.0)) return Expr::number(0.0);
  if (is_literal(a, 1.0)) return b;
  if (is_literal(b, 1.0)) return a;
  if (is_number(a) && is_number(b)) return Expr::number(a.value() * b.value());
  return ExprBuilder::binary(ExprKind::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (is_literal(b, 1.0)) return a;
  if (is_literal(a, 0.0) && !is_literal(b, 0.0)) return Expr::number(0.0);
  if (is_number(a) && is_number(b) && b.value() != 0.0) {
    return Expr::number(a.value() / b.value());
  }
  return ExprBuilder::binary(ExprKind::Div, a, b);
}

Expr operator-(const Expr& a) {
  if (is_number(a)) return Expr::number(-a.value());
  if (a.kind() == ExprKind::Neg) return a.lhs();
  return ExprBuilder::unary(ExprKind::Neg, a);
}

Expr pow(const Expr& base, const Expr& exponent) {
  if (is_literal(exponent, 1.0)) return base;
  if (is_literal(exponent, 0.0)) return Expr::number(1.0);
  return fold(ExprBuilder::binary(ExprKind::Pow, base, exponent));
}

Expr call(Func f, const Expr& arg) {
  return fold(ExprBuilder::unary(ExprKind::Call, arg, f));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Number: return a.node_->value == b.node_->value;
    case ExprKind::Pi:
    case ExprKind::Var: return true;
    case ExprKind::Neg: return a.lhs() == b.lhs();
    case ExprKind::Call: return a.func() == b.func() && a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Differentiation

Expr differentiate(const Expr& e) {
  const Expr zero = Expr::number(0.0);
  if (e.is_constant()) return zero;
  const Expr a = e.lhs();
  const Expr b = e.rhs();
  switch (e.kind()) {
    case ExprKind::Number:
    case ExprKind::Pi: return zero;
    case ExprKind::Var: return Expr::number(1.0);
    case ExprKind::Neg: return -differentiate(a);
    case ExprKind::Add: return differentiate(a) + differentiate(b);
    case ExprKind::Sub: return differentiate(a) - differentiate(b);
    case ExprKind::Mul: return differentiate(a) * b + a * differentiate(b);
    case ExprKind::Div:
      if (b.is_constant()) return differentiate(a) / b;
      return (differentiate(a) * b - a * differentiate(b)) / pow(b, Expr::number(2.0));
    case ExprKind::Pow: {
      if (b.is_constant()) {
        return b * pow(a, fold(b - Expr::number(1.0))) * differentiate(a);
      }
      if (a.is_constant()) {
        return e * call(Func::Log, a) * differentiate(b);
      }
      return e * (differentiate(b) * call(Func::Log, a) + b * differentiate(a) / a);
    }
    case ExprKind::Call: {
      const Expr da = differentiate(a);
      switch (e.func()) {
        case Func::Sin: return call(Func::Cos, a) * da;
        case Func::Cos: return -(call(Func::Sin, a) * da);
        case Func::Tan: return da / pow(call(Func::Cos, a), Expr::number(2.0));
        case Func::Sqrt: return da / (Expr::number(2.0) * e);
        case Func::Exp: return e * da;
        case Func::Log: return da / a;
        // sign(a) = a / |a|, valid away from zero.
        case Func::Abs: return a / e * da;
      }
    }
  }
  return zero;
}

Expr substitute(const Expr& e, const Expr& replacement) {
  if (e.is_constant()) return e;
  switch (e.kind()) {
    case ExprKind::Var: return replacement;
    case ExprKind::Neg: return -substitute(e.lhs(), replacement);
    case ExprKind::Add: return substitute(e.lhs(), replacement) + substitute(e.rhs(), replacement);
    case ExprKind::Sub: return substitute(e.lhs(), replacement) - substitute(e.rhs(), replacement);
    case ExprKind::Mul: return substitute(e.lhs(), replacement) * substitute(e.rhs(), replacement);
    case ExprKind::Div: return substitute(e.lhs(), replacement) / substitute(e.rhs(), replacement);
    case ExprKind::Pow:
      return pow(substitute(e.lhs(), replacement), substitute(e.rhs(), replacement));
    case ExprKind::Call: return call(e.func(), substitute(e.lhs(), replacement));
    default: return e;
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    case ExprKind::Number: return e.value() < 0.0 || std::signbit(e.value()) ? 3 : 5;
    default: return 5;
  }
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void print(std::ostringstream& os, const Expr& e);

void print_operand(std::ostringstream& os, const Expr& e, bool parens) {
  if (parens) os << '(';
  print(os, e);
  if (parens) os << ')';
}

void print(std::ostringstream& os, const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Number: os << format_number(e.value()); return;
    case ExprKind::Pi: os << "pi"; return;
    case ExprKind::Var: os << 't'; return;
    case ExprKind::Neg:
      os << '-';
      print_operand(os, e.lhs(), precedence(e.lhs()) < 3);
      return;
    case ExprKind::Add:
    case ExprKind::Sub:
      print_operand(os, e.lhs(), precedence(e.lhs()) < 1);
      os << (e.kind() == ExprKind::Add ? " + " : " - ");
      print_operand(os, e.rhs(), precedence(e.rhs()) <= 1);
      return;
    case ExprKind::Mul:
    case ExprKind::Div:
      print_operand(os, e.lhs(), precedence(e.lhs()) < 2);
      os << (e.kind() == ExprKind::Mul ? '*' : '/');
      print_operand(os, e.rhs(), precedence(e.rhs()) <= 2);
      return;
    case ExprKind::Pow:
      print_operand(os, e.lhs(), precedence(e.lhs()) < 5);
      os << '^';
      print_operand(os, e.rhs(), precedence(e.rhs()) < 3);
      return;
    case ExprKind::Call:
      os << func_name(e.func()) << '(';
      print(os, e.lhs());
      os << ')';
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip_space();
    if (pos_ < text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::ostringstream msg;
    msg << "syntax error at offset " << pos_ << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      msg << (i ? ", " : "") << expected[i];
    }
    if (pos_ < text_.size()) {
      msg << "; found '" << text_[pos_] << "'";
    } else {
      msg << "; found end of input";
    }
    throw SyntaxError(pos_, std::move(expected), msg.str());
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = ExprBuilder::binary(ExprKind::Add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = ExprBuilder::binary(ExprKind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = ExprBuilder::binary(ExprKind::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = ExprBuilder::binary(ExprKind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return ExprBuilder::unary(ExprKind::Neg, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) return ExprBuilder::binary(ExprKind::Pow, base, parse_unary());
    return base;
  }

  Expr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail(primary_expected());
    const char c = text_[pos_];
    if (accept('(')) {
      Expr inner = parse_sum();
      if (!accept(')')) fail({"')'"});
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') return parse_identifier();
    fail(primary_expected());
  }

  static std::vector<std::string> primary_expected() {
    return {"number", "'t'", "'pi'", "function", "'('", "'-'"};
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t count = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      count += digits();
    }
    if (count == 0) {
      pos_ = start;
      fail({"digit"});
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail({"exponent digit"});
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      pos_ = start;
      fail({"number"});
    }
    return ExprBuilder::leaf(ExprKind::Number, value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "t") return ExprBuilder::leaf(ExprKind::Var, 0.0);
    if (name == "pi") return ExprBuilder::leaf(ExprKind::Pi, 0.0);
    for (const auto& [fname, func] : kFuncs) {
      if (name == fname) {
        if (!accept('(')) fail({"'('"});
        Expr arg = parse_sum();
        if (!accept(')')) fail({"')'"});
        return ExprBuilder::unary(ExprKind::Call, arg, func);
      }
    }
    pos_ = start;
    fail({"'t'", "'pi'", "function"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace normgeom
