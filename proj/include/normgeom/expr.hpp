#pragma once

// Expressions in one real variable `t`.
//
// Grammar (loosest to tightest binding):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right associative
//   primary := number | 'pi' | 't' | func '(' sum ')' | '(' sum ')'
//   func    := sin | cos | tan | sqrt | exp | log | abs

#include <memory>
#include <string>
#include <string_view>

namespace normgeom {

enum class ExprKind { Number, Pi, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Sin, Cos, Tan, Sqrt, Exp, Log, Abs };

std::string_view func_name(Func f);

class Expr {
 public:
  struct Node;

  // The literal 0.
  Expr();

  static Expr number(double value);
  static Expr pi();
  static Expr var();

  ExprKind kind() const;
  // Literal value for Number nodes, pi for Pi, 0 otherwise.
  double value() const;
  Func func() const;
  // Operand(s): lhs is the only operand of Neg and Call.
  Expr lhs() const;
  Expr rhs() const;

  // True when the expression does not mention `t`.
  bool is_constant() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, const Expr& exponent);
  friend Expr call(Func f, const Expr& arg);

  // Structural equality (exact literal comparison).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  friend class ExprBuilder;
  friend double eval(const Expr& e, double t);
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr pow(const Expr& base, const Expr& exponent);
Expr call(Func f, const Expr& arg);

// Throws SyntaxError carrying the byte offset and the expected-token set.
Expr parse(std::string_view text);

// Throws DomainError on invalid sqrt/log/pow arguments, division by zero
// and non-finite results.
double eval(const Expr& e, double t);

// Exact derivative with respect to t. Only constant folding is applied.
Expr differentiate(const Expr& e);

// Replaces every occurrence of t by `replacement`.
Expr substitute(const Expr& e, const Expr& replacement);

// Prints with minimal parentheses; parse(to_string(e)) == e for parsed trees.
std::string to_string(const Expr& e);

}  // namespace normgeom
