#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "normgeom/errors.hpp"
#include "normgeom/expr.hpp"
#include "support/oracles.hpp"
#include "support/random_expr.hpp"

using namespace normgeom;

namespace {

double at(const char* text, double t) { return eval(parse(text), t); }

}  // namespace

TEST(ExprParse, FunctionOfScaledVariable) {
  const Expr e = parse("cos(pi/2*t)");
  ASSERT_EQ(e.kind(), ExprKind::Call);
  EXPECT_EQ(e.func(), Func::Cos);
  const Expr mul = e.lhs();
  ASSERT_EQ(mul.kind(), ExprKind::Mul);
  ASSERT_EQ(mul.lhs().kind(), ExprKind::Div);
  EXPECT_EQ(mul.lhs().lhs().kind(), ExprKind::Pi);
  EXPECT_EQ(mul.lhs().rhs().kind(), ExprKind::Number);
  EXPECT_EQ(mul.lhs().rhs().value(), 2.0);
  EXPECT_EQ(mul.rhs().kind(), ExprKind::Var);
}

TEST(ExprParse, Subtraction) {
  const Expr e = parse("1-t");
  ASSERT_EQ(e.kind(), ExprKind::Sub);
  EXPECT_EQ(e.lhs().value(), 1.0);
  EXPECT_EQ(e.rhs().kind(), ExprKind::Var);
}

TEST(ExprParse, PowerIsRightAssociative) { EXPECT_EQ(at("2^3^2", 0.0), 512.0); }

TEST(ExprParse, PowerBindsTighterThanUnaryMinus) {
  EXPECT_EQ(at("-2^2", 0.0), -4.0);
  EXPECT_EQ(at("2^-1", 0.0), 0.5);
  EXPECT_EQ(at("(-2)^2", 0.0), 4.0);
}

TEST(ExprParse, ProductsBeforeSums) {
  EXPECT_EQ(at("1+2*3", 0.0), 7.0);
  EXPECT_EQ(at("(1+2)*3", 0.0), 9.0);
  EXPECT_EQ(at("8/4/2", 0.0), 1.0);
  EXPECT_EQ(at("1-2-3", 0.0), -4.0);
  EXPECT_EQ(at("2*-3", 0.0), -6.0);
  EXPECT_EQ(at("+t", 5.0), 5.0);
}

TEST(ExprParse, NumberForms) {
  EXPECT_EQ(at("1.5e2", 0.0), 150.0);
  EXPECT_EQ(at(".25", 0.0), 0.25);
  EXPECT_EQ(at("3.", 0.0), 3.0);
  EXPECT_EQ(at("  2 *\tt ", 4.0), 8.0);
}

TEST(ExprParse, ErrorsCarryOffsetAndExpectedTokens) {
  try {
    parse("1+");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 2u);
    EXPECT_EQ(e.code(), ErrorCode::Syntax);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "number"), e.expected().end());
  }
  try {
    parse("sin(t");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"')'"});
  }
  try {
    parse("2*foo(t)");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("1 2"), SyntaxError);
  EXPECT_THROW(parse("1e"), SyntaxError);
  EXPECT_THROW(parse("sin t"), SyntaxError);
  EXPECT_THROW(parse("t$"), SyntaxError);
}

TEST(ExprEval, Examples) {
  EXPECT_NEAR(at("cos(pi/2*t)", 1.0), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(at("16/sqrt((15*cos(pi/2*t)^2+1)^3)", 1.0), 16.0);
  EXPECT_DOUBLE_EQ(at("16/sqrt((15*cos(pi/2*t)^2+1)^3)", 2.0), 0.25);
  EXPECT_DOUBLE_EQ(at("abs(t)", -3.0), 3.0);
  EXPECT_DOUBLE_EQ(at("exp(log(t))", 2.0), 2.0);
  EXPECT_DOUBLE_EQ(at("tan(pi/4)", 0.0), std::tan(std::numbers::pi / 4));
}

TEST(ExprEval, DomainErrors) {
  EXPECT_THROW(at("1/t", 0.0), DomainError);
  EXPECT_THROW(at("sqrt(t)", -1.0), DomainError);
  EXPECT_THROW(at("log(t)", 0.0), DomainError);
  EXPECT_THROW(at("log(t)", -1.0), DomainError);
  EXPECT_THROW(at("t^0.5", -4.0), DomainError);
  EXPECT_THROW(at("t^-1", 0.0), DomainError);
  EXPECT_THROW(at("exp(t)", 1000.0), DomainError);
  EXPECT_NO_THROW(at("t^2", -3.0));
  EXPECT_DOUBLE_EQ(at("t^3", -2.0), -8.0);
}

TEST(ExprDerivative, Examples) {
  EXPECT_DOUBLE_EQ(eval(differentiate(parse("t^2")), 3.0), 6.0);
  EXPECT_NEAR(eval(differentiate(parse("sin(pi/2*t)")), 0.0), std::numbers::pi / 2, 1e-15);
  EXPECT_DOUBLE_EQ(eval(differentiate(parse("abs(t)")), -2.0), -1.0);
  EXPECT_DOUBLE_EQ(eval(differentiate(parse("abs(t)")), 2.0), 1.0);
  EXPECT_NEAR(eval(differentiate(parse("log(t)")), 4.0), 0.25, 1e-15);
  EXPECT_NEAR(eval(differentiate(parse("2^t")), 1.0), 2.0 * std::log(2.0), 1e-15);
}

TEST(ExprDerivative, ConstantFolding) {
  const Expr d = differentiate(parse("3*t + 5"));
  ASSERT_EQ(d.kind(), ExprKind::Number);
  EXPECT_EQ(d.value(), 3.0);
  EXPECT_TRUE(differentiate(parse("sin(pi)")).is_constant());
  EXPECT_EQ(differentiate(parse("sin(pi)")).value(), 0.0);
}

TEST(ExprDerivative, MatchesFiniteDifferences) {
  oracle::RandomExpr gen(7);
  int probes = 0;
  while (probes < 1000) {
    const Expr e = gen.make(3);
    const Expr d = differentiate(e);
    const double t = gen.uniform(-1.0, 1.0);
    double exact = 0.0;
    double fd = 0.0;
    try {
      exact = eval(d, t);
      fd = oracle::central_difference([&](double s) { return eval(e, s); }, t);
    } catch (const DomainError&) {
      continue;
    }
    ++probes;
    EXPECT_LT(std::abs(exact - fd), 1e-6 * (1.0 + std::abs(exact)))
        << to_string(e) << " at t=" << t;
  }
}

TEST(ExprDerivative, IsLinear) {
  oracle::RandomExpr gen(11);
  for (int i = 0; i < 200; ++i) {
    const Expr e1 = gen.make(2);
    const Expr e2 = gen.make(2);
    const double a = gen.uniform(-3.0, 3.0);
    const double b = gen.uniform(-3.0, 3.0);
    const double t = gen.uniform(-1.0, 1.0);
    const Expr combined = differentiate(Expr::number(a) * e1 + Expr::number(b) * e2);
    const double lhs = eval(combined, t);
    const double rhs = a * eval(differentiate(e1), t) + b * eval(differentiate(e2), t);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(ExprPrint, RoundTripIsStable) {
  for (const char* text :
       {"cos(pi/2*t)", "1-t", "2^3^2", "(2^3)^2", "-2^2", "(-2)^2", "1-(2-t)", "8/(4/t)",
        "-(t+1)", "16/sqrt((15*cos(pi/2*t)^2+1)^3)", "t^-1", "-t*-t", "abs(-t)", "1e-300*t"}) {
    const Expr e1 = parse(text);
    const Expr e2 = parse(to_string(e1));
    EXPECT_EQ(e1, e2) << text << " printed as " << to_string(e1);
    EXPECT_EQ(to_string(e1), to_string(e2));
  }
}

TEST(ExprPrint, RandomRoundTrip) {
  oracle::RandomExpr gen(3);
  for (int i = 0; i < 500; ++i) {
    const Expr built = gen.make(3);
    const Expr e1 = parse(to_string(built));
    const Expr e2 = parse(to_string(e1));
    ASSERT_EQ(e1, e2) << to_string(built);
    const double t = gen.uniform(-1.0, 1.0);
    try {
      EXPECT_NEAR(eval(e1, t), eval(built, t), 1e-12 * std::max(1.0, std::abs(eval(built, t))));
    } catch (const DomainError&) {
    }
  }
}

TEST(ExprSubstitute, ShiftsTheVariable) {
  const Expr e = substitute(parse("t^2 + sin(t)"), parse("t + 2"));
  EXPECT_DOUBLE_EQ(eval(e, 1.0), 9.0 + std::sin(3.0));
  EXPECT_TRUE(substitute(parse("3"), parse("t")).is_constant());
}

TEST(ExprConcurrency, SharedTreesEvaluateInParallel) {
  const Expr e = parse("16/sqrt((15*sin(pi/2*t)^2+1)^3)");
  const Expr d = differentiate(e);
  std::vector<double> results(8);
  std::vector<std::thread> threads;
  for (int k = 0; k < 8; ++k) {
    threads.emplace_back([&, k] {
      double sum = 0.0;
      for (int i = 0; i < 10000; ++i) sum += eval(e, 3.0 + i * 1e-4) + eval(d, 3.0 + i * 1e-4);
      results[k] = sum;
    });
  }
  for (auto& th : threads) th.join();
  for (double r : results) EXPECT_EQ(r, results[0]);
}
