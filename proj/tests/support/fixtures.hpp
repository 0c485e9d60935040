#pragma once

// Curves shared by several test files.

#include <vector>

#include "normgeom/ball.hpp"
#include "normgeom/curve.hpp"
#include "normgeom/expr.hpp"

namespace fixture {

using namespace normgeom;

inline AdmissibleCurve mixed_curve() {
  return curve_from_radius(builtin_ball("mixed_example21"),
                           {parse("1"), parse("16/sqrt((15*cos(pi/2*t)^2+1)^3)"), parse("4"),
                            parse("16/sqrt((15*sin(pi/2*t)^2+1)^3)")},
                           {2, 1});
}

inline std::vector<ExplicitPiece> mixed_curve_explicit() {
  return {
      {parse("2-t"), parse("1+t")},
      {parse("16*cos(pi/2*t)/sqrt(15*cos(pi/2*t)^2+1) + 1"),
       parse("sin(pi/2*t)/sqrt(15*cos(pi/2*t)^2+1) + 1")},
      {parse("-11+4*t"), parse("9-4*t")},
      {parse("cos(pi/2*t)/sqrt(15*sin(pi/2*t)^2+1) + 1"),
       parse("16*sin(pi/2*t)/sqrt(15*sin(pi/2*t)^2+1) + 1")},
  };
}

// The axis-parallel rectangle [-a, a] x [-b, b] on the square ball.
inline AdmissibleCurve rectangle(double a, double b, Vec2 offset = {}) {
  const Expr ea = Expr::number(a);
  const Expr eb = Expr::number(b);
  return curve_from_radius(builtin_ball("square"), {eb, ea, eb, ea}, Vec2{a, -b} + offset);
}

inline AdmissibleCurve multiple(const BallPtr& ball, double c, Vec2 offset = {}) {
  const std::vector<Expr> radius(ball->piece_count(), Expr::number(c));
  return curve_from_radius(ball, radius, c * ball->u(ball->start()) + offset);
}

}  // namespace fixture
