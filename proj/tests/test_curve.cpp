#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "normgeom/curve.hpp"
#include "normgeom/errors.hpp"
#include "normgeom/random_curves.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace normgeom;

namespace {

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

void expect_near(Vec2 a, Vec2 b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
}

}  // namespace

TEST(CurveConstruction, UnitRadiusTracesTheBall) {
  for (const auto& name : builtin_ball_names()) {
    const BallPtr ball = builtin_ball(name);
    const AdmissibleCurve curve = unit_curve(ball);
    for (double s = 0.0; s < 1.0; s += 0.037) {
      const double t = ball->start() + s * ball->period();
      expect_near(curve.gamma(t), ball->u(t), 1e-12);
    }
  }
}

TEST(CurveConstruction, ConstantRadiusScalesTheBall) {
  const BallPtr ball = builtin_ball("mixed_example21");
  const AdmissibleCurve curve = fixture::multiple(ball, 2.5, {1, -3});
  for (double t = 0.0; t < 4.0; t += 0.13) {
    expect_near(curve.gamma(t), 2.5 * ball->u(t) + Vec2{1, -3}, 1e-12);
  }
  EXPECT_LT(curve.closure_gap(), 1e-12);
}

TEST(CurveConstruction, ExampleMatchesClosedForm) {
  const AdmissibleCurve curve = fixture::mixed_curve();
  for (double t : {0.5, 1.5, 2.5, 3.5, 1.2, 3.9}) {
    expect_near(curve.gamma(t), oracle::mixed_curve_point(t), 1e-8);
  }
  expect_near(curve.gamma(0.0), {2, 1}, 1e-14);
  expect_near(curve.gamma(3.0), {1, -3}, 1e-8);
  expect_near(curve.gamma(1.0), {1, 2}, 1e-12);
  expect_near(curve.gamma(2.0), {-3, 1}, 1e-8);
}

TEST(CurveConstruction, EvaluationAgreesWithIndependentMarch) {
  const AdmissibleCurve curve = fixture::mixed_curve();
  const auto marched = oracle::march(curve, 4000);
  for (std::size_t k = 0; k < marched.size(); k += 97) {
    const double t = 4.0 * static_cast<double>(k) / static_cast<double>(marched.size());
    expect_near(curve.gamma(t), marched[k], 1e-9);
  }
}

TEST(CurveConstruction, DerivativeIsRadiusTimesTangent) {
  const AdmissibleCurve curve = fixture::mixed_curve();
  const UnitBall& ball = curve.ball();
  for (std::size_t i = 0; i < ball.piece_count(); ++i) {
    const double mid = 0.5 * (ball.piece(i).t0() + ball.piece(i).t1());
    const Vec2 exact = curve.gamma_prime(i, mid);
    const double h = 1e-5;
    const Vec2 fd = (curve.gamma(i, mid + h) - curve.gamma(i, mid - h)) / (2 * h);
    expect_near(exact, fd, 1e-6);
    expect_near(exact, curve.radius_at(i, mid) * ball.u_prime(i, mid), 1e-14);
  }
}

TEST(CurveConstruction, RejectsWrongRadiusCount) {
  EXPECT_EQ(error_of([] { curve_from_radius(builtin_ball("square"), {parse("1")}, {}); }),
            ErrorCode::InvalidInput);
}

TEST(CurveConstruction, RejectsNonClosingRadius) {
  const BallPtr ball = builtin_ball("euclidean");
  const std::vector<Expr> radius(4, parse("cos(pi/2*t)"));
  EXPECT_EQ(error_of([&] { curve_from_radius(ball, radius, {}); }), ErrorCode::NotClosed);
  const std::vector<Expr> square_radius{parse("1"), parse("2"), parse("1"), parse("1")};
  EXPECT_EQ(error_of([&] { curve_from_radius(builtin_ball("square"), square_radius, {}); }),
            ErrorCode::NotClosed);
}

TEST(CurveConstruction, ReportsRadiusDomainErrors) {
  const std::vector<Expr> radius(4, parse("log(t-1)"));
  EXPECT_THROW(curve_from_radius(builtin_ball("euclidean"), radius, {}), Error);
}

TEST(CurveExplicit, RecoversExampleRadius) {
  const AdmissibleCurve recovered =
      curve_from_explicit(builtin_ball("mixed_example21"), fixture::mixed_curve_explicit());
  const AdmissibleCurve reference = fixture::mixed_curve();
  const UnitBall& ball = reference.ball();
  for (std::size_t i = 0; i < ball.piece_count(); ++i) {
    for (double t : ball.sample_parameters(i)) {
      EXPECT_NEAR(recovered.radius_at(i, t), reference.radius_at(i, t), 1e-9);
      expect_near(recovered.gamma(i, t), reference.gamma(i, t), 1e-8);
    }
  }
}

TEST(CurveExplicit, ScaledBallHasConstantRadius) {
  const BallPtr ball = builtin_ball("euclidean");
  const std::vector<ExplicitPiece> pieces(4, {parse("3*cos(pi/2*t)"), parse("3*sin(pi/2*t)")});
  const AdmissibleCurve curve = curve_from_explicit(ball, pieces);
  for (double r : curve.sampled_radii()) EXPECT_NEAR(r, 3.0, 1e-12);
}

TEST(CurveExplicit, RejectsCurvesNotParallelToTheBall) {
  const BallPtr square = builtin_ball("square");
  // The square turned by 45 degrees has edges that are not parallel to any edge of the ball.
  const std::vector<ExplicitPiece> pieces{
      {parse("1-t"), parse("t")},
      {parse("1-t"), parse("2-t")},
      {parse("t-3"), parse("2-t")},
      {parse("t-3"), parse("t-4")},
  };
  EXPECT_EQ(error_of([&] { curve_from_explicit(square, pieces); }), ErrorCode::NotAdmissible);
}

TEST(CurveConvexity, Classification) {
  const Convexity example = is_convex(fixture::mixed_curve());
  EXPECT_TRUE(example.convex);
  EXPECT_EQ(example.sign, 1);

  const BallPtr euclid = builtin_ball("euclidean");
  const AdmissibleCurve wavy = curve_from_radius(euclid, std::vector<Expr>(4, parse("cos(pi*t)")), {});
  const Convexity c = is_convex(wavy);
  EXPECT_FALSE(c.convex);
  EXPECT_NEAR(std::cos(std::numbers::pi * c.witness), 0.0, 0.2);

  const AdmissibleCurve negative = fixture::multiple(euclid, -2.0);
  EXPECT_TRUE(is_convex(negative).convex);
  EXPECT_EQ(is_convex(negative).sign, -1);

  const AdmissibleCurve point = fixture::multiple(euclid, 0.0, {1, 1});
  EXPECT_TRUE(is_convex(point).convex);
  EXPECT_EQ(is_convex(point).sign, 1);
}

TEST(CurveConvexity, ShiftMakesCurvesConvex) {
  const BallPtr euclid = builtin_ball("euclidean");
  const AdmissibleCurve wavy = curve_from_radius(euclid, std::vector<Expr>(4, parse("cos(pi*t)")), {});
  const double k = convexifying_shift(wavy);
  EXPECT_NEAR(k, 1.0, 1e-12);
  EXPECT_TRUE(is_convex(shifted(wavy, k + 0.1)).convex);
  EXPECT_DOUBLE_EQ(convexifying_shift(fixture::mixed_curve()), 0.0);
}

TEST(CurveOperations, ShiftAddsTheBall) {
  const AdmissibleCurve base = fixture::mixed_curve();
  const AdmissibleCurve moved = shifted(base, 0.75);
  for (double t = 0.05; t < 4.0; t += 0.3) {
    expect_near(moved.gamma(t), base.gamma(t) + 0.75 * base.ball().u(t), 1e-10);
  }
}

TEST(CurveOperations, TranslateScaleAndCombine) {
  const AdmissibleCurve a = fixture::mixed_curve();
  const AdmissibleCurve b = fixture::multiple(a.ball_ptr(), 1.5, {0.5, 0.25});
  const AdmissibleCurve moved = translated(a, {3, -4});
  const AdmissibleCurve doubled = scaled(a, 2.0);
  const AdmissibleCurve mix = combine(2.0, a, -0.5, b);
  for (double t = 0.05; t < 4.0; t += 0.3) {
    expect_near(moved.gamma(t), a.gamma(t) + Vec2{3, -4}, 1e-12);
    expect_near(doubled.gamma(t), 2.0 * a.gamma(t), 1e-10);
    expect_near(mix.gamma(t), 2.0 * a.gamma(t) - 0.5 * b.gamma(t), 1e-10);
  }
}

TEST(CurveOperations, CombineRequiresTheSameBall) {
  const AdmissibleCurve a = fixture::multiple(builtin_ball("euclidean"), 1.0);
  const AdmissibleCurve b = fixture::multiple(builtin_ball("square"), 1.0);
  EXPECT_EQ(error_of([&] { combine(1.0, a, 1.0, b); }), ErrorCode::MismatchedBalls);
}

TEST(CurveOperations, SameBallComparesStructure) {
  EXPECT_TRUE(same_ball(*builtin_ball("square"), *builtin_ball("square")));
  EXPECT_FALSE(same_ball(*builtin_ball("square"), *builtin_ball("euclidean")));
}

TEST(CurveGeneratorClasses, GeneratedCurvesClose) {
  CurveGenerator gen(7);
  for (int index = 0; index < 4; ++index) {
    for (bool distort : {false, true}) {
      const BallPtr ball = gen.ball(index, distort);
      const AdmissibleCurve c = gen.closed_curve(ball);
      EXPECT_LT(c.closure_gap(), c.tol_close());
      EXPECT_TRUE(is_convex(gen.convex_curve(ball)).convex);
    }
  }
}
