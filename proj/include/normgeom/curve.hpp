#pragma once

// Admissible curves: closed curves with gamma'(t) = r(t) u'(t) on every piece
// of the ball's partition. r is the curvature radius; its sign follows the
// ball's counterclockwise orientation.

#include <cstddef>
#include <vector>

#include "normgeom/ball.hpp"
#include "normgeom/expr.hpp"
#include "normgeom/vec2.hpp"

namespace normgeom {

class AdmissibleCurve {
 public:
  const UnitBall& ball() const { return *ball_; }
  const BallPtr& ball_ptr() const { return ball_; }
  // One expression per ball piece, in the piece's own parameter.
  const std::vector<Expr>& radius() const { return radius_; }
  Vec2 basepoint() const { return basepoint_; }

  double radius_at(std::size_t piece, double t) const;
  double radius_at(double t, Side side = Side::Right) const;

  Vec2 gamma(std::size_t piece, double t) const;
  Vec2 gamma(double t, Side side = Side::Right) const;
  Vec2 gamma_prime(std::size_t piece, double t) const;

  // Bounding-box diagonal of the sampled curve.
  double diameter() const { return diameter_; }
  // Integral of |r| |u'|.
  double path_length() const { return path_length_; }
  double tol_close() const;
  // |gamma(t_0 + 2T) - gamma(t_0)| before closure was enforced.
  double closure_gap() const { return closure_gap_; }

  // Radii sampled at the check parameters of every piece.
  std::vector<double> sampled_radii() const;

 private:
  friend AdmissibleCurve assemble_curve(BallPtr ball, std::vector<Expr> radius, Vec2 basepoint);

  struct PieceCache {
    bool constant = false;
    double r = 0.0;
    Vec2 start;
    std::vector<double> panel_start;
    std::vector<Vec2> panel_value;
  };

  BallPtr ball_;
  std::vector<Expr> radius_;
  Vec2 basepoint_;
  std::vector<PieceCache> cache_;
  double diameter_ = 0.0;
  double path_length_ = 0.0;
  double closure_gap_ = 0.0;
};

// Builds the cumulative-integral cache without checking closure.
AdmissibleCurve assemble_curve(BallPtr ball, std::vector<Expr> radius, Vec2 basepoint);

// Throws NotClosed when the closure integral exceeds tol_close, and
// InvalidInput when the radius count does not match the pieces.
AdmissibleCurve curve_from_radius(BallPtr ball, std::vector<Expr> radius, Vec2 basepoint);

struct ExplicitPiece {
  Expr x;
  Expr y;
};

// Recovers r = <gamma', u'> / <u', u'> piecewise. Throws NotAdmissible when
// |gamma' - r u'| > tol |gamma'| at a check node, NotClosed when the pieces do
// not join up.
AdmissibleCurve curve_from_explicit(BallPtr ball, const std::vector<ExplicitPiece>& pieces,
                                    double tol = 1e-9);

// u itself: radius 1 on every piece, starting at u(t_0).
AdmissibleCurve unit_curve(BallPtr ball);

Vec2 evaluate_gamma(const AdmissibleCurve& curve, double t);

struct Convexity {
  bool convex = true;
  // +1 or -1 when convex.
  int sign = 1;
  // A parameter where r changes sign when not convex.
  double witness = 0.0;
};

Convexity is_convex(const AdmissibleCurve& curve);

// Smallest K >= 0 on the check grid with min r + K >= 0.
double convexifying_shift(const AdmissibleCurve& curve);

// gamma + k u.
AdmissibleCurve shifted(const AdmissibleCurve& curve, double k);
AdmissibleCurve translated(const AdmissibleCurve& curve, Vec2 offset);
// a * c1 + b * c2 (pointwise). Throws MismatchedBalls.
AdmissibleCurve combine(double a, const AdmissibleCurve& c1, double b, const AdmissibleCurve& c2);
AdmissibleCurve scaled(const AdmissibleCurve& curve, double c);

bool same_ball(const UnitBall& a, const UnitBall& b);

}  // namespace normgeom
