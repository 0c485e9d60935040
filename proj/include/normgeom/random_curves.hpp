#pragma once

// Seeded generators for balls, admissible curves of the special classes and
// convex polygons. Identical seeds give identical objects.

#include <cstdint>
#include <random>
#include <string>

#include "normgeom/curve.hpp"
#include "normgeom/polygon.hpp"

namespace normgeom {

class CurveGenerator {
 public:
  explicit CurveGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);

  // A smooth random function of t, built as text and parsed.
  Expr smooth_function(double t0, double t1);

  // One of the four builtin balls, optionally mapped by a random linear map
  // with positive determinant.
  BallPtr ball(int index, bool distort);
  std::string ball_name(int index) const;

  // Closed curve with a generic (sign-changing) radius.
  AdmissibleCurve closed_curve(const BallPtr& ball);
  // Positively convex curve, randomly translated.
  AdmissibleCurve convex_curve(const BallPtr& ball);
  // Convex curve with r(t + T) = r(t): symmetric about its centre.
  AdmissibleCurve symmetric_convex_curve(const BallPtr& ball);
  // Convex curve with r(t) + r(t + T) constant: constant width.
  AdmissibleCurve constant_width_convex_curve(const BallPtr& ball);
  // c u + p for random c > 0 and translation p.
  AdmissibleCurve ball_multiple(const BallPtr& ball);
  // Symmetric about the origin, zero dual length.
  AdmissibleCurve zero_symmetric_curve(const BallPtr& ball);
  // Constant width, zero dual length.
  AdmissibleCurve zero_constant_width_curve(const BallPtr& ball);

  // Vertices at sorted random angles on a random ellipse, translated.
  Polygon convex_polygon(int vertices);

 private:
  std::vector<Expr> symmetric_radius(const BallPtr& ball);
  std::vector<Expr> antisymmetric_closed_radius(const BallPtr& ball);
  Vec2 random_point(double extent);

  std::mt19937_64 rng_;
};

}  // namespace normgeom
