#pragma once

// Independent reference computations used by the tests: polygon areas of
// densely sampled curves and finite differences.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "normgeom/curve.hpp"
#include "normgeom/expr.hpp"
#include "normgeom/vec2.hpp"

namespace oracle {

using normgeom::Vec2;

inline double shoelace(const std::vector<Vec2>& points) {
  double twice = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    twice += normgeom::cross(points[i], points[(i + 1) % points.size()]);
  }
  return 0.5 * twice;
}

inline double central_difference(const std::function<double(double)>& f, double t,
                                 double h = 1e-6) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Points of gamma obtained by integrating r u' step by step with a 4-point
// Gauss rule, bypassing the curve's own position cache.
inline std::vector<Vec2> march(const normgeom::AdmissibleCurve& curve, int total_points) {
  static constexpr std::array<double, 4> kNodes{-0.8611363115940526, -0.3399810435848563,
                                                0.3399810435848563, 0.8611363115940526};
  static constexpr std::array<double, 4> kWeights{0.3478548451374538, 0.6521451548625461,
                                                  0.6521451548625461, 0.3478548451374538};
  const auto& ball = curve.ball();
  const int per_piece = std::max(1, total_points / static_cast<int>(ball.piece_count()));
  std::vector<Vec2> points;
  Vec2 position = curve.basepoint();
  for (std::size_t i = 0; i < ball.piece_count(); ++i) {
    const auto& piece = ball.piece(i);
    const double h = (piece.t1() - piece.t0()) / per_piece;
    for (int k = 0; k < per_piece; ++k) {
      points.push_back(position);
      const double a = piece.t0() + k * h;
      Vec2 step;
      for (std::size_t q = 0; q < kNodes.size(); ++q) {
        const double s = a + 0.5 * h * (1.0 + kNodes[q]);
        step += normgeom::eval(curve.radius()[i], s) * piece.first_derivative(s) * kWeights[q];
      }
      position += 0.5 * h * step;
    }
  }
  return points;
}

inline double marched_area(const normgeom::AdmissibleCurve& curve, int total_points = 100000) {
  return shoelace(march(curve, total_points));
}

// Closed-form points of the test curve on the mixed_example21 ball.
inline Vec2 mixed_curve_point(double t) {
  const double c = std::cos(M_PI / 2 * t);
  const double s = std::sin(M_PI / 2 * t);
  if (t <= 1.0) return {2.0 - t, 1.0 + t};
  if (t <= 2.0) {
    const double d = std::sqrt(15.0 * c * c + 1.0);
    return {16.0 * c / d + 1.0, s / d + 1.0};
  }
  if (t <= 3.0) return {-11.0 + 4.0 * t, 9.0 - 4.0 * t};
  const double d = std::sqrt(15.0 * s * s + 1.0);
  return {c / d + 1.0, 16.0 * s / d + 1.0};
}

inline double mixed_curve_shoelace(int total_points = 100000) {
  std::vector<Vec2> points;
  for (int k = 0; k < total_points; ++k) points.push_back(mixed_curve_point(4.0 * k / total_points));
  return shoelace(points);
}

}  // namespace oracle
