#include "normgeom/random_curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "normgeom/measures.hpp"

namespace normgeom {

namespace {

constexpr std::array<const char*, 4> kBallNames{"euclidean", "square", "regular_2k_gon",
                                                "mixed_example21"};

std::string literal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "(%.17g)", v);
  return buf;
}

Vec2 chord(const UnitBall& b, std::size_t i) {
  const Piece& p = b.piece(i);
  return p.point(p.t1()) - p.point(p.t0());
}

// Net displacement of the curve with basepoint 0 after one period.
Vec2 closure_vector(const BallPtr& ball, const std::vector<Expr>& radius) {
  const AdmissibleCurve c = assemble_curve(ball, radius, {});
  const std::size_t last = ball->piece_count() - 1;
  return c.gamma(last, ball->piece(last).t1());
}

// Pair of pieces among [0, limit) with the least parallel chords.
std::pair<std::size_t, std::size_t> best_pair(const UnitBall& b, std::size_t limit) {
  std::pair<std::size_t, std::size_t> best{0, 1};
  double best_cross = -1.0;
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = i + 1; j < limit; ++j) {
      const double c = std::abs(cross(chord(b, i), chord(b, j)));
      if (c > best_cross) {
        best_cross = c;
        best = {i, j};
      }
    }
  }
  return best;
}

// Solves a ca + b cb = rhs.
std::pair<double, double> solve2(Vec2 ca, Vec2 cb, Vec2 rhs) {
  const double det = cross(ca, cb);
  return {cross(rhs, cb) / det, cross(ca, rhs) / det};
}

}  // namespace

double CurveGenerator::uniform(double lo, double hi) {
  const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

int CurveGenerator::uniform_int(int lo, int hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % range);
}

Vec2 CurveGenerator::random_point(double extent) {
  return {uniform(-extent, extent), uniform(-extent, extent)};
}

Expr CurveGenerator::smooth_function(double t0, double t1) {
  const double mid = 0.5 * (t0 + t1);
  const std::string text = literal(uniform(-1.0, 1.0)) + " + " + literal(uniform(-1.0, 1.0)) +
                           "*sin(" + literal(uniform(0.5, 3.0)) + "*t + " +
                           literal(uniform(0.0, 2.0 * std::numbers::pi)) + ") + " +
                           literal(uniform(-0.5, 0.5)) + "*cos(" + literal(uniform(0.5, 3.0)) +
                           "*t) + " + literal(uniform(-0.5, 0.5)) + "*(t - " + literal(mid) +
                           ")^2";
  return parse(text);
}

std::string CurveGenerator::ball_name(int index) const {
  return kBallNames[static_cast<std::size_t>(index) % kBallNames.size()];
}

BallPtr CurveGenerator::ball(int index, bool distort) {
  BallPtr base = builtin_ball(ball_name(index));
  if (!distort) return base;
  const double theta = uniform(0.0, 2.0 * std::numbers::pi);
  const double s1 = uniform(0.5, 2.0);
  const double s2 = uniform(0.5, 2.0);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return base->transformed(c * s1, -s * s2, s * s1, c * s2);
}

AdmissibleCurve CurveGenerator::closed_curve(const BallPtr& ball) {
  std::vector<Expr> radius;
  for (const auto& p : ball->pieces()) radius.push_back(smooth_function(p.t0(), p.t1()));
  const Vec2 gap = closure_vector(ball, radius);
  const auto [a, b] = best_pair(*ball, ball->piece_count());
  const auto [alpha, beta] = solve2(chord(*ball, a), chord(*ball, b), -gap);
  radius[a] = radius[a] + Expr::number(alpha);
  radius[b] = radius[b] + Expr::number(beta);
  return curve_from_radius(ball, std::move(radius), random_point(2.0));
}

AdmissibleCurve CurveGenerator::convex_curve(const BallPtr& ball) {
  const AdmissibleCurve raw = closed_curve(ball);
  const double k = convexifying_shift(raw) + uniform(0.1, 1.5);
  return shifted(raw, k);
}

std::vector<Expr> CurveGenerator::symmetric_radius(const BallPtr& ball) {
  const std::size_t n = ball->half_count();
  std::vector<Expr> radius(ball->piece_count());
  const Expr back = Expr::var() - Expr::number(ball->half_period());
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& p = ball->piece(i);
    radius[i] = smooth_function(p.t0(), p.t1());
    radius[i + n] = substitute(radius[i], back);
  }
  return radius;
}

std::vector<Expr> CurveGenerator::antisymmetric_closed_radius(const BallPtr& ball) {
  const std::size_t n = ball->half_count();
  std::vector<Expr> radius(ball->piece_count());
  const Expr back = Expr::var() - Expr::number(ball->half_period());
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& p = ball->piece(i);
    radius[i] = smooth_function(p.t0(), p.t1());
  }
  auto mirror = [&] {
    for (std::size_t i = 0; i < n; ++i) radius[i + n] = -substitute(radius[i], back);
  };
  mirror();
  // Adding c to piece i and -c to its antipode moves the endpoint by 2c chord_i.
  const Vec2 gap = closure_vector(ball, radius);
  const auto [a, b] = best_pair(*ball, n);
  const auto [alpha, beta] = solve2(2.0 * chord(*ball, a), 2.0 * chord(*ball, b), -gap);
  radius[a] = radius[a] + Expr::number(alpha);
  radius[b] = radius[b] + Expr::number(beta);
  mirror();
  return radius;
}

AdmissibleCurve CurveGenerator::symmetric_convex_curve(const BallPtr& ball) {
  const AdmissibleCurve raw = assemble_curve(ball, symmetric_radius(ball), random_point(2.0));
  const double k = convexifying_shift(raw) + uniform(0.1, 1.5);
  return shifted(raw, k);
}

AdmissibleCurve CurveGenerator::constant_width_convex_curve(const BallPtr& ball) {
  std::vector<Expr> radius = antisymmetric_closed_radius(ball);
  const AdmissibleCurve raw = assemble_curve(ball, radius, {});
  double peak = 0.0;
  for (double r : raw.sampled_radii()) peak = std::max(peak, std::abs(r));
  const Expr c = Expr::number(peak + uniform(0.1, 1.5));
  for (auto& r : radius) r = r + c;
  return curve_from_radius(ball, std::move(radius), random_point(2.0));
}

AdmissibleCurve CurveGenerator::ball_multiple(const BallPtr& ball) {
  const std::vector<Expr> radius(ball->piece_count(), Expr::number(uniform(0.3, 3.0)));
  return curve_from_radius(ball, radius, random_point(2.0));
}

AdmissibleCurve CurveGenerator::zero_symmetric_curve(const BallPtr& ball) {
  std::vector<Expr> radius = symmetric_radius(ball);
  const double lambda = dual_length(assemble_curve(ball, radius, {})) / (2.0 * ball_area(*ball));
  for (auto& r : radius) r = r - Expr::number(lambda);
  const AdmissibleCurve raw = curve_from_radius(ball, std::move(radius), {});
  return translated(raw, -midpoint_center(raw));
}

AdmissibleCurve CurveGenerator::zero_constant_width_curve(const BallPtr& ball) {
  return curve_from_radius(ball, antisymmetric_closed_radius(ball), random_point(2.0));
}

Polygon CurveGenerator::convex_polygon(int vertices) {
  std::vector<double> angles;
  for (;;) {
    angles.clear();
    for (int i = 0; i < vertices; ++i) angles.push_back(uniform(0.0, 2.0 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    double min_gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) {
      min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
    }
    if (min_gap > 0.02) break;
  }
  const double a = uniform(0.5, 2.0);
  const double b = uniform(0.5, 2.0);
  const double rot = uniform(0.0, 2.0 * std::numbers::pi);
  const Vec2 offset = random_point(0.5);
  std::vector<Vec2> pts;
  for (double phi : angles) {
    const Vec2 e{a * std::cos(phi), b * std::sin(phi)};
    pts.push_back(Vec2{std::cos(rot) * e.x - std::sin(rot) * e.y,
                       std::sin(rot) * e.x + std::cos(rot) * e.y} +
                  offset);
  }
  return make_convex_polygon(std::move(pts));
}

}  // namespace normgeom
