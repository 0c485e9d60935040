#include "normgeom/measures.hpp"

#include <algorithm>
#include <cmath>

#include "normgeom/errors.hpp"
#include "normgeom/quadrature.hpp"

namespace normgeom {

namespace {

// Integrals of curves that are points up to rounding cannot meet a relative
// tolerance; anything below this is treated as zero.
double absolute_floor(const UnitBall& b) { return 1e-14 * b.diameter() * b.diameter(); }

}  // namespace

double dual_length(const AdmissibleCurve& curve) {
  const UnitBall& b = curve.ball();
  return integrate_piecewise(
      [&](std::size_t i, double t) {
        return curve.radius_at(i, t) * cross(b.u(i, t), b.u_prime(i, t));
      },
      b.breakpoints(), b.quadrature(), absolute_floor(b));
}

double mixed_area(const AdmissibleCurve& c1, const AdmissibleCurve& c2) {
  if (!same_ball(c1.ball(), c2.ball())) {
    throw Error(ErrorCode::MismatchedBalls, "mixed area of curves on different balls");
  }
  const UnitBall& b = c2.ball();
  // A(c1 + p, c2) = A(c1, c2) for closed c2; measuring c1 from its basepoint
  // keeps the integrand free of the translation.
  const Vec2 origin = c1.basepoint();
  return 0.5 * integrate_piecewise(
                   [&](std::size_t i, double t) {
                     return cross(c1.gamma(i, t) - origin, c2.gamma_prime(i, t));
                   },
                   b.breakpoints(), b.quadrature(), absolute_floor(b));
}

double signed_area(const AdmissibleCurve& curve) { return mixed_area(curve, curve); }

double mean_width(const AdmissibleCurve& curve) {
  return dual_length(curve) / ball_area(curve.ball());
}

double support_value(const AdmissibleCurve& curve, std::size_t piece, double t) {
  return cross(curve.gamma(piece, t), dual_point(curve.ball(), piece, t).v);
}

double support_value(const AdmissibleCurve& curve, double t, Side side) {
  const std::size_t i = curve.ball().locate(t, side);
  return support_value(curve, i, t);
}

WidthProfile width_profile(const AdmissibleCurve& curve) {
  const UnitBall& b = curve.ball();
  // The profile is translation invariant; measuring from the basepoint keeps
  // the two brackets small.
  const Vec2 origin = curve.basepoint();
  WidthProfile out;
  for (std::size_t i = 0; i < b.half_count(); ++i) {
    const std::size_t j = b.antipode(i);
    const double shift = b.antipodal_shift(i);
    for (double t : b.sample_parameters(i)) {
      const double near = cross(curve.gamma(i, t) - origin, dual_point(b, i, t).v);
      const double far =
          cross(curve.gamma(j, t + shift) - origin, dual_point(b, j, t + shift).v);
      out.t.push_back(t);
      out.width.push_back(near + far);
    }
  }
  const auto [lo, hi] = std::minmax_element(out.width.begin(), out.width.end());
  out.min = *lo;
  out.max = *hi;
  return out;
}

double predicate_scale(const AdmissibleCurve& curve) {
  return std::max(curve.diameter(), 1e-6 * norm(curve.basepoint()));
}

ConstantWidth is_constant_width(const AdmissibleCurve& curve, double tol) {
  const WidthProfile profile = width_profile(curve);
  ConstantWidth out;
  double sum = 0.0;
  for (double w : profile.width) sum += w;
  out.width = sum / static_cast<double>(profile.width.size());
  for (std::size_t k = 0; k < profile.width.size(); ++k) {
    const double dev = std::abs(profile.width[k] - out.width);
    if (dev > out.spread) {
      out.spread = dev;
      out.witness = profile.t[k];
    }
  }
  out.constant = profile.max - profile.min <= tol * predicate_scale(curve);
  return out;
}

namespace {

std::vector<Vec2> midpoint_offsets(const AdmissibleCurve& curve) {
  const UnitBall& b = curve.ball();
  const Vec2 origin = curve.basepoint();
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < b.half_count(); ++i) {
    const std::size_t j = b.antipode(i);
    const double shift = b.antipodal_shift(i);
    for (double t : b.sample_parameters(i)) {
      out.push_back(0.5 * ((curve.gamma(i, t) - origin) + (curve.gamma(j, t + shift) - origin)));
    }
  }
  return out;
}

Vec2 mean_of(const std::vector<Vec2>& points) {
  Vec2 sum;
  for (const auto& p : points) sum += p;
  return sum / static_cast<double>(points.size());
}

}  // namespace

Vec2 midpoint_center(const AdmissibleCurve& curve) {
  return curve.basepoint() + mean_of(midpoint_offsets(curve));
}

double symmetry_defect(const AdmissibleCurve& curve) {
  const std::vector<Vec2> mids = midpoint_offsets(curve);
  const Vec2 center = mean_of(mids);
  double worst = 0.0;
  for (const auto& m : mids) worst = std::max(worst, 2.0 * norm(m - center));
  return worst;
}

bool is_symmetric(const AdmissibleCurve& curve, double tol) {
  return symmetry_defect(curve) <= tol * predicate_scale(curve);
}

MeasureReport measure(const AdmissibleCurve& curve) {
  MeasureReport r;
  r.dual_length = dual_length(curve);
  r.signed_area = signed_area(curve);
  const double area_u = ball_area(curve.ball());
  r.mean_width = r.dual_length / area_u;
  r.width_constant = r.dual_length / (2.0 * area_u);
  const WidthProfile profile = width_profile(curve);
  r.width_min = profile.min;
  r.width_max = profile.max;
  r.is_constant_width = is_constant_width(curve).constant;
  r.is_symmetric = is_symmetric(curve);
  return r;
}

}  // namespace normgeom
