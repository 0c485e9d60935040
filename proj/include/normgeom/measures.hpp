#pragma once

#include <optional>

#include "normgeom/curve.hpp"

namespace normgeom {

// Signed dual length: the integral of r [u, u'] over [t_0, t_0 + 2T].
double dual_length(const AdmissibleCurve& curve);

// A(c1, c2) = 1/2 integral of [c1, c2']. Throws MismatchedBalls.
double mixed_area(const AdmissibleCurve& c1, const AdmissibleCurve& c2);

// A(c) = A(c, c).
double signed_area(const AdmissibleCurve& curve);

// dual_length / A(U).
double mean_width(const AdmissibleCurve& curve);

// [gamma(t), v(t)].
double support_value(const AdmissibleCurve& curve, double t, Side side = Side::Right);
double support_value(const AdmissibleCurve& curve, std::size_t piece, double t);

struct WidthProfile {
  // [gamma, v](t) + [gamma, v](t + T) sampled over the first half of the
  // partition, at check nodes and one-sided piece endpoints.
  std::vector<double> t;
  std::vector<double> width;
  double min = 0.0;
  double max = 0.0;
};

WidthProfile width_profile(const AdmissibleCurve& curve);

struct ConstantWidth {
  bool constant = false;
  // Mean of the sampled profile; the width when constant.
  double width = 0.0;
  // Largest deviation from the mean, and where it occurs.
  double spread = 0.0;
  double witness = 0.0;
};

inline constexpr double kPredicateTol = 1e-8;

// Length scale of the width and symmetry predicates: the curve's diameter,
// bounded below relative to its distance from the origin.
double predicate_scale(const AdmissibleCurve& curve);

// Constant when max - min of the profile is below tol * diameter.
ConstantWidth is_constant_width(const AdmissibleCurve& curve, double tol = kPredicateTol);

// Symmetric about some centre: the midpoint curve (gamma(t) + gamma(t+T)) / 2
// stays within tol * diameter / 2 of its mean.
bool is_symmetric(const AdmissibleCurve& curve, double tol = kPredicateTol);

// max over t of |gamma(t) + gamma(t + T) - 2 c| with c the midpoint centre.
double symmetry_defect(const AdmissibleCurve& curve);

// Centre of symmetry candidate: mean of the sampled midpoints.
Vec2 midpoint_center(const AdmissibleCurve& curve);

struct MeasureReport {
  double dual_length = 0.0;
  double signed_area = 0.0;
  double mean_width = 0.0;
  // L* / (2 A(U)); equals the width constant for constant-width curves.
  double width_constant = 0.0;
  double width_min = 0.0;
  double width_max = 0.0;
  bool is_symmetric = false;
  bool is_constant_width = false;
};

MeasureReport measure(const AdmissibleCurve& curve);

}  // namespace normgeom
