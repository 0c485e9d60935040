#pragma once

#include <string>
#include <vector>

#include "normgeom/curve.hpp"
#include "normgeom/polygon.hpp"

namespace normgeom {

inline constexpr double kInequalityTol = 1e-9;
inline constexpr double kIdentityTol = 1e-8;
inline constexpr double kEqualityTol = 1e-8;

// L*(gamma)^2 - 4 A(gamma) A(U); nonnegative for every admissible curve.
double minkowski_gap(const AdmissibleCurve& curve);

// True when the radius is constant to rel_tol, i.e. gamma is a translate of
// a multiple of u.
bool is_multiple_of_ball(const AdmissibleCurve& curve, double rel_tol = kEqualityTol);

struct IsoLedger {
  double L_star = 0.0;
  double A_U = 0.0;
  double A_gamma = 0.0;
  // Once-around area of the Wigner caustic (half of A_WC_raw).
  double A_WC = 0.0;
  // Signed area of the T-periodic caustic integrated over [t_0, t_0 + 2T].
  double A_WC_raw = 0.0;
  double A_CWMS = 0.0;
  // L*^2 / (4 A_U)
  double lhs = 0.0;
  double identity_residual = 0.0;
  double gap_sym = 0.0;
  double gap_cw = 0.0;
  double gap_busemann = 0.0;
  double minkowski_gap = 0.0;
  // max(|lhs|, |A_gamma|); inequality tolerances are kInequalityTol * scale.
  double scale = 0.0;

  bool symmetric = false;
  bool constant_width = false;
  bool multiple_of_ball = false;

  // Names of violated relations ("identity_residual", "gap_sym", ...).
  std::vector<std::string> violations;
};

// Throws NotConvexInput unless is_convex(curve) is Convex(+1).
IsoLedger iso_ledger(const AdmissibleCurve& curve);

// Fills the ledger from a given caustic and measure set without checking
// convexity or recomputing the decomposition.
IsoLedger ledger_from_parts(const AdmissibleCurve& curve, const AdmissibleCurve& wc,
                            const AdmissibleCurve& cwms);

struct LhuilierReport {
  Polygon K;
  Polygon K1;
  Polygon K1_0;
  double L_star = 0.0;
  // 2 A(u, K) in the ball K1_0; must agree with L_star.
  double L_star_mixed = 0.0;
  double A_K = 0.0;
  double A_K_shoelace = 0.0;
  double A_K1_0 = 0.0;
  // L*^2 / (4 A(K1_0)) - A(K)
  double gap = 0.0;
  double scale = 0.0;
  bool equality = false;
  bool violation = false;
};

// Embeds K as an admissible curve of the ball K1_0 (radius = length ratio of
// parallel edges, 0 where K has no parallel edge) and evaluates the weak
// Lhuilier inequality. Throws EmbeddingFailed if an edge of K has no parallel
// edge in K1_0.
LhuilierReport lhuilier_check(const Polygon& K);

}  // namespace normgeom
