#include "normgeom/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "normgeom/decomp.hpp"
#include "normgeom/errors.hpp"
#include "normgeom/measures.hpp"

namespace normgeom {

double minkowski_gap(const AdmissibleCurve& curve) {
  const double L = dual_length(curve);
  return L * L - 4.0 * signed_area(curve) * ball_area(curve.ball());
}

bool is_multiple_of_ball(const AdmissibleCurve& curve, double rel_tol) {
  const std::vector<double> radii = curve.sampled_radii();
  const auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
  const double size = std::max(std::abs(*lo), std::abs(*hi));
  return *hi - *lo <= rel_tol * size;
}

IsoLedger iso_ledger(const AdmissibleCurve& curve) {
  const Convexity convexity = is_convex(curve);
  if (!convexity.convex || convexity.sign != 1) {
    std::ostringstream msg;
    msg << "the isoperimetric ledger needs a positively convex curve";
    if (!convexity.convex) msg << " (radius changes sign near t=" << convexity.witness << ")";
    throw Error(ErrorCode::NotConvexInput, msg.str());
  }
  const DecompositionResult parts = decompose(curve);
  return ledger_from_parts(curve, parts.wc, parts.cwms);
}

IsoLedger ledger_from_parts(const AdmissibleCurve& curve, const AdmissibleCurve& wc,
                            const AdmissibleCurve& cwms) {
  IsoLedger ledger;
  ledger.L_star = dual_length(curve);
  ledger.A_U = ball_area(curve.ball());
  ledger.A_gamma = signed_area(curve);
  ledger.A_WC_raw = signed_area(wc);
  ledger.A_WC = 0.5 * ledger.A_WC_raw;
  ledger.A_CWMS = signed_area(cwms);
  ledger.lhs = ledger.L_star * ledger.L_star / (4.0 * ledger.A_U);
  ledger.identity_residual = ledger.lhs - (ledger.A_gamma - 2.0 * ledger.A_WC - ledger.A_CWMS);
  ledger.gap_sym = ledger.lhs - (ledger.A_gamma - ledger.A_CWMS);
  ledger.gap_cw = ledger.lhs - (ledger.A_gamma - 2.0 * ledger.A_WC);
  ledger.gap_busemann = ledger.lhs - ledger.A_gamma;
  ledger.minkowski_gap = ledger.L_star * ledger.L_star - 4.0 * ledger.A_gamma * ledger.A_U;
  ledger.scale = std::max(std::abs(ledger.lhs), std::abs(ledger.A_gamma));

  ledger.symmetric = is_symmetric(curve);
  ledger.constant_width = is_constant_width(curve).constant;
  ledger.multiple_of_ball = is_multiple_of_ball(curve);

  const double tol = kInequalityTol * ledger.scale;
  if (std::abs(ledger.identity_residual) > kIdentityTol * std::abs(ledger.lhs)) {
    ledger.violations.emplace_back("identity_residual");
  }
  if (ledger.gap_sym < -tol) ledger.violations.emplace_back("gap_sym");
  if (ledger.gap_cw < -tol) ledger.violations.emplace_back("gap_cw");
  if (ledger.gap_busemann < -tol) ledger.violations.emplace_back("gap_busemann");
  // The gap is a difference of squared lengths; its scale is 4 A_U times the
  // area scale.
  if (ledger.minkowski_gap < -tol * 4.0 * ledger.A_U) ledger.violations.emplace_back("minkowski_gap");
  return ledger;
}

LhuilierReport lhuilier_check(const Polygon& polygon) {
  LhuilierReport report;
  report.K = make_convex_polygon(polygon.vertices);
  const Polygon& K = report.K;
  report.K1 = circumscribed_parallel_polygon(K);
  report.K1_0 = symmetrize_polygon(report.K1);
  const BallPtr ball = polygon_ball(report.K1_0.vertices);

  const std::size_t pieces = ball->piece_count();
  const std::size_t edges = K.vertices.size();
  std::vector<Expr> radius(pieces, Expr::number(0.0));
  std::vector<int> matched(edges, 0);
  std::size_t first_piece = pieces;
  std::size_t first_edge = 0;
  for (std::size_t j = 0; j < pieces; ++j) {
    const Piece& p = ball->piece(j);
    const Vec2 d = p.p1() - p.p0();
    const Vec2 normal = Vec2{d.y, -d.x} / norm(d);
    for (std::size_t i = 0; i < edges; ++i) {
      const Vec2 n = edge_normal(K, i);
      if (dot(n, normal) > 0.0 && std::abs(cross(n, normal)) <= 1e-9) {
        radius[j] = Expr::number(edge_length(K, i) / norm(d));
        ++matched[i];
        if (first_piece == pieces) {
          first_piece = j;
          first_edge = i;
        }
      }
    }
  }
  for (std::size_t i = 0; i < edges; ++i) {
    if (matched[i] != 1) {
      throw Error(ErrorCode::EmbeddingFailed,
                  "edge " + std::to_string(i) + " of K has no unique parallel edge in K1_0");
    }
  }
  // Pieces before the first matched one have radius 0, so the curve starts at
  // the first vertex of that edge.
  const AdmissibleCurve curve = curve_from_radius(ball, radius, K.vertices[first_edge]);
  const AdmissibleCurve u = unit_curve(ball);

  report.L_star = dual_length(curve);
  report.L_star_mixed = 2.0 * mixed_area(u, curve);
  report.A_K = signed_area(curve);
  report.A_K_shoelace = polygon_area(K);
  report.A_K1_0 = ball_area(*ball);
  const double lhs = report.L_star * report.L_star / (4.0 * report.A_K1_0);
  report.gap = lhs - report.A_K;
  report.scale = std::max(lhs, report.A_K);
  report.equality = is_multiple_of_ball(curve);
  report.violation = report.gap < -kInequalityTol * report.scale;
  return report;
}

}  // namespace normgeom
