#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "normgeom/errors.hpp"
#include "normgeom/measures.hpp"

namespace normgeom::app {

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr) + 0.0;
}

namespace {

void round_all(json& doc) {
  if (doc.is_number_float()) {
    doc = round12(doc.get<double>());
  } else if (doc.is_structured()) {
    for (auto& child : doc) round_all(child);
  }
}

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

json polygon_json(const Polygon& p) {
  json out = json::array();
  for (const auto& v : p.vertices) out.push_back(point_json(v));
  return out;
}

}  // namespace

std::string dump_report(const json& doc) {
  json copy = doc;
  round_all(copy);
  return copy.dump(2);
}

json ball_json(const UnitBall& ball) {
  json pieces = json::array();
  for (const auto& p : ball.pieces()) {
    json piece{{"kind", p.kind() == PieceKind::SmoothArc ? "arc" : "segment"},
               {"t0", p.t0()},
               {"t1", p.t1()}};
    if (p.kind() == PieceKind::SmoothArc) {
      piece["x"] = to_string(p.x());
      piece["y"] = to_string(p.y());
    } else {
      piece["p0"] = point_json(p.p0());
      piece["p1"] = point_json(p.p1());
    }
    pieces.push_back(piece);
  }
  return {{"T", ball.half_period()},
          {"start", ball.start()},
          {"area", ball.area()},
          {"diameter", ball.diameter()},
          {"pieces", pieces}};
}

json curve_json(const AdmissibleCurve& curve, int samples_per_piece) {
  const UnitBall& b = curve.ball();
  json radius = json::array();
  json samples = json::array();
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    const Piece& p = b.piece(i);
    radius.push_back({{"piece", i}, {"expr", to_string(curve.radius()[i])}});
    const bool last = i + 1 == b.piece_count();
    const int count = samples_per_piece + (last ? 1 : 0);
    for (int k = 0; k < count; ++k) {
      const double t = p.t0() + (p.t1() - p.t0()) * k / samples_per_piece;
      const Vec2 g = curve.gamma(i, t);
      samples.push_back({{"t", t}, {"r", curve.radius_at(i, t)}, {"x", g.x}, {"y", g.y}});
    }
  }
  return {{"basepoint", point_json(curve.basepoint())},
          {"diameter", curve.diameter()},
          {"radius", radius},
          {"samples", samples}};
}

json ledger_json(const IsoLedger& l) {
  return {{"L_star", l.L_star},
          {"A_U", l.A_U},
          {"A_gamma", l.A_gamma},
          {"A_WC_once", l.A_WC},
          {"A_WC_raw", l.A_WC_raw},
          {"A_CWMS", l.A_CWMS},
          {"lhs", l.lhs},
          {"identity_residual", l.identity_residual},
          {"gap_sym", l.gap_sym},
          {"gap_cw", l.gap_cw},
          {"gap_busemann", l.gap_busemann},
          {"minkowski_gap", l.minkowski_gap},
          {"scale", l.scale},
          {"tol_identity", kIdentityTol * std::abs(l.lhs)},
          {"tol_inequality", kInequalityTol * l.scale},
          {"symmetric", l.symmetric},
          {"constant_width", l.constant_width},
          {"multiple_of_ball", l.multiple_of_ball},
          {"violations", l.violations}};
}

json analyze_json(const AdmissibleCurve& curve) {
  const MeasureReport m = measure(curve);
  const Convexity c = is_convex(curve);
  json convexity{{"convex", c.convex}};
  if (c.convex) {
    convexity["sign"] = c.sign;
  } else {
    convexity["witness"] = c.witness;
  }
  json out{{"ball", {{"T", curve.ball().half_period()},
                     {"pieces", curve.ball().piece_count()},
                     {"area", curve.ball().area()}}},
           {"curve", {{"basepoint", point_json(curve.basepoint())},
                      {"diameter", curve.diameter()},
                      {"closure_gap", curve.closure_gap()},
                      {"tol_close", curve.tol_close()},
                      {"convexity", convexity}}},
           {"measures", {{"dual_length", m.dual_length},
                         {"signed_area", m.signed_area},
                         {"mean_width", m.mean_width},
                         {"width_constant", m.width_constant},
                         {"width_min", m.width_min},
                         {"width_max", m.width_max},
                         {"is_symmetric", m.is_symmetric},
                         {"is_constant_width", m.is_constant_width},
                         {"tol_predicate", kPredicateTol * predicate_scale(curve)}}}};
  json violations = json::array();
  if (c.convex && c.sign == 1) {
    const IsoLedger ledger = iso_ledger(curve);
    out["ledger"] = ledger_json(ledger);
    for (const auto& v : ledger.violations) violations.push_back(v);
  } else {
    out["ledger"] = nullptr;
    out["ledger_skipped"] = "the isoperimetric ledger needs a positively convex curve";
    const double gap = minkowski_gap(curve);
    const double scale = std::max(m.dual_length * m.dual_length,
                                  4.0 * std::abs(m.signed_area) * curve.ball().area());
    out["minkowski_gap"] = {{"value", gap}, {"tol", kInequalityTol * scale}};
    if (gap < -kInequalityTol * scale) violations.push_back("minkowski_gap");
  }
  out["violations"] = violations;
  return out;
}

json decompose_json(const AdmissibleCurve& curve, const DecompositionResult& parts) {
  constexpr int kSamples = 16;
  json wc = curve_json(parts.wc, kSamples);
  const double wc_raw = signed_area(parts.wc);
  wc["signed_area_raw"] = wc_raw;
  wc["signed_area_once"] = 0.5 * wc_raw;
  wc["note"] = "T-periodic: the raw area covers the loop twice";
  json cw = curve_json(parts.cwms, kSamples);
  cw["signed_area"] = signed_area(parts.cwms);
  return {{"mean_width", parts.mean_width},
          {"residual", parts.residual},
          {"tol_close", curve.tol_close()},
          {"gamma", curve_json(curve, kSamples)},
          {"wigner_caustic", wc},
          {"cwms", cw}};
}

json lhuilier_json(const LhuilierReport& r) {
  return {{"K", polygon_json(r.K)},
          {"K1", polygon_json(r.K1)},
          {"K1_0", polygon_json(r.K1_0)},
          {"L_star", r.L_star},
          {"L_star_mixed", r.L_star_mixed},
          {"A_K", r.A_K},
          {"A_K_shoelace", r.A_K_shoelace},
          {"A_K1_0", r.A_K1_0},
          {"gap", r.gap},
          {"scale", r.scale},
          {"tol", kInequalityTol * r.scale},
          {"equality", r.equality},
          {"violation", r.violation}};
}

json corpus_json(const CorpusReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.check},
                      {"evaluated", c.evaluated},
                      {"failed", c.failed},
                      {"worst_ratio", c.worst_ratio}});
  }
  json violations = json::array();
  for (const auto& v : r.violations) {
    json item{{"instance", v.instance}, {"check", v.check}, {"value", v.value}, {"tol", v.tol}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    violations.push_back(item);
  }
  json instances = json::array();
  for (const auto& inst : r.instances) {
    instances.push_back({{"index", inst.index},
                         {"ball", inst.ball},
                         {"distorted", inst.distorted},
                         {"kind", kind_name(inst.kind)}});
  }
  return {{"seed", r.config.seed},
          {"n", r.config.n},
          {"instances", instances},
          {"checks", checks},
          {"violation_count", r.violations.size()},
          {"violations", violations}};
}

}  // namespace normgeom::app
