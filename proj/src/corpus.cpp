#include "normgeom/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "normgeom/decomp.hpp"
#include "normgeom/errors.hpp"
#include "normgeom/inequalities.hpp"
#include "normgeom/measures.hpp"
#include "normgeom/random_curves.hpp"

namespace normgeom {

std::string kind_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::Generic: return "generic";
    case CurveKind::Symmetric: return "symmetric";
    case CurveKind::ConstantWidth: return "constant_width";
    case CurveKind::BallMultiple: return "ball_multiple";
  }
  return "unknown";
}

namespace {

class Recorder {
 public:
  explicit Recorder(CorpusReport& report) : report_(report) {}

  void check(int instance, const std::string& name, double value, double tol) {
    auto [it, inserted] = index_.try_emplace(name, report_.checks.size());
    if (inserted) report_.checks.push_back({name, 0, 0, 0.0});
    CheckSummary& summary = report_.checks[it->second];
    ++summary.evaluated;
    const double ratio = tol > 0.0 ? value / tol : (value > 0.0 ? INFINITY : 0.0);
    summary.worst_ratio = std::max(summary.worst_ratio, ratio);
    if (!(value <= tol)) {
      ++summary.failed;
      report_.violations.push_back({instance, name, value, tol, {}});
    }
  }

  void failure(int instance, const std::string& name, const std::string& what) {
    auto [it, inserted] = index_.try_emplace(name, report_.checks.size());
    if (inserted) report_.checks.push_back({name, 0, 0, 0.0});
    ++report_.checks[it->second].evaluated;
    ++report_.checks[it->second].failed;
    report_.violations.push_back({instance, name, NAN, 0.0, what});
  }

 private:
  CorpusReport& report_;
  std::map<std::string, std::size_t> index_;
};

AdmissibleCurve make_curve(CurveGenerator& gen, const BallPtr& ball, CurveKind kind) {
  switch (kind) {
    case CurveKind::Generic: return gen.convex_curve(ball);
    case CurveKind::Symmetric: return gen.symmetric_convex_curve(ball);
    case CurveKind::ConstantWidth: return gen.constant_width_convex_curve(ball);
    case CurveKind::BallMultiple: return gen.ball_multiple(ball);
  }
  throw Error(ErrorCode::InvalidInput, "unknown curve kind");
}

void check_instance(int k, CurveGenerator& gen, const BallPtr& ball, CurveKind kind,
                    bool fault, Recorder& rec) {
  const AdmissibleCurve curve = make_curve(gen, ball, kind);
  const AdmissibleCurve u = unit_curve(ball);
  const double w = mean_width(curve);
  const AdmissibleCurve wc = wigner_caustic(curve);
  const AdmissibleCurve cw = cwms_with_width(curve, fault ? -w : w);
  const IsoLedger ledger = ledger_from_parts(curve, wc, cw);
  const double tol = kInequalityTol * ledger.scale;

  rec.check(k, "identity_residual", std::abs(ledger.identity_residual),
            kIdentityTol * std::abs(ledger.lhs));
  rec.check(k, "gap_sym", -ledger.gap_sym, tol);
  rec.check(k, "gap_cw", -ledger.gap_cw, tol);
  rec.check(k, "gap_busemann", -ledger.gap_busemann, tol);
  rec.check(k, "minkowski_gap", -ledger.minkowski_gap, tol * 4.0 * ledger.A_U);

  const double eq_tol = kEqualityTol * ledger.scale;
  if (kind == CurveKind::Symmetric) rec.check(k, "equality_sym", std::abs(ledger.gap_sym), eq_tol);
  if (kind == CurveKind::ConstantWidth) rec.check(k, "equality_cw", std::abs(ledger.gap_cw), eq_tol);
  if (kind == CurveKind::BallMultiple) {
    rec.check(k, "equality_multiple_sym", std::abs(ledger.gap_sym), eq_tol);
    rec.check(k, "equality_multiple_cw", std::abs(ledger.gap_cw), eq_tol);
    rec.check(k, "equality_multiple_busemann", std::abs(ledger.gap_busemann), eq_tol);
  }

  const double length_scale = predicate_scale(curve);
  const WidthProfile wc_profile = width_profile(wc);
  rec.check(k, "wc_constant_width", wc_profile.max - wc_profile.min, kPredicateTol * length_scale);
  rec.check(k, "wc_width_zero", std::max(std::abs(wc_profile.max), std::abs(wc_profile.min)),
            kPredicateTol * length_scale);
  const double dual_tol = kPredicateTol * std::abs(ledger.L_star);
  rec.check(k, "wc_dual_length", std::abs(dual_length(wc)), dual_tol);
  rec.check(k, "cwms_symmetric", symmetry_defect(cw), kPredicateTol * length_scale);
  rec.check(k, "cwms_dual_length", std::abs(dual_length(cw)), dual_tol);

  rec.check(k, "orthogonal_wc_cwms", std::abs(mixed_area(wc, cw)), tol);
  const double u_tol = kInequalityTol * std::sqrt(ledger.A_U * ledger.scale);
  rec.check(k, "orthogonal_u_wc", std::abs(mixed_area(u, wc)), u_tol);
  rec.check(k, "orthogonal_u_cwms", std::abs(mixed_area(u, cw)), u_tol);

  rec.check(k, "sign_wc", ledger.A_WC_raw, tol);
  rec.check(k, "sign_cwms", ledger.A_CWMS, tol);

  rec.check(k, "dual_length_mixed", std::abs(ledger.L_star - 2.0 * mixed_area(u, curve)),
            kInequalityTol * std::abs(ledger.L_star));

  double residual = 0.0;
  for (std::size_t i = 0; i < ball->piece_count(); ++i) {
    for (double t : ball->sample_parameters(i)) {
      const Vec2 rebuilt = wc.gamma(i, t) + cw.gamma(i, t) + 0.5 * w * ball->u(i, t);
      residual = std::max(residual, norm(curve.gamma(i, t) - rebuilt));
    }
  }
  rec.check(k, "decomposition_residual", residual, curve.tol_close());

  const AdmissibleCurve loose = gen.closed_curve(ball);
  const double L = dual_length(loose);
  const double A = signed_area(loose);
  const double mink_scale = std::max(L * L, 4.0 * std::abs(A) * ledger.A_U);
  rec.check(k, "minkowski_gap_nonconvex", -(L * L - 4.0 * A * ledger.A_U),
            kInequalityTol * mink_scale);

  const AdmissibleCurve sigma = gen.zero_symmetric_curve(ball);
  const AdmissibleCurve kappa = gen.zero_constant_width_curve(ball);
  rec.check(k, "orthogonal_pair", std::abs(mixed_area(sigma, kappa)),
            kInequalityTol * sigma.diameter() * kappa.diameter());
}

}  // namespace

CorpusReport run_corpus(const CorpusConfig& config) {
  if (config.n < 0) throw Error(ErrorCode::InvalidInput, "corpus size must be >= 0");
  CorpusReport report;
  report.config = config;
  Recorder rec(report);
  CurveGenerator gen(config.seed);
  for (int k = 0; k < config.n; ++k) {
    CorpusInstance inst;
    inst.index = k;
    inst.kind = static_cast<CurveKind>(k % 4);
    const int ball_index = (k / 4) % 4;
    inst.distorted = (k / 16) % 2 == 1;
    inst.ball = gen.ball_name(ball_index);
    report.instances.push_back(inst);
    try {
      const BallPtr ball = gen.ball(ball_index, inst.distorted);
      check_instance(k, gen, ball, inst.kind, config.inject_fault, rec);
    } catch (const Error& e) {
      rec.failure(k, "exception", std::string(code_name(e.code())) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace normgeom
