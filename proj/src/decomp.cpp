#include "normgeom/decomp.hpp"

#include <algorithm>
#include <sstream>

#include "normgeom/errors.hpp"
#include "normgeom/measures.hpp"

namespace normgeom {

namespace {

// r_{antipode(i)} written in the parameter of piece i.
Expr antipodal_radius(const AdmissibleCurve& curve, std::size_t i) {
  const UnitBall& b = curve.ball();
  const Expr shifted = Expr::var() + Expr::number(b.antipodal_shift(i));
  return substitute(curve.radius()[b.antipode(i)], shifted);
}

AdmissibleCurve wigner_caustic_impl(const AdmissibleCurve& curve) {
  const UnitBall& b = curve.ball();
  const Expr half = Expr::number(0.5);
  std::vector<Expr> radius;
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    radius.push_back(half * (curve.radius()[i] - antipodal_radius(curve, i)));
  }
  const Vec2 base =
      0.5 * (curve.basepoint() + curve.gamma(b.half_count(), b.start() + b.half_period()));
  return assemble_curve(curve.ball_ptr(), std::move(radius), base);
}

AdmissibleCurve cwms_impl(const AdmissibleCurve& curve, double w) {
  const UnitBall& b = curve.ball();
  const Expr half = Expr::number(0.5);
  std::vector<Expr> radius;
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    radius.push_back(half * (curve.radius()[i] + antipodal_radius(curve, i) - Expr::number(w)));
  }
  const Vec2 opposite = curve.gamma(b.half_count(), b.start() + b.half_period());
  const Vec2 base = 0.5 * (curve.basepoint() - opposite - w * b.u(std::size_t{0}, b.start()));
  return assemble_curve(curve.ball_ptr(), std::move(radius), base);
}

}  // namespace

AdmissibleCurve wigner_caustic(const AdmissibleCurve& curve) {
  return wigner_caustic_impl(curve);
}

AdmissibleCurve cwms(const AdmissibleCurve& curve) { return cwms_impl(curve, mean_width(curve)); }

AdmissibleCurve cwms_with_width(const AdmissibleCurve& curve, double w) {
  return cwms_impl(curve, w);
}

DecompositionResult decompose(const AdmissibleCurve& curve) {
  const double w = mean_width(curve);
  DecompositionResult out{wigner_caustic_impl(curve), cwms_impl(curve, w), w, 0.0};
  const UnitBall& b = curve.ball();
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    for (double t : b.sample_parameters(i)) {
      const Vec2 rebuilt = out.wc.gamma(i, t) + out.cwms.gamma(i, t) + 0.5 * w * b.u(i, t);
      out.residual = std::max(out.residual, norm(curve.gamma(i, t) - rebuilt));
    }
  }
  if (out.residual > curve.tol_close()) {
    std::ostringstream msg;
    msg << "decomposition residual " << out.residual << " exceeds " << curve.tol_close();
    throw Error(ErrorCode::DecompositionResidual, msg.str());
  }
  return out;
}

}  // namespace normgeom
