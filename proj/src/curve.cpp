#include "normgeom/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "normgeom/errors.hpp"
#include "normgeom/quadrature.hpp"

namespace normgeom {

double AdmissibleCurve::radius_at(std::size_t piece, double t) const {
  const auto& c = cache_[piece];
  return c.constant ? c.r : eval(radius_[piece], t);
}

double AdmissibleCurve::radius_at(double t, Side side) const {
  const std::size_t i = ball_->locate(t, side);
  return radius_at(i, t);
}

Vec2 AdmissibleCurve::gamma_prime(std::size_t piece, double t) const {
  return radius_at(piece, t) * ball_->u_prime(piece, t);
}

Vec2 AdmissibleCurve::gamma(std::size_t piece, double t) const {
  const auto& c = cache_[piece];
  const Piece& p = ball_->piece(piece);
  if (c.constant) return c.start + c.r * (p.point(t) - p.point(p.t0()));
  auto it = std::upper_bound(c.panel_start.begin(), c.panel_start.end(), t);
  const std::size_t k = it == c.panel_start.begin()
                            ? 0
                            : static_cast<std::size_t>(it - c.panel_start.begin()) - 1;
  const double a = c.panel_start[k];
  if (t == a) return c.panel_value[k];
  const auto& rule = GaussLegendreRule::get(ball_->quadrature().nodes_per_panel);
  const Vec2 partial =
      gauss_panel<Vec2>([&](double s) { return gamma_prime(piece, s); }, a, t, rule);
  return c.panel_value[k] + partial;
}

Vec2 AdmissibleCurve::gamma(double t, Side side) const {
  const std::size_t i = ball_->locate(t, side);
  return gamma(i, t);
}

double AdmissibleCurve::tol_close() const {
  return 1e-8 * std::max(diameter_, 1e-6 * path_length_);
}

std::vector<double> AdmissibleCurve::sampled_radii() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < ball_->piece_count(); ++i) {
    for (double t : ball_->sample_parameters(i)) out.push_back(radius_at(i, t));
  }
  return out;
}

AdmissibleCurve assemble_curve(BallPtr ball, std::vector<Expr> radius, Vec2 basepoint) {
  if (radius.size() != ball->piece_count()) {
    std::ostringstream msg;
    msg << "radius has " << radius.size() << " pieces, ball has " << ball->piece_count();
    throw Error(ErrorCode::InvalidInput, msg.str());
  }
  AdmissibleCurve curve;
  curve.ball_ = std::move(ball);
  curve.radius_ = std::move(radius);
  curve.basepoint_ = basepoint;
  const UnitBall& b = *curve.ball_;
  const QuadratureConfig& config = b.quadrature();
  const auto& rule = GaussLegendreRule::get(config.nodes_per_panel);
  curve.cache_.resize(b.piece_count());

  try {
    double path = 0.0;
    for (std::size_t i = 0; i < b.piece_count(); ++i) {
      auto& c = curve.cache_[i];
      const Expr& r = curve.radius_[i];
      const Piece& p = b.piece(i);
      if (r.is_constant()) {
        c.constant = true;
        c.r = eval(r, 0.0);
      }
      path += gauss_panel<double>(
          [&](double t) { return std::abs(curve.radius_at(i, t)) * norm(p.first_derivative(t)); },
          p.t0(), p.t1(), rule);
    }
    curve.path_length_ = path;

    Vec2 position = basepoint;
    const double span = b.period();
    // A point curve has path ~ 0; the floor keeps its tolerance above rounding.
    const double abs_tol = std::max(1e-3 * config.rel_tol * path, 1e-14 * b.diameter());
    std::vector<Panel<Vec2>> panels;
    for (std::size_t i = 0; i < b.piece_count(); ++i) {
      auto& c = curve.cache_[i];
      const Piece& p = b.piece(i);
      c.start = position;
      if (c.constant) {
        position = position + c.r * (p.point(p.t1()) - p.point(p.t0()));
        continue;
      }
      panels.clear();
      if (abs_tol > 0.0) {
        adaptive_panels<Vec2>([&](double t) { return curve.gamma_prime(i, t); }, p.t0(), p.t1(),
                              abs_tol, span, config, panels);
      } else {
        panels.push_back({p.t0(), p.t1(), Vec2{}});
      }
      for (const auto& panel : panels) {
        c.panel_start.push_back(panel.a);
        c.panel_value.push_back(position);
        position += panel.integral;
      }
    }
    curve.closure_gap_ = norm(position - basepoint);

    Vec2 lo = basepoint;
    Vec2 hi = basepoint;
    for (std::size_t i = 0; i < b.piece_count(); ++i) {
      for (double t : b.sample_parameters(i)) {
        const Vec2 g = curve.gamma(i, t);
        lo = {std::min(lo.x, g.x), std::min(lo.y, g.y)};
        hi = {std::max(hi.x, g.x), std::max(hi.y, g.y)};
      }
    }
    curve.diameter_ = norm(hi - lo);
  } catch (const DomainError& e) {
    throw Error(ErrorCode::InvalidInput, std::string("radius not evaluable: ") + e.what());
  }
  return curve;
}

AdmissibleCurve curve_from_radius(BallPtr ball, std::vector<Expr> radius, Vec2 basepoint) {
  AdmissibleCurve curve = assemble_curve(std::move(ball), std::move(radius), basepoint);
  if (curve.closure_gap() > curve.tol_close()) {
    std::ostringstream msg;
    msg << "curve does not close: gap " << curve.closure_gap() << " exceeds tolerance "
        << curve.tol_close();
    throw Error(ErrorCode::NotClosed, msg.str());
  }
  return curve;
}

AdmissibleCurve curve_from_explicit(BallPtr ball, const std::vector<ExplicitPiece>& pieces,
                                    double tol) {
  if (pieces.size() != ball->piece_count()) {
    std::ostringstream msg;
    msg << "explicit curve has " << pieces.size() << " pieces, ball has " << ball->piece_count();
    throw Error(ErrorCode::InvalidInput, msg.str());
  }
  std::vector<Expr> radius;
  double max_extent = 0.0;
  std::vector<Vec2> starts, ends;
  try {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Piece& p = ball->piece(i);
      const Expr gx = differentiate(pieces[i].x);
      const Expr gy = differentiate(pieces[i].y);
      Expr ux, uy;
      if (p.kind() == PieceKind::Segment) {
        const Vec2 d = p.first_derivative(p.t0());
        ux = Expr::number(d.x);
        uy = Expr::number(d.y);
      } else {
        ux = differentiate(p.x());
        uy = differentiate(p.y());
      }
      Expr r = (gx * ux + gy * uy) / (ux * ux + uy * uy);
      for (double t : ball->sample_parameters(i)) {
        const Vec2 g{eval(gx, t), eval(gy, t)};
        const Vec2 residual = g - eval(r, t) * p.first_derivative(t);
        if (norm(residual) > tol * norm(g) + std::numeric_limits<double>::min()) {
          std::ostringstream msg;
          msg << "gamma' is not parallel to u' on piece " << i << " at t=" << t
              << " (residual " << norm(residual) << ")";
          throw Error(ErrorCode::NotAdmissible, msg.str());
        }
        const Vec2 pos{eval(pieces[i].x, t), eval(pieces[i].y, t)};
        max_extent = std::max(max_extent, norm(pos));
      }
      radius.push_back(std::move(r));
      starts.push_back({eval(pieces[i].x, p.t0()), eval(pieces[i].y, p.t0())});
      ends.push_back({eval(pieces[i].x, p.t1()), eval(pieces[i].y, p.t1())});
    }
  } catch (const DomainError& e) {
    throw Error(ErrorCode::InvalidInput, std::string("explicit curve not evaluable: ") + e.what());
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::size_t j = (i + 1) % pieces.size();
    if (norm(ends[i] - starts[j]) > 1e-8 * std::max(max_extent, 1.0)) {
      std::ostringstream msg;
      msg << "explicit pieces " << i << " and " << j << " do not join (gap "
          << norm(ends[i] - starts[j]) << ")";
      throw Error(ErrorCode::NotClosed, msg.str());
    }
  }
  return curve_from_radius(std::move(ball), std::move(radius), starts.front());
}

AdmissibleCurve unit_curve(BallPtr ball) {
  const Vec2 start = ball->u(std::size_t{0}, ball->start());
  std::vector<Expr> radius(ball->piece_count(), Expr::number(1.0));
  return curve_from_radius(std::move(ball), std::move(radius), start);
}

Vec2 evaluate_gamma(const AdmissibleCurve& curve, double t) { return curve.gamma(t); }

Convexity is_convex(const AdmissibleCurve& curve) {
  const UnitBall& b = curve.ball();
  double max_abs = 0.0;
  std::vector<std::pair<double, double>> samples;
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    for (double t : b.sample_parameters(i)) {
      const double r = curve.radius_at(i, t);
      max_abs = std::max(max_abs, std::abs(r));
      samples.emplace_back(t, r);
    }
  }
  const double eps = 1e-10 * max_abs;
  bool pos = false;
  bool neg = false;
  double first_pos = 0.0, first_neg = 0.0;
  for (const auto& [t, r] : samples) {
    if (r > eps && !pos) {
      pos = true;
      first_pos = t;
    }
    if (r < -eps && !neg) {
      neg = true;
      first_neg = t;
    }
  }
  if (pos && neg) return {false, 0, std::max(first_pos, first_neg)};
  return {true, neg ? -1 : 1, 0.0};
}

double convexifying_shift(const AdmissibleCurve& curve) {
  double lowest = 0.0;
  for (double r : curve.sampled_radii()) lowest = std::min(lowest, r);
  return -lowest;
}

AdmissibleCurve shifted(const AdmissibleCurve& curve, double k) {
  std::vector<Expr> radius;
  for (const auto& r : curve.radius()) radius.push_back(r + Expr::number(k));
  const UnitBall& b = curve.ball();
  const Vec2 base = curve.basepoint() + k * b.u(std::size_t{0}, b.start());
  return curve_from_radius(curve.ball_ptr(), std::move(radius), base);
}

AdmissibleCurve translated(const AdmissibleCurve& curve, Vec2 offset) {
  return assemble_curve(curve.ball_ptr(), curve.radius(), curve.basepoint() + offset);
}

bool same_ball(const UnitBall& a, const UnitBall& b) {
  if (&a == &b) return true;
  if (a.piece_count() != b.piece_count()) return false;
  const double tol = 1e-12 * std::max(1.0, a.period());
  for (std::size_t i = 0; i < a.breakpoints().size(); ++i) {
    if (std::abs(a.breakpoints()[i] - b.breakpoints()[i]) > tol) return false;
  }
  for (std::size_t i = 0; i < a.piece_count(); ++i) {
    for (double t : a.sample_parameters(i)) {
      if (norm(a.u(i, t) - b.u(i, t)) > a.tol_geom()) return false;
    }
  }
  return true;
}

AdmissibleCurve combine(double a, const AdmissibleCurve& c1, double b, const AdmissibleCurve& c2) {
  if (!same_ball(c1.ball(), c2.ball())) {
    throw Error(ErrorCode::MismatchedBalls, "curves live on different balls");
  }
  std::vector<Expr> radius;
  for (std::size_t i = 0; i < c1.radius().size(); ++i) {
    radius.push_back(Expr::number(a) * c1.radius()[i] + Expr::number(b) * c2.radius()[i]);
  }
  return curve_from_radius(c1.ball_ptr(), std::move(radius),
                           a * c1.basepoint() + b * c2.basepoint());
}

AdmissibleCurve scaled(const AdmissibleCurve& curve, double c) {
  std::vector<Expr> radius;
  for (const auto& r : curve.radius()) radius.push_back(Expr::number(c) * r);
  return assemble_curve(curve.ball_ptr(), std::move(radius), c * curve.basepoint());
}

}  // namespace normgeom
