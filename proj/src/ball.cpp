#include "normgeom/ball.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "normgeom/errors.hpp"

namespace normgeom {

Piece Piece::arc(Expr x, Expr y, double t0, double t1) {
  Piece p;
  p.kind_ = PieceKind::SmoothArc;
  p.t0_ = t0;
  p.t1_ = t1;
  p.dx_ = differentiate(x);
  p.dy_ = differentiate(y);
  p.ddx_ = differentiate(p.dx_);
  p.ddy_ = differentiate(p.dy_);
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

Piece Piece::segment(Vec2 p0, Vec2 p1, double t0, double t1) {
  Piece p;
  p.kind_ = PieceKind::Segment;
  p.t0_ = t0;
  p.t1_ = t1;
  p.p0_ = p0;
  p.p1_ = p1;
  return p;
}

Vec2 Piece::point(double t) const {
  if (kind_ == PieceKind::Segment) {
    const double s = (t - t0_) / (t1_ - t0_);
    return p0_ + s * (p1_ - p0_);
  }
  return {eval(x_, t), eval(y_, t)};
}

Vec2 Piece::first_derivative(double t) const {
  if (kind_ == PieceKind::Segment) return (p1_ - p0_) / (t1_ - t0_);
  return {eval(dx_, t), eval(dy_, t)};
}

Vec2 Piece::second_derivative(double t) const {
  if (kind_ == PieceKind::Segment) return {};
  return {eval(ddx_, t), eval(ddy_, t)};
}

Piece Piece::antipodal(double shift) const {
  if (kind_ == PieceKind::Segment) return segment(-p0_, -p1_, t0_ + shift, t1_ + shift);
  const Expr shifted = Expr::var() - Expr::number(shift);
  return arc(-substitute(x_, shifted), -substitute(y_, shifted), t0_ + shift, t1_ + shift);
}

Piece Piece::transformed(double a11, double a12, double a21, double a22) const {
  if (kind_ == PieceKind::Segment) {
    auto map = [&](Vec2 p) { return Vec2{a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y}; };
    return segment(map(p0_), map(p1_), t0_, t1_);
  }
  const Expr nx = Expr::number(a11) * x_ + Expr::number(a12) * y_;
  const Expr ny = Expr::number(a21) * x_ + Expr::number(a22) * y_;
  return arc(nx, ny, t0_, t1_);
}

// ---------------------------------------------------------------------------

std::size_t UnitBall::locate(double& t, Side side) const {
  const double t0 = breakpoints_.front();
  const double p = period();
  if (t < t0 || t >= t0 + p) {
    t = t0 + std::fmod(t - t0, p);
    if (t < t0) t += p;
    if (t >= t0 + p) t = t0;
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end() - 1, t);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (side == Side::Left && t == breakpoints_[i]) {
    if (i == 0) {
      i = pieces_.size() - 1;
      t += p;
    } else {
      --i;
    }
  }
  return i;
}

Vec2 UnitBall::u(double t, Side side) const {
  const std::size_t i = locate(t, side);
  return pieces_[i].point(t);
}

Vec2 UnitBall::u_prime(double t, Side side) const {
  const std::size_t i = locate(t, side);
  return pieces_[i].first_derivative(t);
}

Vec2 UnitBall::u_second(double t, Side side) const {
  const std::size_t i = locate(t, side);
  return pieces_[i].second_derivative(t);
}

std::vector<double> UnitBall::sample_parameters(std::size_t i) const {
  const Piece& p = pieces_[i];
  std::vector<double> out{p.t0()};
  for (double t : rule_nodes(p.t0(), p.t1(), quadrature_)) out.push_back(t);
  out.push_back(p.t1());
  return out;
}

BallPtr UnitBall::transformed(double a11, double a12, double a21, double a22) const {
  if (!(a11 * a22 - a12 * a21 > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "ball transform must have positive determinant");
  }
  std::vector<Piece> pieces;
  pieces.reserve(pieces_.size());
  for (const auto& p : pieces_) pieces.push_back(p.transformed(a11, a12, a21, a22));
  BallConfig config;
  config.quadrature = quadrature_;
  return build_ball(std::move(pieces), config);
}

// ---------------------------------------------------------------------------

namespace {

std::string piece_label(std::size_t i, double t) {
  std::ostringstream os;
  os << "piece " << i << " at t=" << t;
  return os.str();
}

}  // namespace

BallPtr build_ball(std::vector<Piece> pieces, const BallConfig& config) {
  config.quadrature.validate();
  if (pieces.empty()) throw Error(ErrorCode::InvalidInput, "a ball needs at least one piece");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!(pieces[i].t0() < pieces[i].t1())) {
      throw Error(ErrorCode::InvalidInput, "piece " + std::to_string(i) + " has t0 >= t1");
    }
  }
  if (config.auto_symmetrize) {
    const double shift = pieces.back().t1() - pieces.front().t0();
    const std::size_t n = pieces.size();
    for (std::size_t i = 0; i < n; ++i) pieces.push_back(pieces[i].antipodal(shift));
  }
  if (pieces.size() % 2 != 0) {
    throw Error(ErrorCode::NotSymmetric, "a symmetric ball needs an even number of pieces");
  }

  auto ball = std::make_shared<UnitBall>();
  ball->quadrature_ = config.quadrature;
  const std::size_t count = pieces.size();
  const std::size_t n = count / 2;

  ball->breakpoints_.push_back(pieces.front().t0());
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double a = pieces[i].t1();
    const double b = pieces[i + 1].t0();
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) {
      throw Error(ErrorCode::InvalidInput,
                  "parameter intervals of pieces " + std::to_string(i) + " and " +
                      std::to_string(i + 1) + " are not contiguous");
    }
    ball->breakpoints_.push_back(b);
  }
  ball->breakpoints_.push_back(pieces.back().t1());
  const auto& bp = ball->breakpoints_;
  const double half = bp[n] - bp[0];
  ball->half_period_ = half;
  const double ptol = 1e-9 * half;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs((bp[i + n] - bp[i]) - half) > ptol ||
        std::abs((bp[i + n + 1] - bp[i + 1]) - half) > ptol) {
      throw Error(ErrorCode::NotSymmetric, "piece " + std::to_string(i + n) +
                                               " is not the parameter shift of piece " +
                                               std::to_string(i) + " by T");
    }
  }
  if (config.half_period > 0.0 && std::abs(config.half_period - half) > ptol) {
    throw Error(ErrorCode::NotSymmetric, "declared T does not match the pieces");
  }
  ball->pieces_ = std::move(pieces);
  const auto& ps = ball->pieces_;

  struct Sample {
    double t;
    Vec2 u, d1, d2;
  };
  std::vector<std::vector<Sample>> samples(count);
  double radius = 0.0;
  try {
    for (std::size_t i = 0; i < count; ++i) {
      for (double t : ball->sample_parameters(i)) {
        Sample s{t, ps[i].point(t), ps[i].first_derivative(t), ps[i].second_derivative(t)};
        radius = std::max(radius, norm(s.u));
        samples[i].push_back(s);
      }
    }
  } catch (const DomainError& e) {
    throw Error(ErrorCode::InvalidInput, std::string("ball piece not evaluable: ") + e.what());
  }
  ball->diameter_ = 2.0 * radius;
  if (!(radius > 0.0)) throw Error(ErrorCode::DegeneratePiece, "ball boundary is a point");
  const double tol = ball->tol_geom();
  const double eps = ball->eps_reg();

  for (std::size_t i = 0; i < count; ++i) {
    const Vec2 end = samples[i].back().u;
    const Vec2 next = samples[(i + 1) % count].front().u;
    if (norm(end - next) > tol) {
      std::ostringstream msg;
      msg << "boundary is not closed between piece " << i << " and piece " << (i + 1) % count
          << " (gap " << norm(end - next) << ")";
      throw Error(ErrorCode::NotClosed, msg.str());
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& s : samples[i]) {
      if (norm(s.d1) < eps) {
        throw Error(ErrorCode::DegeneratePiece, "u' vanishes on " + piece_label(i, s.t));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + n;
    for (const auto& s : samples[i]) {
      const Vec2 opposite = ps[j].point(s.t + half);
      if (norm(opposite + s.u) > tol) {
        throw Error(ErrorCode::NotSymmetric,
                    "u(t+T) != -u(t) on " + piece_label(i, s.t));
      }
    }
  }

  double winding = 0.0;
  Vec2 prev = samples[0].front().u;
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& s : samples[i]) {
      if (!(cross(s.u, s.d1) > 1e-12 * norm(s.u) * norm(s.d1))) {
        throw Error(ErrorCode::NotConvex,
                    "[u, u'] <= 0 on " + piece_label(i, s.t) +
                        " (origin not strictly inside or clockwise orientation)");
      }
      if (ps[i].kind() == PieceKind::SmoothArc && !(cross(s.d1, s.d2) > 0.0)) {
        throw Error(ErrorCode::NotConvex, "[u', u''] <= 0 on arc " + piece_label(i, s.t));
      }
      winding += std::atan2(cross(prev, s.u), dot(prev, s.u));
      prev = s.u;
    }
    const Vec2 out = samples[i].back().d1;
    const Vec2 in = samples[(i + 1) % count].front().d1;
    const double turn = cross(out, in);
    const double scale = norm(out) * norm(in);
    if (turn < -1e-12 * scale || (std::abs(turn) <= 1e-12 * scale && dot(out, in) < 0.0)) {
      throw Error(ErrorCode::NotConvex,
                  "boundary turns clockwise at the vertex after piece " + std::to_string(i));
    }
  }
  if (std::abs(winding - 2.0 * std::numbers::pi) > 1e-6) {
    throw Error(ErrorCode::NotConvex, "boundary does not wind exactly once around the origin");
  }

  ball->area_ = 0.5 * integrate_piecewise(
                          [&](std::size_t i, double t) {
                            return cross(ps[i].point(t), ps[i].first_derivative(t));
                          },
                          bp, ball->quadrature_);
  return ball;
}

DualPoint dual_point(const UnitBall& ball, std::size_t piece, double t) {
  const Vec2 u = ball.u(piece, t);
  const Vec2 d = ball.u_prime(piece, t);
  const double c = cross(u, d);
  if (std::abs(c) < ball.eps_reg() * norm(d)) {
    throw Error(ErrorCode::DegenerateDual, "[u, u'] vanishes");
  }
  return {d / c};
}

DualPoint dual_point(const UnitBall& ball, double t, Side side) {
  const std::size_t i = ball.locate(t, side);
  return dual_point(ball, i, t);
}

double ball_area(const UnitBall& ball) { return ball.area(); }

// ---------------------------------------------------------------------------

const std::vector<std::string>& builtin_ball_names() {
  static const std::vector<std::string> names{"euclidean", "square", "regular_2k_gon",
                                              "mixed_example21"};
  return names;
}

BallPtr polygon_ball(const std::vector<Vec2>& vertices) {
  if (vertices.size() < 4 || vertices.size() % 2 != 0) {
    throw Error(ErrorCode::NotSymmetric, "a symmetric polygon ball needs an even vertex count >= 4");
  }
  const std::size_t m = vertices.size() / 2;
  double radius = 0.0;
  for (const auto& v : vertices) radius = std::max(radius, norm(v));
  for (std::size_t j = 0; j < m; ++j) {
    if (norm(vertices[j] + vertices[j + m]) > 2e-9 * radius) {
      throw Error(ErrorCode::NotSymmetric, "polygon vertices are not origin-symmetric");
    }
  }
  std::vector<Piece> pieces;
  for (std::size_t j = 0; j < m; ++j) {
    const Vec2 end = j + 1 < m ? vertices[j + 1] : -vertices[0];
    pieces.push_back(Piece::segment(vertices[j], end, static_cast<double>(j),
                                    static_cast<double>(j + 1)));
  }
  BallConfig config;
  config.auto_symmetrize = true;
  return build_ball(std::move(pieces), config);
}

BallPtr builtin_ball(std::string_view name, const BuiltinParams& params) {
  if (name == "euclidean") {
    std::vector<Piece> pieces;
    const Expr x = parse("cos(pi/2*t)");
    const Expr y = parse("sin(pi/2*t)");
    for (int i = 0; i < 4; ++i) pieces.push_back(Piece::arc(x, y, i, i + 1));
    return build_ball(std::move(pieces));
  }
  if (name == "square") {
    return polygon_ball({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
  }
  if (name == "regular_2k_gon") {
    if (params.k < 2) throw Error(ErrorCode::InvalidInput, "regular_2k_gon needs k >= 2");
    std::vector<Vec2> vertices;
    for (int j = 0; j < 2 * params.k; ++j) {
      const double a = std::numbers::pi * j / params.k;
      vertices.push_back({std::cos(a), std::sin(a)});
    }
    for (int j = 0; j < params.k; ++j) vertices[j + params.k] = -vertices[j];
    return polygon_ball(vertices);
  }
  if (name == "mixed_example21") {
    const Expr x = parse("cos(pi/2*t)");
    const Expr y = parse("sin(pi/2*t)");
    std::vector<Piece> pieces{
        Piece::segment({1, 0}, {0, 1}, 0, 1),
        Piece::arc(x, y, 1, 2),
        Piece::segment({-1, 0}, {0, -1}, 2, 3),
        Piece::arc(x, y, 3, 4),
    };
    return build_ball(std::move(pieces));
  }
  throw Error(ErrorCode::UnknownBuiltin, "unknown builtin ball '" + std::string(name) + "'");
}

}  // namespace normgeom
