#pragma once

// Origin-symmetric unit balls whose boundary is a chain of strictly convex
// smooth arcs and straight segments, parameterized on [t_0, t_0 + 2T].

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "normgeom/expr.hpp"
#include "normgeom/quadrature.hpp"
#include "normgeom/vec2.hpp"

namespace normgeom {

enum class PieceKind { SmoothArc, Segment };

class Piece {
 public:
  static Piece arc(Expr x, Expr y, double t0, double t1);
  static Piece segment(Vec2 p0, Vec2 p1, double t0, double t1);

  PieceKind kind() const { return kind_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  const Expr& x() const { return x_; }
  const Expr& y() const { return y_; }
  Vec2 p0() const { return p0_; }
  Vec2 p1() const { return p1_; }

  Vec2 point(double t) const;
  Vec2 first_derivative(double t) const;
  Vec2 second_derivative(double t) const;

  // The piece s -> -point(s - shift) on [t0 + shift, t1 + shift].
  Piece antipodal(double shift) const;
  // The piece t -> m * point(t) for the row-major matrix m.
  Piece transformed(double a11, double a12, double a21, double a22) const;

 private:
  PieceKind kind_ = PieceKind::Segment;
  double t0_ = 0.0;
  double t1_ = 1.0;
  Expr x_, y_, dx_, dy_, ddx_, ddy_;
  Vec2 p0_, p1_;
};

struct BallConfig {
  // When set, the given pieces form the first half and their antipodal
  // copies are appended.
  bool auto_symmetrize = false;
  // Optional half-period; must agree with the pieces when given.
  double half_period = 0.0;
  QuadratureConfig quadrature;
};

// Which piece evaluates a parameter that sits exactly on a vertex.
enum class Side { Right, Left };

class UnitBall {
 public:
  std::size_t piece_count() const { return pieces_.size(); }
  std::size_t half_count() const { return pieces_.size() / 2; }
  const Piece& piece(std::size_t i) const { return pieces_[i]; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  double start() const { return breakpoints_.front(); }
  double half_period() const { return half_period_; }
  double period() const { return 2.0 * half_period_; }
  // t_0 < t_1 < ... < t_{2n} = t_0 + 2T
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  // Index of the piece paired with i by u(t + T) = -u(t).
  std::size_t antipode(std::size_t i) const { return (i + half_count()) % piece_count(); }
  // Parameter shift taking piece i onto its antipode: +T or -T.
  double antipodal_shift(std::size_t i) const { return i < half_count() ? half_period_ : -half_period_; }

  // Reduces t into [t_0, t_0 + 2T) and locates its piece.
  std::size_t locate(double& t, Side side = Side::Right) const;

  Vec2 u(double t, Side side = Side::Right) const;
  Vec2 u_prime(double t, Side side = Side::Right) const;
  Vec2 u_second(double t, Side side = Side::Right) const;

  Vec2 u(std::size_t piece, double t) const { return pieces_[piece].point(t); }
  Vec2 u_prime(std::size_t piece, double t) const { return pieces_[piece].first_derivative(t); }
  Vec2 u_second(std::size_t piece, double t) const { return pieces_[piece].second_derivative(t); }

  double diameter() const { return diameter_; }
  double eps_reg() const { return 1e-9 * diameter_; }
  double tol_geom() const { return 1e-9 * diameter_; }
  double area() const { return area_; }
  const QuadratureConfig& quadrature() const { return quadrature_; }

  // Check parameters on piece i: its endpoints plus the quadrature nodes.
  std::vector<double> sample_parameters(std::size_t i) const;

  // The ball's image under x -> m x (m row-major, det m > 0), revalidated.
  std::shared_ptr<const UnitBall> transformed(double a11, double a12, double a21, double a22) const;
  std::shared_ptr<const UnitBall> scaled(double c) const { return transformed(c, 0.0, 0.0, c); }

 private:
  friend std::shared_ptr<const UnitBall> build_ball(std::vector<Piece> pieces,
                                                    const BallConfig& config);
  std::vector<Piece> pieces_;
  std::vector<double> breakpoints_;
  double half_period_ = 0.0;
  double diameter_ = 0.0;
  double area_ = 0.0;
  QuadratureConfig quadrature_;
};

using BallPtr = std::shared_ptr<const UnitBall>;

// Validates closure, antipodal pairing, convexity and regularity at the
// check nodes of every piece. Throws Error with NotClosed, NotSymmetric,
// NotConvex, DegeneratePiece or InvalidInput.
BallPtr build_ball(std::vector<Piece> pieces, const BallConfig& config = {});

// The support functional v(t) = u'(t) / [u(t), u'(t)], so that
// [u(t), v(t)] = 1 and [v(t), u'(t)] = 0.
struct DualPoint {
  Vec2 v;
};

DualPoint dual_point(const UnitBall& ball, double t, Side side = Side::Right);
DualPoint dual_point(const UnitBall& ball, std::size_t piece, double t);

double ball_area(const UnitBall& ball);

struct BuiltinParams {
  // Half the number of sides of regular_2k_gon.
  int k = 3;
};

// euclidean, square, regular_2k_gon, mixed_example21.
BallPtr builtin_ball(std::string_view name, const BuiltinParams& params = {});
const std::vector<std::string>& builtin_ball_names();

// Segment ball through the given counterclockwise, origin-symmetric vertices,
// edge j parameterized on [j, j + 1].
BallPtr polygon_ball(const std::vector<Vec2>& vertices);

}  // namespace normgeom
