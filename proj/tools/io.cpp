#include "io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "normgeom/errors.hpp"

namespace normgeom::app {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidInput, message);
}

const json& field(const json& doc, const char* name, const std::string& where) {
  if (!doc.is_object() || !doc.contains(name)) invalid(where + ": missing field \"" + name + "\"");
  return doc.at(name);
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) invalid(where + ": expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) invalid(where + ": number is not finite");
  return v;
}

Vec2 point(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) invalid(where + ": expected [x, y]");
  return {number(value[0], where), number(value[1], where)};
}

std::string text(const json& value, const std::string& where) {
  if (!value.is_string()) invalid(where + ": expected a string");
  return value.get<std::string>();
}

// Parse errors are reported with the field they came from; the offset stays
// relative to the expression text.
Expr expression(const json& value, const std::string& where) {
  const std::string source = text(value, where);
  try {
    return parse(source);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.offset(), e.expected(), where + ": " + e.what());
  }
}

Piece piece_from_json(const json& doc, const std::string& where) {
  const std::string kind = text(field(doc, "kind", where), where + ".kind");
  const double t0 = number(field(doc, "t0", where), where + ".t0");
  const double t1 = number(field(doc, "t1", where), where + ".t1");
  if (kind == "arc") {
    return Piece::arc(expression(field(doc, "x", where), where + ".x"),
                      expression(field(doc, "y", where), where + ".y"), t0, t1);
  }
  if (kind == "segment") {
    return Piece::segment(point(field(doc, "p0", where), where + ".p0"),
                          point(field(doc, "p1", where), where + ".p1"), t0, t1);
  }
  invalid(where + ".kind: expected \"arc\" or \"segment\", got \"" + kind + "\"");
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    invalid(path.string() + ": " + e.what());
  }
}

BallPtr with_quadrature(const BallPtr& ball, const QuadratureConfig& config) {
  BallConfig bc;
  bc.quadrature = config;
  return build_ball(ball->pieces(), bc);
}

BallPtr ball_from_json(const json& doc, const QuadratureConfig& config) {
  if (doc.is_string()) return with_quadrature(builtin_ball(doc.get<std::string>()), config);
  if (!doc.is_object()) invalid("ball: expected a builtin name or an object");
  if (doc.contains("builtin")) {
    BuiltinParams params;
    if (doc.contains("k")) {
      const double k = number(doc.at("k"), "ball.k");
      if (k != std::floor(k)) invalid("ball.k: expected an integer");
      params.k = static_cast<int>(k);
    }
    return with_quadrature(builtin_ball(text(doc.at("builtin"), "ball.builtin"), params), config);
  }
  const json& pieces = field(doc, "pieces", "ball");
  if (!pieces.is_array()) invalid("ball.pieces: expected an array");
  std::vector<Piece> parsed;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    parsed.push_back(piece_from_json(pieces[i], "ball.pieces[" + std::to_string(i) + "]"));
  }
  BallConfig bc;
  bc.quadrature = config;
  if (doc.contains("auto_symmetrize")) {
    if (!doc.at("auto_symmetrize").is_boolean()) invalid("ball.auto_symmetrize: expected a bool");
    bc.auto_symmetrize = doc.at("auto_symmetrize").get<bool>();
  }
  if (doc.contains("T")) bc.half_period = number(doc.at("T"), "ball.T");
  return build_ball(std::move(parsed), bc);
}

BallPtr ball_from_argument(const std::string& argument, int k, const QuadratureConfig& config) {
  if (std::filesystem::is_regular_file(argument)) {
    const json doc = load_json(argument);
    return ball_from_json(doc.contains("ball") ? doc.at("ball") : doc, config);
  }
  BuiltinParams params;
  params.k = k;
  return with_quadrature(builtin_ball(argument, params), config);
}

AdmissibleCurve curve_from_json(const json& doc, const QuadratureConfig& config, BallPtr ball) {
  if (!doc.is_object()) invalid("curve: expected an object");
  if (!ball) ball = ball_from_json(field(doc, "ball", "curve"), config);

  if (doc.contains("explicit")) {
    const json& pieces = doc.at("explicit");
    if (!pieces.is_array() || pieces.size() != ball->piece_count()) {
      invalid("curve.explicit: expected " + std::to_string(ball->piece_count()) + " pieces");
    }
    std::vector<ExplicitPiece> parsed;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const std::string where = "curve.explicit[" + std::to_string(i) + "]";
      const json& p = pieces[i];
      const Piece& bp = ball->piece(i);
      if (p.contains("t0") || p.contains("t1")) {
        const double t0 = number(field(p, "t0", where), where + ".t0");
        const double t1 = number(field(p, "t1", where), where + ".t1");
        const double slack = 1e-12 * std::max(1.0, ball->period());
        if (std::abs(t0 - bp.t0()) > slack || std::abs(t1 - bp.t1()) > slack) {
          std::ostringstream msg;
          msg << where << ": interval [" << t0 << ", " << t1 << "] does not match ball piece ["
              << bp.t0() << ", " << bp.t1() << "]";
          invalid(msg.str());
        }
      }
      parsed.push_back({expression(field(p, "x", where), where + ".x"),
                        expression(field(p, "y", where), where + ".y")});
    }
    return curve_from_explicit(ball, parsed);
  }

  const Vec2 base = point(field(doc, "basepoint", "curve"), "curve.basepoint");
  const json& entries = field(doc, "radius", "curve");
  if (!entries.is_array()) invalid("curve.radius: expected an array");
  std::vector<Expr> radius(ball->piece_count());
  std::vector<bool> seen(ball->piece_count(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "curve.radius[" + std::to_string(i) + "]";
    const double index = number(field(entries[i], "piece", where), where + ".piece");
    if (index < 0 || index != std::floor(index) ||
        index >= static_cast<double>(ball->piece_count())) {
      invalid(where + ".piece: not a piece index of the ball");
    }
    const auto j = static_cast<std::size_t>(index);
    if (seen[j]) invalid(where + ".piece: piece " + std::to_string(j) + " given twice");
    seen[j] = true;
    radius[j] = expression(field(entries[i], "expr", where), where + ".expr");
  }
  for (std::size_t j = 0; j < seen.size(); ++j) {
    if (!seen[j]) invalid("curve.radius: no expression for piece " + std::to_string(j));
  }
  return curve_from_radius(ball, std::move(radius), base);
}

Polygon polygon_from_json(const json& doc) {
  const json& vertices = field(doc, "vertices", "polygon");
  if (!vertices.is_array()) invalid("polygon.vertices: expected an array");
  std::vector<Vec2> points;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    points.push_back(point(vertices[i], "polygon.vertices[" + std::to_string(i) + "]"));
  }
  return make_convex_polygon(std::move(points));
}

DocumentKind classify(const json& doc) {
  if (!doc.is_object()) return DocumentKind::Unknown;
  if (doc.contains("radius") || doc.contains("explicit")) return DocumentKind::Curve;
  if (doc.contains("pieces") || doc.contains("builtin")) return DocumentKind::Ball;
  if (doc.contains("vertices")) return DocumentKind::Polygon;
  return DocumentKind::Unknown;
}

}  // namespace normgeom::app
