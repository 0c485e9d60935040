#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "normgeom/ball.hpp"
#include "normgeom/curve.hpp"
#include "normgeom/polygon.hpp"

namespace normgeom::app {

using nlohmann::json;

// Reads and parses a JSON file. Throws Error(InvalidInput) when the file is
// unreadable or malformed.
json load_json(const std::filesystem::path& path);

// Rebuilds the ball with a different quadrature configuration.
BallPtr with_quadrature(const BallPtr& ball, const QuadratureConfig& config);

// Accepts a builtin name ("square"), {"builtin": name, "k": 4}, or an inline
// ball document {"T", "auto_symmetrize", "pieces": [...]}.
BallPtr ball_from_json(const json& doc, const QuadratureConfig& config);

// Ball given on the command line: an existing JSON file or a builtin name.
BallPtr ball_from_argument(const std::string& argument, int k, const QuadratureConfig& config);

// {"ball": ..., "basepoint": [x, y], "radius": [{"expr", "piece"}...]} or
// {"ball": ..., "explicit": [{"x", "y", "t0", "t1"}...]}. A non-null
// `ball` replaces the document's ball field.
AdmissibleCurve curve_from_json(const json& doc, const QuadratureConfig& config,
                                BallPtr ball = nullptr);

// {"vertices": [[x, y], ...]}
Polygon polygon_from_json(const json& doc);

enum class DocumentKind { Ball, Curve, Polygon, Unknown };
DocumentKind classify(const json& doc);

}  // namespace normgeom::app
