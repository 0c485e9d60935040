#pragma once

#include <string>
#include <vector>

#include "normgeom/curve.hpp"
#include "normgeom/decomp.hpp"
#include "normgeom/inequalities.hpp"
#include "normgeom/vec2.hpp"

namespace normgeom::app {

// Minimal SVG writer: named layers of polylines and point markers in world
// coordinates, fitted into a fixed canvas with a legend. Numbers are written
// with 9 significant digits so output is byte-stable.
class SvgDocument {
 public:
  void add_polyline(const std::string& layer, const std::string& color,
                    std::vector<Vec2> points, bool closed);
  void add_marker(const std::string& layer, const std::string& color, Vec2 at);
  void add_markers(const std::string& layer, const std::string& color,
                   const std::vector<Vec2>& points);
  std::string render(const std::string& title) const;

 private:
  struct Layer {
    std::string name;
    std::string color;
    std::vector<std::vector<Vec2>> polylines;
    std::vector<bool> closed;
    std::vector<Vec2> markers;
  };
  Layer& layer(const std::string& name, const std::string& color);
  std::vector<Layer> layers_;
};

// Samples gamma densely; a curve whose extent is negligible becomes a marker.
void add_curve(SvgDocument& doc, const std::string& layer, const std::string& color,
               const AdmissibleCurve& curve, double reference_size);

// gamma, u, samples of v, WC, CWMS and (w/2) u.
std::string decomposition_svg(const AdmissibleCurve& curve, const DecompositionResult& parts);
// gamma, u and samples of v.
std::string curve_svg(const AdmissibleCurve& curve);
// K, K1 and K1_0.
std::string lhuilier_svg(const LhuilierReport& report);

}  // namespace normgeom::app
