#include "svg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "normgeom/ball.hpp"

namespace normgeom::app {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;
constexpr int kSamplesPerPiece = 64;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// "(w/2) u" -> "w-2-u"
std::string element_id(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      out += c;
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "layer" : out;
}

}  // namespace

SvgDocument::Layer& SvgDocument::layer(const std::string& name, const std::string& color) {
  for (auto& l : layers_) {
    if (l.name == name) return l;
  }
  layers_.push_back({name, color, {}, {}, {}});
  return layers_.back();
}

void SvgDocument::add_polyline(const std::string& name, const std::string& color,
                               std::vector<Vec2> points, bool closed) {
  Layer& l = layer(name, color);
  l.polylines.push_back(std::move(points));
  l.closed.push_back(closed);
}

void SvgDocument::add_marker(const std::string& name, const std::string& color, Vec2 at) {
  layer(name, color).markers.push_back(at);
}

void SvgDocument::add_markers(const std::string& name, const std::string& color,
                              const std::vector<Vec2>& points) {
  Layer& l = layer(name, color);
  l.markers.insert(l.markers.end(), points.begin(), points.end());
}

std::string SvgDocument::render(const std::string& title) const {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -1.0 * lo;
  auto grow = [&](Vec2 p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  for (const auto& l : layers_) {
    for (const auto& line : l.polylines) std::for_each(line.begin(), line.end(), grow);
    std::for_each(l.markers.begin(), l.markers.end(), grow);
  }
  if (!(lo.x <= hi.x)) lo = hi = Vec2{};
  const double extent = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
  const double scale = (kCanvas - 2.0 * kMargin) / extent;
  const Vec2 center = 0.5 * (lo + hi);
  auto map = [&](Vec2 p) {
    return Vec2{0.5 * kCanvas + scale * (p.x - center.x), 0.5 * kCanvas - scale * (p.y - center.y)};
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kCanvas) << "\" height=\""
      << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas) << ' ' << num(kCanvas) << "\">\n"
      << "<title>" << escape(title) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
      << "\" fill=\"white\"/>\n";
  for (const auto& l : layers_) {
    out << "<g id=\"" << element_id(l.name) << "\" stroke=\"" << l.color
        << "\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (std::size_t k = 0; k < l.polylines.size(); ++k) {
      const auto& line = l.polylines[k];
      if (line.empty()) continue;
      out << "<path d=\"";
      for (std::size_t i = 0; i < line.size(); ++i) {
        const Vec2 p = map(line[i]);
        out << (i == 0 ? "M" : " L") << num(p.x) << ' ' << num(p.y);
      }
      if (l.closed[k]) out << " Z";
      out << "\"/>\n";
    }
    for (const Vec2 m : l.markers) {
      const Vec2 p = map(m);
      out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\" fill=\""
          << l.color << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n";
  double y = 20.0;
  for (const auto& l : layers_) {
    out << "<line x1=\"10\" y1=\"" << num(y - 5.0) << "\" x2=\"34\" y2=\"" << num(y - 5.0)
        << "\" stroke=\"" << l.color << "\" stroke-width=\"3\"/>\n"
        << "<text x=\"40\" y=\"" << num(y) << "\">" << escape(l.name) << "</text>\n";
    y += 18.0;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void add_curve(SvgDocument& doc, const std::string& layer, const std::string& color,
               const AdmissibleCurve& curve, double reference_size) {
  if (curve.diameter() <= 1e-9 * reference_size) {
    doc.add_marker(layer, color, curve.basepoint());
    return;
  }
  const UnitBall& b = curve.ball();
  std::vector<Vec2> points;
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    const Piece& p = b.piece(i);
    for (int k = 0; k < kSamplesPerPiece; ++k) {
      points.push_back(curve.gamma(i, p.t0() + (p.t1() - p.t0()) * k / kSamplesPerPiece));
    }
  }
  doc.add_polyline(layer, color, std::move(points), true);
}

namespace {

void add_ball_layers(SvgDocument& doc, const AdmissibleCurve& curve, double size) {
  add_curve(doc, "u", "#888888", unit_curve(curve.ball_ptr()), size);
  const UnitBall& b = curve.ball();
  std::vector<Vec2> duals;
  for (std::size_t i = 0; i < b.piece_count(); ++i) {
    const Piece& p = b.piece(i);
    for (int k = 0; k < 8; ++k) {
      duals.push_back(dual_point(b, i, p.t0() + (p.t1() - p.t0()) * (k + 0.5) / 8).v);
    }
  }
  doc.add_markers("v samples", "#2ca02c", duals);
}

}  // namespace

std::string curve_svg(const AdmissibleCurve& curve) {
  SvgDocument doc;
  const double size = std::max(curve.diameter(), curve.ball().diameter());
  add_curve(doc, "gamma", "#1f77b4", curve, size);
  add_ball_layers(doc, curve, size);
  return doc.render("admissible curve");
}

std::string decomposition_svg(const AdmissibleCurve& curve, const DecompositionResult& parts) {
  SvgDocument doc;
  const double size = std::max(curve.diameter(), curve.ball().diameter());
  add_curve(doc, "gamma", "#1f77b4", curve, size);
  add_ball_layers(doc, curve, size);
  add_curve(doc, "WC", "#d62728", parts.wc, size);
  add_curve(doc, "CWMS", "#9467bd", parts.cwms, size);
  add_curve(doc, "(w/2) u", "#ff7f0e", scaled(unit_curve(curve.ball_ptr()), 0.5 * parts.mean_width),
            size);
  return doc.render("decomposition");
}

std::string lhuilier_svg(const LhuilierReport& report) {
  SvgDocument doc;
  doc.add_polyline("K", "#1f77b4", report.K.vertices, true);
  doc.add_polyline("K1", "#d62728", report.K1.vertices, true);
  doc.add_polyline("K1_0", "#2ca02c", report.K1_0.vertices, true);
  return doc.render("Lhuilier construction");
}

}  // namespace normgeom::app
