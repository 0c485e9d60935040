#include "normgeom/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "normgeom/errors.hpp"

namespace normgeom {

double polygon_area(const Polygon& p) {
  double twice = 0.0;
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(p.vertices[i], p.vertices[(i + 1) % n]);
  return 0.5 * twice;
}

Polygon make_convex_polygon(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) throw Error(ErrorCode::InvalidInput, "a polygon needs 3 vertices");
  Polygon p{std::move(vertices)};
  if (polygon_area(p) < 0.0) std::reverse(p.vertices.begin(), p.vertices.end());
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = p.vertices[(i + 1) % n] - p.vertices[i];
    const Vec2 e1 = p.vertices[(i + 2) % n] - p.vertices[(i + 1) % n];
    if (!(cross(e0, e1) > 1e-12 * norm(e0) * norm(e1))) {
      throw Error(ErrorCode::NotConvex,
                  "polygon is not strictly convex at vertex " + std::to_string((i + 1) % n));
    }
  }
  return p;
}

Vec2 edge_normal(const Polygon& p, std::size_t i) {
  const std::size_t n = p.vertices.size();
  const Vec2 e = p.vertices[(i + 1) % n] - p.vertices[i];
  return Vec2{e.y, -e.x} / norm(e);
}

double edge_length(const Polygon& p, std::size_t i) {
  const std::size_t n = p.vertices.size();
  return norm(p.vertices[(i + 1) % n] - p.vertices[i]);
}

namespace {

struct LabeledPolygon {
  std::vector<Vec2> vertices;
  // labels[k] is the half-plane whose boundary carries edge k.
  std::vector<int> labels;
};

bool line_intersection(const HalfPlane& a, const HalfPlane& b, Vec2& out) {
  const double det = cross(a.normal, b.normal);
  if (std::abs(det) < 1e-14) return false;
  out = Vec2{a.offset * b.normal.y - b.offset * a.normal.y,
             b.offset * a.normal.x - a.offset * b.normal.x} /
        det;
  return true;
}

constexpr double kParallelTol = 1e-9;

LabeledPolygon intersect_labeled(const std::vector<HalfPlane>& input) {
  if (input.size() < 3) throw Error(ErrorCode::DegenerateIntersection, "need >= 3 half-planes");
  // Half-planes facing the same way to within kParallelTol collapse to the
  // tighter one.
  std::vector<HalfPlane> planes;
  std::vector<int> origin;
  double reach = 1.0;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const double len = norm(input[i].normal);
    if (!(len > 0.0)) throw Error(ErrorCode::DegenerateIntersection, "zero half-plane normal");
    const HalfPlane h{input[i].normal / len, input[i].offset / len};
    reach = std::max(reach, std::abs(h.offset));
    bool merged = false;
    for (std::size_t j = 0; j < planes.size(); ++j) {
      if (dot(planes[j].normal, h.normal) > 0.0 && std::abs(cross(planes[j].normal, h.normal)) < kParallelTol) {
        if (h.offset < planes[j].offset) {
          planes[j] = h;
          origin[j] = static_cast<int>(i);
        }
        merged = true;
        break;
      }
    }
    if (!merged) {
      planes.push_back(h);
      origin.push_back(static_cast<int>(i));
    }
  }
  if (planes.size() < 3) throw Error(ErrorCode::DegenerateIntersection, "need >= 3 distinct half-planes");

  const double box = 1e6 * reach;
  LabeledPolygon poly{{{-box, -box}, {box, -box}, {box, box}, {-box, box}}, {-1, -2, -3, -4}};
  for (std::size_t h = 0; h < planes.size(); ++h) {
    const auto& plane = planes[h];
    LabeledPolygon next;
    const std::size_t n = poly.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Vec2 p = poly.vertices[k];
      const Vec2 q = poly.vertices[(k + 1) % n];
      const double sp = dot(plane.normal, p) - plane.offset;
      const double sq = dot(plane.normal, q) - plane.offset;
      const bool p_in = sp <= 0.0;
      const bool q_in = sq <= 0.0;
      if (p_in) {
        next.vertices.push_back(p);
        next.labels.push_back(poly.labels[k]);
      }
      if (p_in != q_in) {
        const Vec2 cut = p + (sp / (sp - sq)) * (q - p);
        next.vertices.push_back(cut);
        next.labels.push_back(p_in ? static_cast<int>(h) : poly.labels[k]);
      }
    }
    poly = std::move(next);
    if (poly.vertices.size() < 3) {
      throw Error(ErrorCode::DegenerateIntersection, "half-plane intersection is empty");
    }
  }
  for (int label : poly.labels) {
    if (label < 0) throw Error(ErrorCode::DegenerateIntersection, "half-plane intersection is unbounded");
  }

  // Merge repeated labels, then rebuild vertices from the active lines.
  std::vector<int> labels;
  for (int label : poly.labels) {
    if (labels.empty() || labels.back() != label) labels.push_back(label);
  }
  while (labels.size() > 1 && labels.front() == labels.back()) labels.pop_back();

  LabeledPolygon out;
  const std::size_t m = labels.size();
  for (std::size_t k = 0; k < m; ++k) {
    const int prev = labels[(k + m - 1) % m];
    Vec2 v;
    if (!line_intersection(planes[prev], planes[labels[k]], v)) continue;
    if (!out.vertices.empty() && norm(v - out.vertices.back()) <= 1e-12 * reach) {
      out.labels.back() = labels[k];
      continue;
    }
    out.vertices.push_back(v);
    out.labels.push_back(labels[k]);
  }
  while (out.vertices.size() > 1 &&
         norm(out.vertices.front() - out.vertices.back()) <= 1e-12 * reach) {
    out.vertices.pop_back();
    out.labels.pop_back();
  }
  if (out.vertices.size() < 3) {
    throw Error(ErrorCode::DegenerateIntersection, "half-plane intersection has no interior");
  }
  for (int& label : out.labels) label = origin[label];
  return out;
}

}  // namespace

Polygon intersect_halfplanes(const std::vector<HalfPlane>& planes) {
  return Polygon{intersect_labeled(planes).vertices};
}

Polygon circumscribed_parallel_polygon(const Polygon& K) {
  std::vector<HalfPlane> planes;
  for (std::size_t i = 0; i < K.vertices.size(); ++i) planes.push_back({edge_normal(K, i), 1.0});
  LabeledPolygon lp = intersect_labeled(planes);
  if (lp.vertices.size() != K.vertices.size()) {
    throw Error(ErrorCode::DegenerateIntersection,
                "circumscribed polygon lost an edge; K is not strictly convex");
  }
  // Rotate so that edge i of K1 lies on the line of edge i of K.
  const auto first = std::find(lp.labels.begin(), lp.labels.end(), 0);
  std::rotate(lp.vertices.begin(), lp.vertices.begin() + (first - lp.labels.begin()),
              lp.vertices.end());
  return Polygon{std::move(lp.vertices)};
}

Polygon symmetrize_polygon(const Polygon& K1) {
  std::vector<HalfPlane> planes;
  double reach = 0.0;
  for (std::size_t i = 0; i < K1.vertices.size(); ++i) {
    const Vec2 n = edge_normal(K1, i);
    const double h = dot(n, K1.vertices[i]);
    planes.push_back({n, h});
    planes.push_back({-n, h});
    reach = std::max(reach, norm(K1.vertices[i]));
  }
  std::vector<Vec2> v = intersect_labeled(planes).vertices;
  const std::size_t count = v.size();
  if (count % 2 != 0) {
    throw Error(ErrorCode::DegenerateIntersection, "symmetrization has an odd vertex count");
  }
  const std::size_t m = count / 2;
  for (std::size_t k = 0; k < m; ++k) {
    if (norm(v[k] + v[k + m]) > 1e-9 * reach) {
      throw Error(ErrorCode::DegenerateIntersection, "symmetrization is not origin-symmetric");
    }
    const Vec2 mid = 0.5 * (v[k] - v[k + m]);
    v[k] = mid;
    v[k + m] = -mid;
  }
  std::size_t start = 0;
  for (std::size_t k = 1; k < count; ++k) {
    if (norm(v[k] - K1.vertices.front()) < norm(v[start] - K1.vertices.front())) start = k;
  }
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
  return Polygon{std::move(v)};
}

}  // namespace normgeom
