#pragma once

#include <vector>

#include "normgeom/vec2.hpp"

namespace normgeom {

struct Polygon {
  // Counterclockwise.
  std::vector<Vec2> vertices;
};

// Orients counterclockwise and checks strict convexity (every turn strictly
// left). Throws InvalidInput (fewer than 3 vertices) or NotConvex.
Polygon make_convex_polygon(std::vector<Vec2> vertices);

// Shoelace formula.
double polygon_area(const Polygon& p);

// Unit outward normal of edge i (vertex i to vertex i + 1).
Vec2 edge_normal(const Polygon& p, std::size_t i);
double edge_length(const Polygon& p, std::size_t i);

struct HalfPlane {
  Vec2 normal;
  double offset;  // {x : <normal, x> <= offset}
};

// Bounded intersection, counterclockwise. Redundant half-planes are dropped
// and vertices are recomputed as intersections of consecutive active lines.
// Throws DegenerateIntersection when empty or unbounded.
Polygon intersect_halfplanes(const std::vector<HalfPlane>& planes);

// K1 = intersection of {<n_i, x> <= 1} over the edge normals of K. Edge i of
// K1 is parallel to edge i of K.
Polygon circumscribed_parallel_polygon(const Polygon& K);

// K1 ∩ (-K1), starting at the vertex closest to the first vertex of K1.
Polygon symmetrize_polygon(const Polygon& K1);

}  // namespace normgeom
