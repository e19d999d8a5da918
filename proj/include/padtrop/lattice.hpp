#pragma once

// Lattice points and polygons in Z^2 and subdivisions of the triangle dΔ.

#include "padtrop/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace padtrop {

using LatticePoint = Eigen::Matrix<long, 2, 1>;
using Point2 = Eigen::Matrix<Rational, 2, 1>;

inline long cross(const LatticePoint& a, const LatticePoint& b) { return a(0) * b(1) - a(1) * b(0); }
long lattice_length(const LatticePoint& v);
LatticePoint primitive(const LatticePoint& v);
inline Point2 to_point2(const LatticePoint& v) { return Point2(Rational(v(0)), Rational(v(1))); }
// Clockwise quarter turn (x, y) -> (y, -x).
inline LatticePoint rotate_cw(const LatticePoint& v) { return LatticePoint(v(1), -v(0)); }

// Lexicographic order, usable as a std::map comparator.
struct LatticeLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1);
  }
};

// Orders directions by angle in [0, 2π) starting from the positive x-axis.
bool angle_less(const LatticePoint& a, const LatticePoint& b);

// Convex lattice polygon, corners listed counter-clockwise.
struct LatticePolygon {
  std::vector<LatticePoint> corners;

  long twice_area() const;
  bool is_triangle() const { return corners.size() == 3; }
  bool is_parallelogram() const;
  // Strictly inside (boundary excluded).
  bool contains_strictly(const LatticePoint& q) const;
  // On the closed boundary.
  bool on_boundary(const LatticePoint& q) const;
};

bool in_triangle(long d, const LatticePoint& q);
bool on_triangle_boundary(long d, const LatticePoint& q);
std::vector<LatticePoint> triangle_points(long d);

struct SubdivisionEdge {
  LatticePoint a;
  LatticePoint b;
  bool interior;
};

// Subdivision of dΔ = conv{(0,0), (d,0), (0,d)} into lattice polygons.
struct DualSubdivision {
  long degree = 0;
  std::vector<LatticePolygon> cells;

  // Undirected edges of the cells, each listed once with a < b.
  std::vector<SubdivisionEdge> edges() const;
  std::vector<LatticePoint> vertices() const;
  std::vector<LatticePoint> interior_vertices() const;
  int parallelogram_count() const;
  // Genus of the dual simple curve: interior vertices minus crossings.
  int simple_genus() const;
  // Cells tile dΔ exactly.
  bool tiles_triangle() const;
  std::string str() const;
};

// Interiors of two convex polygons intersect.
bool interiors_overlap(const LatticePolygon& p, const LatticePolygon& q);

}  // namespace padtrop
