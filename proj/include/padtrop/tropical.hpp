#pragma once

// The tropical projective plane (min-convention), tropicalisation of points
// through a configuration of three lines, and balanced plane tropical curves.

#include "padtrop/lattice.hpp"
#include "padtrop/padic.hpp"

#include <string>
#include <vector>

namespace padtrop {

// A point of TP^2 in the chart x0 != 0: coordinates in (1/e)Z ∪ {+inf}.
struct TropPoint2 {
  Valuation x;
  Valuation y;

  bool is_finite() const { return x.is_finite() && y.is_finite(); }
  // Precondition: finite.
  Point2 finite() const;
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
  friend bool operator==(const TropPoint2&, const TropPoint2&) = default;
};

// Three lines in general position: the rows of an invertible 3x3 matrix.
class LineConfig {
 public:
  explicit LineConfig(const Matrix3q& alpha);
  static LineConfig standard() { return LineConfig(Matrix3q::Identity()); }

  const Matrix3q& matrix() const { return alpha_; }

 private:
  Matrix3q alpha_;
};

// (val(z1/z0), val(z2/z0)) for (z0:z1:z2) = alpha * pt. Throws
// std::domain_error when z0 vanishes (pt lies on the first line).
TropPoint2 tropicalize(const ProjPoint2& pt, const LineConfig& cfg, const FieldParams& params);

struct CurveEdge {
  int from;
  int to;
  LatticePoint direction;  // primitive, from -> to
  long weight;
};

struct CurveRay {
  int from;
  LatticePoint direction;  // primitive
  long weight;
};

class PlaneTropicalCurve {
 public:
  PlaneTropicalCurve(std::vector<Point2> vertices, std::vector<CurveEdge> edges, std::vector<CurveRay> rays);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<CurveEdge>& edges() const { return edges_; }
  const std::vector<CurveRay>& rays() const { return rays_; }

  // Superposition of two curves (no crossing vertices inserted).
  static PlaneTropicalCurve union_of(const PlaneTropicalCurve& a, const PlaneTropicalCurve& b);

 private:
  std::vector<Point2> vertices_;
  std::vector<CurveEdge> edges_;
  std::vector<CurveRay> rays_;
};

// Rays (0,1), (1,0), (-1,-1) of weight 1.
PlaneTropicalCurve trop_line(const Point2& vertex);

bool check_balancing(const PlaneTropicalCurve& c);
// Ends are d each in directions (0,1), (1,0), (-1,-1). Throws std::domain_error
// naming the offending direction otherwise, and for unbalanced curves.
long degree_of(const PlaneTropicalCurve& c);

enum class Incidence { InteriorOfEdge, Vertex, NotOnCurve };
std::string to_string(Incidence i);

Incidence point_on_curve(const PlaneTropicalCurve& c, const Point2& q);
// Throws std::invalid_argument for points with infinite coordinates.
Incidence point_on_curve(const PlaneTropicalCurve& c, const TropPoint2& q);

// Dual subdivision of dΔ. Crossings of the curve become parallelograms and
// overlapping edges add their weights. Throws std::domain_error for
// unbalanced curves.
DualSubdivision dual_subdivision(const PlaneTropicalCurve& c);

// Curve clipped to an auto-fitted box with y upward; marked points drawn on top.
std::string to_svg(const PlaneTropicalCurve& c, const std::vector<Point2>& marked = {});

}  // namespace padtrop
