#include "padtrop/tropical.hpp"

#include "padtrop/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>

namespace padtrop {

Point2 TropPoint2::finite() const {
  if (!is_finite()) throw std::invalid_argument("tropical point " + str() + " has an infinite coordinate");
  return Point2(x.value(), y.value());
}

LineConfig::LineConfig(const Matrix3q& alpha) : alpha_(alpha) {
  if (alpha_.determinant() == 0) throw std::invalid_argument("line configuration is not in general position (det = 0)");
}

TropPoint2 tropicalize(const ProjPoint2& pt, const LineConfig& cfg, const FieldParams& params) {
  const Vector3q z = cfg.matrix() * pt.coords();
  if (z(0) == 0) throw std::domain_error("point " + pt.str() + " lies on the first line of the configuration");
  return {val(Rational(z(1) / z(0)), params), val(Rational(z(2) / z(0)), params)};
}

namespace {

// Rational r with to = from + r * dir, or nullopt when not a positive multiple.
std::optional<Rational> positive_multiple(const Point2& delta, const LatticePoint& dir) {
  const Point2 d = to_point2(dir);
  if (delta(0) * d(1) != delta(1) * d(0)) return std::nullopt;
  const Rational r = d(0) != 0 ? Rational(delta(0) / d(0)) : Rational(delta(1) / d(1));
  if (r <= 0) return std::nullopt;
  return r;
}

void check_direction(const LatticePoint& dir, long weight) {
  if (dir == LatticePoint::Zero() || lattice_length(dir) != 1)
    throw std::invalid_argument(fmt::format("direction ({},{}) is not primitive", dir(0), dir(1)));
  if (weight < 1) throw std::invalid_argument("edge weights must be >= 1");
}

}  // namespace

PlaneTropicalCurve::PlaneTropicalCurve(std::vector<Point2> vertices, std::vector<CurveEdge> edges,
                                       std::vector<CurveRay> rays)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), rays_(std::move(rays)) {
  const int V = static_cast<int>(vertices_.size());
  for (const auto& e : edges_) {
    if (e.from < 0 || e.to < 0 || e.from >= V || e.to >= V) throw std::invalid_argument("edge references unknown vertex");
    check_direction(e.direction, e.weight);
    if (!positive_multiple(Point2(vertices_[static_cast<std::size_t>(e.to)] - vertices_[static_cast<std::size_t>(e.from)]),
                           e.direction))
      throw std::invalid_argument("edge direction does not point from its start to its end");
  }
  for (const auto& r : rays_) {
    if (r.from < 0 || r.from >= V) throw std::invalid_argument("ray references unknown vertex");
    check_direction(r.direction, r.weight);
  }
}

PlaneTropicalCurve PlaneTropicalCurve::union_of(const PlaneTropicalCurve& a, const PlaneTropicalCurve& b) {
  auto vertices = a.vertices_;
  auto edges = a.edges_;
  auto rays = a.rays_;
  const int shift = static_cast<int>(vertices.size());
  vertices.insert(vertices.end(), b.vertices_.begin(), b.vertices_.end());
  for (auto e : b.edges_) {
    e.from += shift;
    e.to += shift;
    edges.push_back(e);
  }
  for (auto r : b.rays_) {
    r.from += shift;
    rays.push_back(r);
  }
  return PlaneTropicalCurve(std::move(vertices), std::move(edges), std::move(rays));
}

PlaneTropicalCurve trop_line(const Point2& vertex) {
  return PlaneTropicalCurve({vertex}, {},
                            {{0, LatticePoint(0, 1), 1}, {0, LatticePoint(1, 0), 1}, {0, LatticePoint(-1, -1), 1}});
}

namespace {

std::vector<LatticePoint> weighted_outgoing_sums(const PlaneTropicalCurve& c) {
  std::vector<LatticePoint> sum(c.vertices().size(), LatticePoint::Zero());
  for (const auto& e : c.edges()) {
    sum[static_cast<std::size_t>(e.from)] += e.weight * e.direction;
    sum[static_cast<std::size_t>(e.to)] -= e.weight * e.direction;
  }
  for (const auto& r : c.rays()) sum[static_cast<std::size_t>(r.from)] += r.weight * r.direction;
  return sum;
}

}  // namespace

bool check_balancing(const PlaneTropicalCurve& c) {
  for (const auto& s : weighted_outgoing_sums(c))
    if (s != LatticePoint::Zero()) return false;
  return true;
}

long degree_of(const PlaneTropicalCurve& c) {
  if (!check_balancing(c)) throw std::domain_error("curve is not balanced");
  const std::array<LatticePoint, 3> standard{LatticePoint(0, 1), LatticePoint(1, 0), LatticePoint(-1, -1)};
  std::array<long, 3> count{0, 0, 0};
  for (const auto& r : c.rays()) {
    auto it = std::find(standard.begin(), standard.end(), r.direction);
    if (it == standard.end())
      throw std::domain_error(
          fmt::format("end direction ({},{}) is not one of (0,1), (1,0), (-1,-1)", r.direction(0), r.direction(1)));
    count[static_cast<std::size_t>(it - standard.begin())] += r.weight;
  }
  if (count[0] != count[1] || count[1] != count[2])
    throw std::domain_error(fmt::format("end counts ({}, {}, {}) in directions (0,1), (1,0), (-1,-1) differ", count[0],
                                        count[1], count[2]));
  return count[0];
}

std::string to_string(Incidence i) {
  switch (i) {
    case Incidence::InteriorOfEdge: return "Interior-of-edge";
    case Incidence::Vertex: return "Vertex";
    case Incidence::NotOnCurve: return "NotOnCurve";
  }
  return "?";
}

Incidence point_on_curve(const PlaneTropicalCurve& c, const Point2& q) {
  for (const auto& v : c.vertices())
    if (v == q) return Incidence::Vertex;
  for (const auto& e : c.edges()) {
    const auto& a = c.vertices()[static_cast<std::size_t>(e.from)];
    const auto& b = c.vertices()[static_cast<std::size_t>(e.to)];
    const auto t = positive_multiple(Point2(q - a), e.direction);
    const auto len = positive_multiple(Point2(b - a), e.direction);
    if (t && *t < *len) return Incidence::InteriorOfEdge;
  }
  for (const auto& r : c.rays()) {
    if (positive_multiple(Point2(q - c.vertices()[static_cast<std::size_t>(r.from)]), r.direction))
      return Incidence::InteriorOfEdge;
  }
  return Incidence::NotOnCurve;
}

Incidence point_on_curve(const PlaneTropicalCurve& c, const TropPoint2& q) {
  if (!q.is_finite()) throw std::invalid_argument("point_on_curve needs finite coordinates, got " + q.str());
  return point_on_curve(c, q.finite());
}

namespace {

struct PointLess {
  bool operator()(const Point2& a, const Point2& b) const { return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1); }
};

struct Element {
  Point2 base;
  LatticePoint dir;
  Rational length;  // unused for rays
  bool ray;
  long weight;
  std::vector<Rational> cuts;
};

bool param_in_range(const Element& e, const Rational& s) { return s >= 0 && (e.ray || s <= e.length); }

Rational project(const Element& e, const Point2& p) {
  const Point2 d = to_point2(e.dir);
  return Rational((p - e.base).dot(d) / d.dot(d));
}

Rational cross2(const Point2& a, const Point2& b) { return a(0) * b(1) - a(1) * b(0); }

}  // namespace

DualSubdivision dual_subdivision(const PlaneTropicalCurve& c) {
  const long d = degree_of(c);

  // 1. Planarise: cut every edge and ray at all crossings and overlaps.
  std::vector<Element> elems;
  for (const auto& e : c.edges()) {
    const auto& a = c.vertices()[static_cast<std::size_t>(e.from)];
    const auto& b = c.vertices()[static_cast<std::size_t>(e.to)];
    elems.push_back({a, e.direction, *positive_multiple(Point2(b - a), e.direction), false, e.weight, {}});
  }
  for (const auto& r : c.rays())
    elems.push_back({c.vertices()[static_cast<std::size_t>(r.from)], r.direction, Rational(0), true, r.weight, {}});
  for (auto& e : elems) {
    e.cuts.push_back(Rational(0));
    if (!e.ray) e.cuts.push_back(e.length);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      auto& ei = elems[i];
      auto& ej = elems[j];
      const Point2 di = to_point2(ei.dir), dj = to_point2(ej.dir);
      const Rational den = cross2(di, dj);
      const Point2 w = ej.base - ei.base;
      if (den != 0) {
        const Rational s = cross2(w, dj) / den;
        const Rational t = cross2(w, di) / den;
        if (param_in_range(ei, s) && param_in_range(ej, t)) {
          ei.cuts.push_back(s);
          ej.cuts.push_back(t);
        }
      } else if (cross2(w, di) == 0) {
        auto add_endpoints = [](Element& target, const Element& src) {
          std::vector<Point2> ends{src.base};
          if (!src.ray) ends.push_back(Point2(src.base + src.length * to_point2(src.dir)));
          for (const auto& p : ends) {
            const Rational s = project(target, p);
            if (param_in_range(target, s)) target.cuts.push_back(s);
          }
        };
        add_endpoints(ei, ej);
        add_endpoints(ej, ei);
      }
    }
  }

  std::map<Point2, int, PointLess> ids;
  std::vector<Point2> points;
  auto id_of = [&](const Point2& p) {
    auto [it, inserted] = ids.emplace(p, static_cast<int>(points.size()));
    if (inserted) points.push_back(p);
    return it->second;
  };
  // Pieces keyed by (low id, high id) with direction from low to high.
  std::map<std::pair<int, int>, std::pair<LatticePoint, long>> pieces;
  std::map<std::pair<int, std::pair<long, long>>, long> rays;
  for (auto& e : elems) {
    std::sort(e.cuts.begin(), e.cuts.end());
    e.cuts.erase(std::unique(e.cuts.begin(), e.cuts.end()), e.cuts.end());
    const Point2 dir = to_point2(e.dir);
    for (std::size_t k = 0; k + 1 < e.cuts.size(); ++k) {
      int a = id_of(Point2(e.base + e.cuts[k] * dir));
      int b = id_of(Point2(e.base + e.cuts[k + 1] * dir));
      LatticePoint u = e.dir;
      if (a > b) {
        std::swap(a, b);
        u = -u;
      }
      auto [it, inserted] = pieces.emplace(std::pair{a, b}, std::pair{u, 0L});
      if (it->second.first != u) throw std::domain_error("inconsistent overlapping edges");
      it->second.second += e.weight;
    }
    if (e.ray) {
      const int a = id_of(Point2(e.base + e.cuts.back() * dir));
      rays[{a, {e.dir(0), e.dir(1)}}] += e.weight;
    }
  }

  // 2. Local dual polygons around each arrangement vertex.
  struct Out {
    LatticePoint dir;
    long weight;
    int piece_other;  // neighbouring vertex, -1 for rays
  };
  const auto P = points.size();
  std::vector<std::vector<Out>> outgoing(P);
  for (const auto& [key, val] : pieces) {
    outgoing[static_cast<std::size_t>(key.first)].push_back({val.first, val.second, key.second});
    outgoing[static_cast<std::size_t>(key.second)].push_back({LatticePoint(-val.first), val.second, key.first});
  }
  for (const auto& [key, w] : rays)
    outgoing[static_cast<std::size_t>(key.first)].push_back({LatticePoint(key.second.first, key.second.second), w, -1});
  // Region i sits counter-clockwise after outgoing edge i; regions[v][i] is its monomial.
  std::vector<std::vector<LatticePoint>> regions(P);
  for (std::size_t v = 0; v < P; ++v) {
    auto& out = outgoing[v];
    std::sort(out.begin(), out.end(), [](const Out& a, const Out& b) { return angle_less(a.dir, b.dir); });
    LatticePoint m = LatticePoint::Zero();
    LatticePoint sum = LatticePoint::Zero();
    for (const auto& o : out) sum += o.weight * o.dir;
    if (sum != LatticePoint::Zero()) throw std::domain_error("arrangement vertex is not balanced");
    regions[v].resize(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto& next = out[(i + 1) % out.size()];
      regions[v][i] = m;
      m += next.weight * rotate_cw(next.dir);
    }
  }

  // 3. Glue local polygons along bounded pieces.
  std::vector<std::optional<LatticePoint>> offset(P);
  auto index_of = [&](std::size_t v, int other, const LatticePoint& dir) {
    const auto& out = outgoing[v];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].piece_other == other && out[i].dir == dir) return i;
    throw std::logic_error("missing outgoing edge");
  };
  for (std::size_t start = 0; start < P; ++start) {
    if (offset[start]) continue;
    if (start != 0) throw std::domain_error("curve is not connected after planarisation");
    offset[start] = LatticePoint::Zero();
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      const auto& out = outgoing[v];
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].piece_other < 0) continue;
        const auto w = static_cast<std::size_t>(out[i].piece_other);
        const std::size_t j = index_of(w, static_cast<int>(v), LatticePoint(-out[i].dir));
        // Left of the edge at v is region i; at w that region precedes the reversed edge.
        const std::size_t jprev = (j + outgoing[w].size() - 1) % outgoing[w].size();
        const LatticePoint off = *offset[v] + regions[v][i] - regions[w][jprev];
        if (!offset[w]) {
          offset[w] = off;
          q.push(w);
        } else if (*offset[w] != off) {
          throw std::domain_error("dual polygons do not glue consistently");
        }
      }
    }
  }

  DualSubdivision sub;
  sub.degree = d;
  LatticePoint low(std::numeric_limits<long>::max(), std::numeric_limits<long>::max());
  for (std::size_t v = 0; v < P; ++v) {
    if (outgoing[v].size() < 3) continue;
    LatticePolygon poly;
    for (const auto& m : regions[v]) poly.corners.push_back(m + *offset[v]);
    for (const auto& m : poly.corners) low = low.cwiseMin(m);
    sub.cells.push_back(std::move(poly));
  }
  for (auto& cell : sub.cells)
    for (auto& m : cell.corners) m -= low;
  if (!sub.tiles_triangle()) throw std::domain_error("dual polygons do not tile the triangle of degree " + std::to_string(d));
  return sub;
}

std::string to_svg(const PlaneTropicalCurve& c, const std::vector<Point2>& marked) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  auto extend = [&](const Point2& p) {
    const double x = to_double(p(0)), y = to_double(p(1));
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& v : c.vertices()) extend(v);
  for (const auto& m : marked) extend(m);
  const double span = std::max({xmax - xmin, ymax - ymin, 2.0});
  const double pad = 0.35 * span;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  const double size = 480;
  Viewport vp(xmin, xmax, ymin, ymax, size, size);
  SvgDocument doc(size, size);
  auto label = [&](double x0, double y0, double x1, double y1, long w) {
    if (w > 1) doc.text(vp.x(0.5 * (x0 + x1)) + 8, vp.y(0.5 * (y0 + y1)) - 4, std::to_string(w), 12, "start");
  };
  for (const auto& e : c.edges()) {
    const auto& a = c.vertices()[static_cast<std::size_t>(e.from)];
    const auto& b = c.vertices()[static_cast<std::size_t>(e.to)];
    const double x0 = to_double(a(0)), y0 = to_double(a(1)), x1 = to_double(b(0)), y1 = to_double(b(1));
    doc.line(vp.x(x0), vp.y(y0), vp.x(x1), vp.y(y1), "black", 1.5 * static_cast<double>(e.weight));
    label(x0, y0, x1, y1, e.weight);
  }
  for (const auto& r : c.rays()) {
    const auto& a = c.vertices()[static_cast<std::size_t>(r.from)];
    const double x0 = to_double(a(0)), y0 = to_double(a(1));
    const double dx = static_cast<double>(r.direction(0)), dy = static_cast<double>(r.direction(1));
    double t = 1e300;
    if (dx > 0) t = std::min(t, (xmax - x0) / dx);
    if (dx < 0) t = std::min(t, (xmin - x0) / dx);
    if (dy > 0) t = std::min(t, (ymax - y0) / dy);
    if (dy < 0) t = std::min(t, (ymin - y0) / dy);
    const double x1 = x0 + t * dx, y1 = y0 + t * dy;
    doc.line(vp.x(x0), vp.y(y0), vp.x(x1), vp.y(y1), "black", 1.5 * static_cast<double>(r.weight));
    label(x0, y0, x1, y1, r.weight);
  }
  for (const auto& v : c.vertices()) doc.circle(vp.x(to_double(v(0))), vp.y(to_double(v(1))), 3.5);
  for (const auto& m : marked) doc.circle(vp.x(to_double(m(0))), vp.y(to_double(m(1))), 4.5, "red");
  return doc.str();
}

}  // namespace padtrop
