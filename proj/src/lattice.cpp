#include "padtrop/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace padtrop {

long lattice_length(const LatticePoint& v) { return std::gcd(std::abs(v(0)), std::abs(v(1))); }

LatticePoint primitive(const LatticePoint& v) {
  const long g = lattice_length(v);
  return g == 0 ? v : LatticePoint(v(0) / g, v(1) / g);
}

bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  auto half = [](const LatticePoint& v) { return (v(1) < 0 || (v(1) == 0 && v(0) < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

long LatticePolygon::twice_area() const {
  long s = 0;
  for (std::size_t i = 0; i < corners.size(); ++i) s += cross(corners[i], corners[(i + 1) % corners.size()]);
  return s;
}

bool LatticePolygon::is_parallelogram() const {
  return corners.size() == 4 && corners[0] + corners[2] == corners[1] + corners[3];
}

bool LatticePolygon::contains_strictly(const LatticePoint& q) const {
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto& a = corners[i];
    const auto& b = corners[(i + 1) % corners.size()];
    if (cross(LatticePoint(b - a), LatticePoint(q - a)) <= 0) return false;
  }
  return true;
}

bool LatticePolygon::on_boundary(const LatticePoint& q) const {
  bool touching = false;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto& a = corners[i];
    const auto& b = corners[(i + 1) % corners.size()];
    const long c = cross(LatticePoint(b - a), LatticePoint(q - a));
    if (c < 0) return false;
    if (c == 0) touching = true;
  }
  return touching;
}

bool in_triangle(long d, const LatticePoint& q) { return q(0) >= 0 && q(1) >= 0 && q(0) + q(1) <= d; }

bool on_triangle_boundary(long d, const LatticePoint& q) {
  return in_triangle(d, q) && (q(0) == 0 || q(1) == 0 || q(0) + q(1) == d);
}

std::vector<LatticePoint> triangle_points(long d) {
  std::vector<LatticePoint> out;
  for (long x = 0; x <= d; ++x)
    for (long y = 0; x + y <= d; ++y) out.emplace_back(x, y);
  return out;
}

std::vector<SubdivisionEdge> DualSubdivision::edges() const {
  std::map<std::pair<LatticePoint, LatticePoint>, int, decltype([](const auto& u, const auto& v) {
             LatticeLess less;
             if (less(u.first, v.first)) return true;
             if (less(v.first, u.first)) return false;
             return less(u.second, v.second);
           })>
      count;
  for (const auto& cell : cells) {
    for (std::size_t i = 0; i < cell.corners.size(); ++i) {
      LatticePoint a = cell.corners[i];
      LatticePoint b = cell.corners[(i + 1) % cell.corners.size()];
      if (LatticeLess{}(b, a)) std::swap(a, b);
      ++count[{a, b}];
    }
  }
  std::vector<SubdivisionEdge> out;
  for (const auto& [key, c] : count) out.push_back({key.first, key.second, c == 2});
  return out;
}

std::vector<LatticePoint> DualSubdivision::vertices() const {
  std::set<LatticePoint, LatticeLess> s;
  for (const auto& cell : cells) s.insert(cell.corners.begin(), cell.corners.end());
  return {s.begin(), s.end()};
}

std::vector<LatticePoint> DualSubdivision::interior_vertices() const {
  std::vector<LatticePoint> out;
  for (const auto& v : vertices())
    if (!on_triangle_boundary(degree, v)) out.push_back(v);
  return out;
}

int DualSubdivision::parallelogram_count() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.is_parallelogram(); }));
}

int DualSubdivision::simple_genus() const {
  return static_cast<int>(interior_vertices().size()) - parallelogram_count();
}

bool DualSubdivision::tiles_triangle() const {
  long area = 0;
  for (const auto& c : cells) {
    if (c.twice_area() <= 0) return false;
    for (const auto& v : c.corners)
      if (!in_triangle(degree, v)) return false;
    area += c.twice_area();
  }
  if (area != degree * degree) return false;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (interiors_overlap(cells[i], cells[j])) return false;
  return true;
}

std::string DualSubdivision::str() const {
  std::string out;
  for (const auto& c : cells) {
    out += "[";
    for (std::size_t i = 0; i < c.corners.size(); ++i) {
      if (i) out += " ";
      out += "(" + std::to_string(c.corners[i](0)) + "," + std::to_string(c.corners[i](1)) + ")";
    }
    out += "]";
  }
  return out;
}

bool interiors_overlap(const LatticePolygon& p, const LatticePolygon& q) {
  auto separated_by = [](const LatticePolygon& a, const LatticePolygon& b, const LatticePolygon& src) {
    for (std::size_t i = 0; i < src.corners.size(); ++i) {
      const LatticePoint e = src.corners[(i + 1) % src.corners.size()] - src.corners[i];
      const LatticePoint nrm(e(1), -e(0));
      long amin = nrm.dot(a.corners[0]), amax = amin, bmin = nrm.dot(b.corners[0]), bmax = bmin;
      for (const auto& v : a.corners) {
        amin = std::min(amin, nrm.dot(v));
        amax = std::max(amax, nrm.dot(v));
      }
      for (const auto& v : b.corners) {
        bmin = std::min(bmin, nrm.dot(v));
        bmax = std::max(bmax, nrm.dot(v));
      }
      if (amax <= bmin || bmax <= amin) return true;
    }
    return false;
  };
  return !separated_by(p, q, p) && !separated_by(p, q, q);
}

}  // namespace padtrop
