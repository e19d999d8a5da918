#include "padtrop/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace padtrop {

namespace {

using DirectedEdge = std::pair<LatticePoint, LatticePoint>;

struct EdgeLess {
  bool operator()(const DirectedEdge& a, const DirectedEdge& b) const {
    LatticeLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

using PointSet = std::set<LatticePoint, LatticeLess>;
using Frontier = std::set<DirectedEdge, EdgeLess>;

// Cell uses no point of V except its corners, on its boundary or inside.
bool clean_cell(const LatticePolygon& cell, const PointSet& V) {
  for (const auto& q : V) {
    if (std::find(cell.corners.begin(), cell.corners.end(), q) != cell.corners.end()) continue;
    if (cell.contains_strictly(q) || cell.on_boundary(q)) return false;
  }
  return true;
}

class Tiler {
 public:
  Tiler(long d, PointSet V) : d_(d), V_(std::move(V)) {}

  std::vector<DualSubdivision> run() {
    Frontier frontier;
    std::vector<LatticePoint> ring;
    for (long x = 0; x < d_; ++x) ring.emplace_back(x, 0);
    for (long x = d_; x > 0; --x) ring.emplace_back(x, d_ - x);
    for (long y = d_; y > 0; --y) ring.emplace_back(0, y);
    for (std::size_t i = 0; i < ring.size(); ++i) frontier.insert({ring[i], ring[(i + 1) % ring.size()]});
    recurse(frontier);
    return std::move(out_);
  }

 private:
  void recurse(Frontier& frontier) {
    if (frontier.empty()) {
      out_.push_back(DualSubdivision{d_, cells_});
      return;
    }
    const auto [a, b] = *frontier.begin();
    const LatticePoint ab = b - a;
    for (const auto& c : V_) {
      if (cross(ab, LatticePoint(c - a)) <= 0) continue;
      try_cell(LatticePolygon{{a, b, c}}, frontier);
      const LatticePoint w = c - b;
      const LatticePoint last = a + w;
      if (V_.count(last)) try_cell(LatticePolygon{{a, b, c, last}}, frontier);
    }
  }

  void try_cell(const LatticePolygon& cell, Frontier& frontier) {
    if (!clean_cell(cell, V_)) return;
    for (const auto& placed : cells_)
      if (interiors_overlap(placed, cell)) return;
    std::vector<DirectedEdge> removed, added;
    const auto& cs = cell.corners;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      DirectedEdge e{cs[i], cs[(i + 1) % cs.size()]};
      if (frontier.erase(e)) {
        removed.push_back(e);
      } else {
        DirectedEdge rev{e.second, e.first};
        frontier.insert(rev);
        added.push_back(rev);
      }
    }
    cells_.push_back(cell);
    recurse(frontier);
    cells_.pop_back();
    for (const auto& e : added) frontier.erase(e);
    for (const auto& e : removed) frontier.insert(e);
  }

  long d_;
  PointSet V_;
  std::vector<LatticePolygon> cells_;
  std::vector<DualSubdivision> out_;
};

}  // namespace

Semigraph resolved_semigraph(const DualSubdivision& s) {
  Semigraph g;
  // Vertex of each (cell, corner index of the edge start) pair.
  std::vector<std::vector<int>> vertex_of_edge(s.cells.size());
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const auto& cell = s.cells[c];
    vertex_of_edge[c].resize(cell.corners.size());
    if (cell.is_parallelogram()) {
      const int u = g.vertex_count++, v = g.vertex_count++;
      vertex_of_edge[c] = {u, v, u, v};
    } else {
      const int u = g.vertex_count++;
      std::fill(vertex_of_edge[c].begin(), vertex_of_edge[c].end(), u);
    }
  }
  std::map<DirectedEdge, int, EdgeLess> open;
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const auto& cs = s.cells[c].corners;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const DirectedEdge e{cs[i], cs[(i + 1) % cs.size()]};
      const DirectedEdge rev{e.second, e.first};
      auto it = open.find(rev);
      if (it != open.end()) {
        g.edges.emplace_back(it->second, vertex_of_edge[c][i]);
        open.erase(it);
      } else {
        open.emplace(e, vertex_of_edge[c][i]);
      }
    }
  }
  for (const auto& [e, v] : open) g.ends.push_back(v);
  return g;
}

std::vector<DualSubdivision> enumerate_simple_subdivisions(long d, long g) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<LatticePoint> interior;
  PointSet boundary;
  for (const auto& q : triangle_points(d)) {
    if (on_triangle_boundary(d, q))
      boundary.insert(q);
    else
      interior.push_back(q);
  }
  if (interior.size() > 20) throw std::out_of_range("degree too large for subdivision enumeration");
  std::vector<DualSubdivision> out;
  for (std::uint32_t mask = 0; mask < (1u << interior.size()); ++mask) {
    // Genus is at most the number of interior vertices.
    if (std::popcount(mask) < g) continue;
    PointSet V = boundary;
    for (std::size_t i = 0; i < interior.size(); ++i)
      if (mask & (1u << i)) V.insert(interior[i]);
    for (auto& s : Tiler(d, V).run()) {
      const Semigraph sg = resolved_semigraph(s);
      int b1 = -1;
      try {
        b1 = betti_number(sg);
      } catch (const std::invalid_argument&) {
        continue;  // reducible curve
      }
      if (b1 != g) continue;
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace padtrop
