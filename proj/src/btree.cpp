#include "padtrop/btree.hpp"

#include "padtrop/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace padtrop {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

MarkedTree::MarkedTree(int vertex_count, std::vector<TreeEdge> edges, std::vector<int> end_vertices,
                       std::vector<Rational> depths, int reference_end)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      end_vertices_(std::move(end_vertices)),
      depths_(std::move(depths)),
      reference_end_(reference_end) {
  const int n = num_ends();
  if (n < 3) throw std::invalid_argument("a marked tree needs at least 3 ends");
  if (n > 32) throw std::invalid_argument("at most 32 ends are supported");
  if (vertex_count_ < 1) throw std::invalid_argument("a marked tree needs an internal vertex");
  if (static_cast<int>(edges_.size()) != vertex_count_ - 1) throw std::invalid_argument("marked tree is not a tree");
  if (!depths_.empty() && static_cast<int>(depths_.size()) != vertex_count_)
    throw std::invalid_argument("depth list does not match vertex count");
  if (reference_end_ < 1 || reference_end_ > n) throw std::invalid_argument("reference end out of range");
  UnionFind uf(vertex_count_);
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_ || e.u == e.v)
      throw std::invalid_argument("bad tree edge");
    if (e.length <= 0) throw std::invalid_argument("internal edge lengths must be positive");
    if (!uf.unite(e.u, e.v)) throw std::invalid_argument("marked tree contains a cycle");
  }
  for (int v : end_vertices_)
    if (v < 0 || v >= vertex_count_) throw std::invalid_argument("end attached to unknown vertex");
  for (int v = 0; v < vertex_count_; ++v)
    if (degree(v) < 3) throw std::invalid_argument(fmt::format("vertex {} has degree {} < 3", v, degree(v)));
}

int MarkedTree::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  for (int w : end_vertices_) d += (w == v);
  return d;
}

std::vector<int> MarkedTree::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  return out;
}

int MarkedTree::branch_vertex(int i, int j) const {
  auto hops = [&](int src) {
    std::vector<int> dist(static_cast<std::size_t>(vertex_count_), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : neighbours(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return dist;
  };
  const auto da = hops(end_vertex(i));
  const auto db = hops(end_vertex(j));
  const auto dr = hops(end_vertex(reference_end_));
  int best = 0;
  for (int v = 1; v < vertex_count_; ++v) {
    const auto s = [&](int x) {
      const auto k = static_cast<std::size_t>(x);
      return da[k] + db[k] + dr[k];
    };
    if (s(v) < s(best)) best = v;
  }
  return best;
}

Split normalize_split(Split side, int n) {
  const Split all = n == 32 ? ~Split{0} : ((Split{1} << n) - 1);
  return (side & 1u) ? (all & ~side) : side;
}

CombType::CombType(int n, std::vector<Split> splits) : n_(n), splits_(std::move(splits)) {
  if (n_ < 3 || n_ > 32) throw std::invalid_argument("CombType needs 3 <= n <= 32");
  for (auto& s : splits_) {
    s = normalize_split(s, n_);
    const int size = std::popcount(s);
    if (size < 2 || size > n_ - 2) throw std::invalid_argument("split does not come from an internal edge");
  }
  std::sort(splits_.begin(), splits_.end());
  if (std::adjacent_find(splits_.begin(), splits_.end()) != splits_.end())
    throw std::invalid_argument("repeated split");
  for (std::size_t a = 0; a < splits_.size(); ++a)
    for (std::size_t b = a + 1; b < splits_.size(); ++b) {
      const Split x = splits_[a], y = splits_[b];
      // Both sides exclude label 1, so compatibility means nested or disjoint.
      if ((x & y) != 0 && (x & y) != x && (x & y) != y) throw std::invalid_argument("incompatible splits");
    }
}

std::strong_ordering operator<=>(const CombType& a, const CombType& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.dimension() <=> b.dimension(); c != 0) return c;
  return a.splits_ <=> b.splits_;
}

std::string CombType::str() const {
  if (splits_.empty()) return "star";
  const Split all = (n_ == 32) ? ~Split{0} : ((Split{1} << n_) - 1);
  auto side = [&](Split s) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
      if (!(s >> i & 1u)) continue;
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  };
  std::string out;
  for (std::size_t k = 0; k < splits_.size(); ++k) {
    if (k) out += " ";
    out += side(all & ~splits_[k]) + "|" + side(splits_[k]);
  }
  return out;
}

namespace {

// Ends on the far side of each internal edge, seen from end 1.
std::vector<std::pair<Split, std::size_t>> splits_with_edges(const MarkedTree& tree) {
  const int V = tree.num_vertices();
  std::vector<Split> end_mask(static_cast<std::size_t>(V), 0);
  for (int label = 1; label <= tree.num_ends(); ++label)
    end_mask[static_cast<std::size_t>(tree.end_vertex(label))] |= Split{1} << (label - 1);
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(V));
  for (std::size_t k = 0; k < tree.edges().size(); ++k) {
    const auto& e = tree.edges()[k];
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, k});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, k});
  }
  std::vector<std::pair<Split, std::size_t>> out;
  std::function<Split(int, int)> dfs = [&](int v, int parent) -> Split {
    Split m = end_mask[static_cast<std::size_t>(v)];
    for (auto [w, k] : adj[static_cast<std::size_t>(v)]) {
      if (w == parent) continue;
      const Split sub = dfs(w, v);
      out.push_back({sub, k});
      m |= sub;
    }
    return m;
  };
  dfs(tree.end_vertex(1), -1);
  return out;
}

}  // namespace

CombType comb_type_of(const MarkedTree& tree) {
  std::vector<Split> splits;
  for (const auto& [s, k] : splits_with_edges(tree)) splits.push_back(s);
  return CombType(tree.num_ends(), std::move(splits));
}

bool is_binary(const MarkedTree& tree) { return comb_type_of(tree).is_binary(); }

std::vector<Rational> edge_lengths_by_split(const MarkedTree& tree) {
  auto pairs = splits_with_edges(tree);
  std::sort(pairs.begin(), pairs.end());
  std::vector<Rational> out;
  for (const auto& [s, k] : pairs) out.push_back(tree.edges()[k].length);
  return out;
}

MarkedTree tree_of(const CombType& type, std::vector<Rational> lengths) {
  const int n = type.n();
  const auto& splits = type.splits();
  if (lengths.empty()) lengths.assign(splits.size(), Rational(1));
  if (lengths.size() != splits.size()) throw std::invalid_argument("one length per internal edge required");
  // Clusters seen from end 1: the root cluster {2..n} plus every split.
  const Split root = normalize_split(1u, n);
  std::vector<Split> clusters{root};
  clusters.insert(clusters.end(), splits.begin(), splits.end());
  auto parent_of = [&](Split c) {
    int best = -1;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      const Split d = clusters[k];
      if (d != c && (c & d) == c && (best < 0 || std::popcount(d) < std::popcount(clusters[static_cast<std::size_t>(best)])))
        best = static_cast<int>(k);
    }
    return best;
  };
  std::vector<TreeEdge> edges;
  for (std::size_t k = 1; k < clusters.size(); ++k)
    edges.push_back({parent_of(clusters[k]), static_cast<int>(k), lengths[k - 1]});
  std::vector<int> ends(static_cast<std::size_t>(n));
  ends[0] = 0;
  for (int label = 2; label <= n; ++label) ends[static_cast<std::size_t>(label - 1)] = parent_of(Split{1} << (label - 1));
  return MarkedTree(static_cast<int>(clusters.size()), std::move(edges), std::move(ends));
}

MarkedTree build_dendrogram(const std::vector<ProjPoint1>& points, const FieldParams& params) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw std::invalid_argument("build_dendrogram needs at least 3 points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[static_cast<std::size_t>(i)] == points[static_cast<std::size_t>(j)])
        throw std::invalid_argument(fmt::format("duplicate points at positions {} and {}", i + 1, j + 1));

  std::vector<ProjPoint1> pts = points;
  int ref = -1;
  for (int i = 0; i < n && ref < 0; ++i)
    if (pts[static_cast<std::size_t>(i)].is_infinity()) ref = i;
  if (ref < 0) {
    const Moebius m = normalize_to_standard_triple(pts[0], pts[1], pts[2]);
    for (auto& z : pts) z = m(z);
    ref = 2;
  }

  std::vector<int> finite;
  for (int i = 0; i < n; ++i)
    if (i != ref) finite.push_back(i);
  const auto m = finite.size();
  std::vector<std::vector<Rational>> depth(m, std::vector<Rational>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Rational diff = pts[static_cast<std::size_t>(finite[a])].affine() - pts[static_cast<std::size_t>(finite[b])].affine();
      depth[a][b] = depth[b][a] = val(diff, params).value();
    }

  std::vector<TreeEdge> edges;
  std::vector<Rational> vertex_depth;
  std::vector<int> ends(static_cast<std::size_t>(n), -1);

  // Discs containing >= 2 punctures become vertices; equal depths merge.
  std::function<int(const std::vector<std::size_t>&)> build = [&](const std::vector<std::size_t>& cluster) -> int {
    Rational delta = depth[cluster[0]][cluster[1]];
    for (std::size_t a = 0; a < cluster.size(); ++a)
      for (std::size_t b = a + 1; b < cluster.size(); ++b)
        if (depth[cluster[a]][cluster[b]] < delta) delta = depth[cluster[a]][cluster[b]];
    const int v = static_cast<int>(vertex_depth.size());
    vertex_depth.push_back(delta);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x : cluster) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return depth[c[0]][x] > delta; });
      if (it == classes.end())
        classes.push_back({x});
      else
        it->push_back(x);
    }
    for (const auto& c : classes) {
      if (c.size() == 1) {
        ends[static_cast<std::size_t>(finite[c[0]])] = v;
      } else {
        const int child = build(c);
        edges.push_back({v, child, vertex_depth[static_cast<std::size_t>(child)] - delta});
      }
    }
    return v;
  };
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const int root = build(all);
  ends[static_cast<std::size_t>(ref)] = root;
  const int count = static_cast<int>(vertex_depth.size());
  return MarkedTree(count, std::move(edges), std::move(ends), std::move(vertex_depth),
                    ref + 1);
}

namespace {

// Explicit tree used during enumeration; leaf nodes carry labels.
struct Shape {
  std::vector<std::array<int, 2>> edges;
  std::vector<int> label;  // 0 for internal nodes, label otherwise

  int add_node(int l) {
    label.push_back(l);
    return static_cast<int>(label.size()) - 1;
  }
};

CombType type_of_shape(const Shape& s, int n) {
  const auto nodes = s.label.size();
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& e : s.edges) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  int leaf1 = 0;
  for (std::size_t v = 0; v < nodes; ++v)
    if (s.label[v] == 1) leaf1 = static_cast<int>(v);
  std::vector<Split> splits;
  std::function<Split(int, int)> dfs = [&](int v, int parent) -> Split {
    const int l = s.label[static_cast<std::size_t>(v)];
    Split m = l ? Split{1} << (l - 1) : 0;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == parent) continue;
      const Split sub = dfs(w, v);
      if (l == 0 && s.label[static_cast<std::size_t>(w)] == 0) splits.push_back(sub);
      m |= sub;
    }
    return m;
  };
  dfs(leaf1, -1);
  return CombType(n, std::move(splits));
}

void insert_leaves(Shape& s, int next, int n, std::vector<CombType>& out) {
  if (next > n) {
    out.push_back(type_of_shape(s, n));
    return;
  }
  const int nodes = static_cast<int>(s.label.size());
  // Attach to an existing internal vertex.
  for (int v = 0; v < nodes; ++v) {
    if (s.label[static_cast<std::size_t>(v)] != 0) continue;
    const int leaf = s.add_node(next);
    s.edges.push_back({v, leaf});
    insert_leaves(s, next + 1, n, out);
    s.edges.pop_back();
    s.label.pop_back();
  }
  // Subdivide an edge.
  const std::size_t edge_count = s.edges.size();
  for (std::size_t k = 0; k < edge_count; ++k) {
    const auto old = s.edges[k];
    const int w = s.add_node(0);
    const int leaf = s.add_node(next);
    s.edges[k] = {old[0], w};
    s.edges.push_back({w, old[1]});
    s.edges.push_back({w, leaf});
    insert_leaves(s, next + 1, n, out);
    s.edges.pop_back();
    s.edges.pop_back();
    s.edges[k] = old;
    s.label.pop_back();
    s.label.pop_back();
  }
}

}  // namespace

std::vector<CombType> enumerate_comb_types(int n) {
  if (n < 3 || n > 9) throw std::out_of_range("enumerate_comb_types supports 3 <= n <= 9");
  Shape s;
  const int centre = s.add_node(0);
  for (int l = 1; l <= 3; ++l) s.edges.push_back({centre, s.add_node(l)});
  std::vector<CombType> out;
  insert_leaves(s, 4, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t binary_count(int n) {
  if (n < 3) throw std::invalid_argument("binary_count needs n >= 3");
  std::uint64_t r = 1;
  for (int k = 3; k <= 2 * n - 5; k += 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

Semigraph semigraph_of(const MarkedTree& tree) {
  Semigraph g;
  g.vertex_count = tree.num_vertices();
  for (const auto& e : tree.edges()) g.edges.push_back({e.u, e.v});
  for (int label = 1; label <= tree.num_ends(); ++label) g.ends.push_back(tree.end_vertex(label));
  return g;
}

int betti_number(const Semigraph& g) {
  if (g.vertex_count < 1) throw std::invalid_argument("semigraph has no vertices");
  UnionFind uf(g.vertex_count);
  int components = g.vertex_count;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) throw std::invalid_argument("bad semigraph edge");
    if (uf.unite(u, v)) --components;
  }
  if (components != 1) throw std::invalid_argument("semigraph is disconnected");
  return static_cast<int>(g.edges.size()) - g.vertex_count + 1;
}

bool is_mumford_tropicalization(const Semigraph& g, int genus) { return betti_number(g) == genus; }

namespace {

std::string end_name(const std::vector<std::string>& names, int label) {
  if (label - 1 < static_cast<int>(names.size())) return names[static_cast<std::size_t>(label - 1)];
  return std::to_string(label);
}

struct Layout {
  std::vector<double> vx, vy;       // internal vertices
  std::vector<double> ex, ey;       // ends, index label-1
  double ymin = 0, ymax = 0;
};

Layout layout_tree(const MarkedTree& tree) {
  const int V = tree.num_vertices();
  const int n = tree.num_ends();
  Layout L;
  L.vx.assign(static_cast<std::size_t>(V), 0);
  L.vy.assign(static_cast<std::size_t>(V), 0);
  L.ex.assign(static_cast<std::size_t>(n), 0);
  L.ey.assign(static_cast<std::size_t>(n), 0);
  const int ref = tree.reference_end();
  const int root = tree.end_vertex(ref);

  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(V));
  for (const auto& e : tree.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, to_double(e.length)});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, to_double(e.length)});
  }
  // Depth: stored valuations when present, accumulated lengths otherwise.
  std::function<void(int, int, double)> place_depth = [&](int v, int parent, double d) {
    L.vy[static_cast<std::size_t>(v)] = tree.has_depths() ? to_double(tree.depth(v)) : d;
    for (auto [w, len] : adj[static_cast<std::size_t>(v)])
      if (w != parent) place_depth(w, v, d + len);
  };
  place_depth(root, -1, 0.0);
  double deepest = *std::max_element(L.vy.begin(), L.vy.end());
  double shallowest = *std::min_element(L.vy.begin(), L.vy.end());

  double next_x = 0;
  std::function<double(int, int)> place_x = [&](int v, int parent) -> double {
    double sum = 0;
    int count = 0;
    for (auto [w, len] : adj[static_cast<std::size_t>(v)]) {
      if (w == parent) continue;
      sum += place_x(w, v);
      ++count;
    }
    for (int label = 1; label <= n; ++label) {
      if (label == ref || tree.end_vertex(label) != v) continue;
      L.ex[static_cast<std::size_t>(label - 1)] = next_x;
      L.ey[static_cast<std::size_t>(label - 1)] = deepest + 1;
      sum += next_x;
      next_x += 1;
      ++count;
    }
    L.vx[static_cast<std::size_t>(v)] = sum / count;
    return L.vx[static_cast<std::size_t>(v)];
  };
  place_x(root, -1);
  L.ex[static_cast<std::size_t>(ref - 1)] = L.vx[static_cast<std::size_t>(root)];
  L.ey[static_cast<std::size_t>(ref - 1)] = shallowest - 1;
  L.ymin = shallowest - 1;
  L.ymax = deepest + 1;
  return L;
}

}  // namespace

std::string to_dot(const MarkedTree& tree, const std::vector<std::string>& end_names) {
  std::string out = "graph dendrogram {\n  node [shape=point, width=0.08];\n";
  for (int v = 0; v < tree.num_vertices(); ++v) {
    if (tree.has_depths())
      out += fmt::format("  v{} [xlabel=\"depth {}\"];\n", v, to_string(tree.depth(v)));
    else
      out += fmt::format("  v{};\n", v);
  }
  for (int label = 1; label <= tree.num_ends(); ++label)
    out += fmt::format("  e{} [shape=plaintext, width=0, label=\"{}\"];\n", label, end_name(end_names, label));
  for (const auto& e : tree.edges())
    out += fmt::format("  v{} -- v{} [label=\"{}\"];\n", e.u, e.v, to_string(e.length));
  for (int label = 1; label <= tree.num_ends(); ++label)
    out += fmt::format("  v{} -- e{};\n", tree.end_vertex(label), label);
  out += "}\n";
  return out;
}

std::string to_svg(const MarkedTree& tree, const std::vector<std::string>& end_names) {
  const Layout L = layout_tree(tree);
  const double xmax = std::max(1.0, static_cast<double>(tree.num_ends() - 2));
  const double width = 120.0 + 60.0 * tree.num_ends();
  const double height = 320.0;
  // Depth grows downwards, so flip the data y-axis.
  Viewport vp(-0.5, xmax + 0.5, -L.ymax, -L.ymin, width, height);
  SvgDocument doc(width, height);
  for (const auto& e : tree.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    doc.line(vp.x(L.vx[u]), vp.y(-L.vy[u]), vp.x(L.vx[v]), vp.y(-L.vy[v]));
    doc.text(vp.x(0.5 * (L.vx[u] + L.vx[v])) + 6, vp.y(-0.5 * (L.vy[u] + L.vy[v])), to_string(e.length), 10, "start");
  }
  for (int label = 1; label <= tree.num_ends(); ++label) {
    const auto k = static_cast<std::size_t>(label - 1);
    const auto v = static_cast<std::size_t>(tree.end_vertex(label));
    doc.line(vp.x(L.vx[v]), vp.y(-L.vy[v]), vp.x(L.ex[k]), vp.y(-L.ey[k]), "black", 1.5);
    const double dy = label == tree.reference_end() ? -6 : 16;
    doc.text(vp.x(L.ex[k]), vp.y(-L.ey[k]) + dy, end_name(end_names, label), 13);
  }
  for (int v = 0; v < tree.num_vertices(); ++v)
    doc.circle(vp.x(L.vx[static_cast<std::size_t>(v)]), vp.y(-L.vy[static_cast<std::size_t>(v)]), 4);
  return doc.str();
}

}  // namespace padtrop
