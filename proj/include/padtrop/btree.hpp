#pragma once

// Marked trees spanned by punctures in the Bruhat-Tits tree, their
// combinatorial types (cells of the tropical moduli space M_{0,n}), and
// semigraphs with the Betti-number criterion.

#include "padtrop/padic.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace padtrop {

struct TreeEdge {
  int u;
  int v;
  Rational length;
};

// Metric tree with n labelled ends. Vertices 0..V-1 are internal; end with
// label i (1-based) hangs off end_vertex(i). Optional per-vertex depth is the
// valuation of the disc a dendrogram vertex stands for.
class MarkedTree {
 public:
  MarkedTree(int vertex_count, std::vector<TreeEdge> edges, std::vector<int> end_vertices,
             std::vector<Rational> depths = {}, int reference_end = 1);

  int num_ends() const { return static_cast<int>(end_vertices_.size()); }
  int num_vertices() const { return vertex_count_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  int end_vertex(int label) const { return end_vertices_.at(static_cast<std::size_t>(label - 1)); }
  int degree(int v) const;
  bool has_depths() const { return !depths_.empty(); }
  const Rational& depth(int v) const { return depths_.at(static_cast<std::size_t>(v)); }
  // The end drawn at the top of a dendrogram (the puncture at infinity).
  int reference_end() const { return reference_end_; }

  // Vertex where the paths between ends i, j and the reference end meet.
  int branch_vertex(int i, int j) const;
  std::vector<int> neighbours(int v) const;

 private:
  int vertex_count_;
  std::vector<TreeEdge> edges_;
  std::vector<int> end_vertices_;
  std::vector<Rational> depths_;
  int reference_end_;
};

// Bitmask of end labels (bit i <-> label i+1) on one side of an internal edge,
// normalised to the side not containing label 1.
using Split = std::uint32_t;

// Length-free tree shape with labelled ends: a cell of M_{0,n}^trop.
class CombType {
 public:
  CombType(int n, std::vector<Split> splits);

  int n() const { return n_; }
  const std::vector<Split>& splits() const { return splits_; }
  int dimension() const { return static_cast<int>(splits_.size()); }
  bool is_binary() const { return dimension() == n_ - 3; }
  // e.g. "{1,2}|{3,4}" per internal edge, "star" when there are none.
  std::string str() const;

  friend bool operator==(const CombType&, const CombType&) = default;
  friend std::strong_ordering operator<=>(const CombType& a, const CombType& b);

 private:
  int n_;
  std::vector<Split> splits_;
};

Split normalize_split(Split side, int n);

CombType comb_type_of(const MarkedTree& tree);
bool is_binary(const MarkedTree& tree);
// Internal edge lengths ordered like comb_type_of(tree).splits().
std::vector<Rational> edge_lengths_by_split(const MarkedTree& tree);
// Realises a type with the given lengths (unit lengths when empty).
MarkedTree tree_of(const CombType& type, std::vector<Rational> lengths = {});

MarkedTree build_dendrogram(const std::vector<ProjPoint1>& points, const FieldParams& params);

// All cells of M_{0,n}^trop, ordered by dimension then splits. 3 <= n <= 9.
std::vector<CombType> enumerate_comb_types(int n);
// (2n-5)!!
std::uint64_t binary_count(int n);

struct Semigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // loops and parallel edges allowed
  std::vector<int> ends;                   // vertex of each labelled end
};

Semigraph semigraph_of(const MarkedTree& tree);
int betti_number(const Semigraph& g);
bool is_mumford_tropicalization(const Semigraph& g, int genus);

// Dendrogram drawings: reference end on top, depth growing downwards.
std::string to_dot(const MarkedTree& tree, const std::vector<std::string>& end_names = {});
std::string to_svg(const MarkedTree& tree, const std::vector<std::string>& end_names = {});

}  // namespace padtrop
