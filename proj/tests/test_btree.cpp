#include "padtrop/amplitude.hpp"
#include "padtrop/btree.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace padtrop;

namespace {

std::vector<ProjPoint1> pts(std::initializer_list<const char*> s) {
  std::vector<ProjPoint1> out;
  for (const char* t : s) out.push_back(parse_proj_point1(t));
  return out;
}

// Extended valuation of x_i - x_j; a pair with infinity counts as -inf.
struct PairVal {
  bool minus_inf;
  Rational v;
};

PairVal pair_val(const ProjPoint1& a, const ProjPoint1& b, const FieldParams& f) {
  if (a.is_infinity() || b.is_infinity()) return {true, 0};
  return {false, val(a.affine() - b.affine(), f).value()};
}

// Four-point condition: {i,j}|{k,l} is a split iff v_ij + v_kl exceeds the
// other two pairings, which are then equal. Returns the split as a bitmask not
// containing label 1 (0 for the star) and the internal edge length.
std::pair<Split, Rational> four_point_oracle(const std::vector<ProjPoint1>& x, const FieldParams& f) {
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  // A pairing contains the infinite point at most once, so -inf cancels.
  std::vector<Rational> s;
  for (const auto& q : pairings) {
    const PairVal a = pair_val(x[static_cast<std::size_t>(q[0])], x[static_cast<std::size_t>(q[1])], f);
    const PairVal b = pair_val(x[static_cast<std::size_t>(q[2])], x[static_cast<std::size_t>(q[3])], f);
    s.push_back((a.minus_inf ? Rational(0) : a.v) + (b.minus_inf ? Rational(0) : b.v));
  }
  const auto best = static_cast<std::size_t>(std::max_element(s.begin(), s.end()) - s.begin());
  Rational second(-1000000);
  for (std::size_t i = 0; i < 3; ++i)
    if (i != best) second = std::max(second, s[i]);
  if (s[best] == second) return {0, 0};
  const int* q = pairings[best];
  return {Split{1} << q[2] | Split{1} << q[3], s[best] - second};
}

Rational random_rational(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long> num(-60, 60), den(1, 12), k(-2, 2);
  long n = num(rng);
  while (n == 0) n = num(rng);
  return Rational(n, den(rng)) * power(p, k(rng));
}

std::vector<ProjPoint1> random_config(std::mt19937_64& rng, long p, int n, bool with_infinity) {
  std::vector<ProjPoint1> out;
  if (with_infinity) out.push_back(ProjPoint1::infinity());
  while (static_cast<int>(out.size()) < n) {
    const ProjPoint1 q = ProjPoint1::finite(std::uniform_int_distribution<int>(0, 6)(rng) == 0 ? Rational(0) : random_rational(rng, p));
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// Type with label i renamed perm[i - 1].
CombType relabel(const CombType& t, const std::vector<int>& perm) {
  std::vector<Split> splits;
  for (Split s : t.splits()) {
    Split out = 0;
    for (int i = 0; i < t.n(); ++i)
      if (s >> i & 1U) out |= Split{1} << (perm[static_cast<std::size_t>(i)] - 1);
    splits.push_back(normalize_split(out, t.n()));
  }
  return CombType(t.n(), splits);
}

}  // namespace

TEST_CASE("dendrogram examples") {
  const FieldParams f5(5);
  const MarkedTree b = build_dendrogram(pts({"0", "1", "inf", "5"}), f5);
  CHECK(four_point_cell_name(comb_type_of(b)) == "B");
  CHECK(is_binary(b));
  REQUIRE(b.edges().size() == 1);
  CHECK(b.edges()[0].length == 1);
  CHECK(b.end_vertex(1) == b.end_vertex(4));

  const MarkedTree d = build_dendrogram(pts({"0", "1", "inf", "2"}), f5);
  CHECK(four_point_cell_name(comb_type_of(d)) == "D");
  CHECK_FALSE(is_binary(d));
  CHECK(d.num_vertices() == 1);

  const MarkedTree c = build_dendrogram(pts({"0", "1", "inf", "6"}), f5);
  CHECK(four_point_cell_name(comb_type_of(c)) == "C");
  CHECK(c.edges()[0].length == 1);

  const MarkedTree a = build_dendrogram(pts({"0", "1", "inf", "1/5"}), f5);
  CHECK(four_point_cell_name(comb_type_of(a)) == "A");

  const MarkedTree three = build_dendrogram(pts({"0", "1", "inf"}), FieldParams(7));
  CHECK(three.num_vertices() == 1);
  CHECK(comb_type_of(three).dimension() == 0);
  CHECK(three.degree(0) == 3);

  CHECK_THROWS(build_dendrogram(pts({"0", "1", "1"}), f5));
  CHECK_THROWS(build_dendrogram(pts({"0", "1"}), f5));
}

TEST_CASE("branch depths equal pairwise valuations") {
  std::mt19937_64 rng(17);
  for (long p : {2L, 3L, 5L}) {
    const FieldParams f(p);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = std::uniform_int_distribution<int>(3, 8)(rng);
      const auto x = random_config(rng, p, n, trial % 2 == 0);
      const MarkedTree t = build_dendrogram(x, f);
      // Without infinity among the points, depths refer to the chart sending
      // points 1, 2, 3 to 0, 1, infinity.
      auto y = x;
      if (std::none_of(x.begin(), x.end(), [](const ProjPoint1& q) { return q.is_infinity(); })) {
        const Moebius m = normalize_to_standard_triple(x[0], x[1], x[2]);
        for (auto& q : y) q = m(q);
      }
      for (int v = 0; v < t.num_vertices(); ++v) CHECK(t.degree(v) >= 3);
      for (const auto& e : t.edges()) CHECK(e.length > 0);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const PairVal pv = pair_val(y[static_cast<std::size_t>(i - 1)], y[static_cast<std::size_t>(j - 1)], f);
          if (pv.minus_inf || i == t.reference_end() || j == t.reference_end()) continue;
          CHECK(t.depth(t.branch_vertex(i, j)) == pv.v);
        }
    }
  }
}

TEST_CASE("four-point types match the four-point condition") {
  std::mt19937_64 rng(99);
  const FieldParams f(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_config(rng, 5, 4, trial % 3 == 0);
    const MarkedTree t = build_dendrogram(x, f);
    const CombType type = comb_type_of(t);
    const auto [split, length] = four_point_oracle(x, f);
    if (split == 0) {
      CHECK(type.dimension() == 0);
    } else {
      REQUIRE(type.dimension() == 1);
      CHECK(type.splits()[0] == normalize_split(split, 4));
      CHECK(edge_lengths_by_split(t)[0] == length);
    }
  }
}

TEST_CASE("relabelling points relabels the tree") {
  std::mt19937_64 rng(4);
  const FieldParams f(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 7)(rng);
    const auto x = random_config(rng, 3, n, trial % 2 == 1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ProjPoint1> y(x.size(), ProjPoint1::infinity());
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = x[static_cast<std::size_t>(i)];
    CHECK(comb_type_of(build_dendrogram(y, f)) == relabel(comb_type_of(build_dendrogram(x, f)), perm));
  }
}

TEST_CASE("integral unimodular Moebius maps preserve the marked tree") {
  std::mt19937_64 rng(12);
  const long p = 5;
  const FieldParams f(p);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    // Integer matrix with determinant coprime to p lies in GL_2(Z_p).
    long a, b, c, d;
    do {
      a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    } while ((a * d - b * c) % p == 0);
    const Moebius m(a, b, c, d);
    const int n = std::uniform_int_distribution<int>(4, 7)(rng);
    const auto x = random_config(rng, p, n, trial % 2 == 0);
    std::vector<ProjPoint1> y;
    for (const auto& q : x) y.push_back(m(q));
    const MarkedTree tx = build_dendrogram(x, f), ty = build_dendrogram(y, f);
    CHECK(comb_type_of(tx) == comb_type_of(ty));
    CHECK(edge_lengths_by_split(tx) == edge_lengths_by_split(ty));
  }
}

TEST_CASE("comb types of M_{0,n}") {
  const auto four = enumerate_comb_types(4);
  CHECK(four.size() == 4);
  CHECK(std::count_if(four.begin(), four.end(), [](const CombType& t) { return t.dimension() == 1; }) == 3);
  CHECK(enumerate_comb_types(3).size() == 1);

  const auto five = enumerate_comb_types(5);
  CHECK(five.size() == 26);
  std::map<int, int> by_dim;
  for (const auto& t : five) ++by_dim[t.dimension()];
  CHECK(by_dim[2] == 15);
  CHECK(by_dim[1] == 10);
  CHECK(by_dim[0] == 1);

  CHECK(binary_count(3) == 1);
  CHECK(binary_count(4) == 3);
  CHECK(binary_count(6) == 105);
  CHECK_THROWS(enumerate_comb_types(2));
  CHECK_THROWS(enumerate_comb_types(10));
}

TEST_CASE("enumeration is complete, duplicate-free and sorted") {
  // Total cell counts 1, 4, 26, 236, 2752, 39208 (unrooted trees with n
  // labelled leaves and no degree-2 vertices).
  const std::map<int, std::size_t> total = {{3, 1}, {4, 4}, {5, 26}, {6, 236}, {7, 2752}, {8, 39208}};
  for (int n = 3; n <= 8; ++n) {
    const auto types = enumerate_comb_types(n);
    CHECK(types.size() == total.at(n));
    CHECK(std::is_sorted(types.begin(), types.end()));
    CHECK(std::adjacent_find(types.begin(), types.end()) == types.end());
    std::uint64_t binary = 0;
    for (const auto& t : types) {
      CHECK(t.dimension() <= n - 3);
      if (t.is_binary()) ++binary;
      // Splits are pairwise compatible: nested or disjoint.
      for (Split s : t.splits())
        for (Split r : t.splits()) CHECK(((s & r) == 0 || (s & r) == s || (s & r) == r));
    }
    CHECK(binary == binary_count(n));
  }
}

TEST_CASE("tree_of realises a type") {
  const CombType caterpillar(5, {normalize_split(0b00011, 5), normalize_split(0b11000, 5)});
  CHECK(caterpillar.is_binary());
  const MarkedTree t = tree_of(caterpillar, {Rational(2), Rational(3)});
  CHECK(is_binary(t));
  CHECK(comb_type_of(t) == caterpillar);
  CHECK(edge_lengths_by_split(t) == std::vector<Rational>{2, 3});
  for (const auto& type : enumerate_comb_types(6)) CHECK(comb_type_of(tree_of(type)) == type);
}

TEST_CASE("Betti numbers and the Mumford criterion") {
  const Semigraph tree{3, {{0, 1}, {1, 2}}, {0, 2}};
  const Semigraph theta{2, {{0, 1}, {0, 1}, {0, 1}}, {}};
  const Semigraph loop{1, {{0, 0}}, {0}};
  CHECK(betti_number(tree) == 0);
  CHECK(betti_number(theta) == 2);
  CHECK(betti_number(loop) == 1);
  CHECK_THROWS(betti_number(Semigraph{2, {}, {}}));
  CHECK(is_mumford_tropicalization(tree, 0));
  CHECK_FALSE(is_mumford_tropicalization(tree, 1));
  CHECK(is_mumford_tropicalization(theta, 2));

  const MarkedTree d = build_dendrogram(pts({"0", "1", "inf", "25", "7"}), FieldParams(5));
  CHECK(betti_number(semigraph_of(d)) == 0);
}

TEST_CASE("tree drawings") {
  const MarkedTree star = build_dendrogram(pts({"0", "1", "inf", "2"}), FieldParams(5));
  const std::string svg = to_svg(star, {"0", "1", "inf", "2"});
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t circles = 0, lines = 0;
  for (std::size_t i = svg.find("<circle"); i != std::string::npos; i = svg.find("<circle", i + 1)) ++circles;
  for (std::size_t i = svg.find("<line"); i != std::string::npos; i = svg.find("<line", i + 1)) ++lines;
  CHECK(circles == 1);
  CHECK(lines == 4);
  CHECK(svg == to_svg(star, {"0", "1", "inf", "2"}));

  const std::string dot = to_dot(build_dendrogram(pts({"0", "1", "inf", "5"}), FieldParams(5)));
  CHECK(dot.rfind("graph dendrogram {", 0) == 0);
  CHECK(dot.find("v0 -- v1 [label=\"1\"]") != std::string::npos);
}
