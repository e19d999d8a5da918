#include "padtrop/btree.hpp"
#include "padtrop/counting.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

using namespace padtrop;

namespace {

TropPoint2 tp(const Rational& x, const Rational& y) { return {Valuation(x), Valuation(y)}; }

LatticePath path(long d, long g, std::initializer_list<std::pair<long, long>> pts) {
  LatticePath out{d, g, {}};
  for (auto [x, y] : pts) out.points.emplace_back(x, y);
  return out;
}

// Rank over Q by fraction-free elimination on integer rows.
int integer_rank(std::vector<std::vector<BigInt>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& top = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      const BigInt f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * top[c] - top[k] * f;
    }
    ++rank;
  }
  return rank;
}

// Graph of a plane curve with 4-valent crossings resolved into two strands.
Semigraph resolved_graph(const PlaneTropicalCurve& c) {
  const int n = static_cast<int>(c.vertices().size());
  // Incident directions per vertex: (direction pointing away, edge id or -1 for rays).
  std::vector<std::vector<LatticePoint>> dirs(static_cast<std::size_t>(n));
  for (const auto& e : c.edges()) {
    dirs[static_cast<std::size_t>(e.from)].push_back(e.direction);
    dirs[static_cast<std::size_t>(e.to)].push_back(-e.direction);
  }
  for (const auto& r : c.rays()) dirs[static_cast<std::size_t>(r.from)].push_back(r.direction);
  // Node of (vertex, outgoing direction): crossings get one node per strand.
  std::map<std::tuple<int, long, long>, int> node;
  int count = 0;
  for (int v = 0; v < n; ++v) {
    const auto& ds = dirs[static_cast<std::size_t>(v)];
    const bool crossing = ds.size() == 4;
    std::map<std::pair<long, long>, int> strand;
    for (const auto& d : ds) {
      int id = count;
      if (crossing) {
        const auto opposite = strand.find({-d(0), -d(1)});
        if (opposite != strand.end()) id = opposite->second;
      } else if (!strand.empty()) {
        id = strand.begin()->second;
      }
      if (id == count) ++count;
      strand[{d(0), d(1)}] = id;
      node[{v, d(0), d(1)}] = id;
    }
  }
  Semigraph g;
  g.vertex_count = count;
  for (const auto& e : c.edges())
    g.edges.emplace_back(node.at({e.from, e.direction(0), e.direction(1)}), node.at({e.to, -e.direction(0), -e.direction(1)}));
  for (const auto& r : c.rays()) g.ends.push_back(node.at({r.from, r.direction(0), r.direction(1)}));
  return g;
}

void check_curves(const CountResult& r, const std::vector<TropPoint2>& pts) {
  BigInt total(0);
  for (const auto& cc : r.curves) {
    CHECK(cc.multiplicity >= 1);
    total += cc.multiplicity;
    CHECK(check_balancing(cc.curve));
    CHECK(degree_of(cc.curve) == r.d);
    CHECK(is_mumford_tropicalization(resolved_graph(cc.curve), static_cast<int>(r.g)));
    CHECK(cc.curve.vertices().size() == cc.subdivision.cells.size());
    for (const auto& q : pts) CHECK(point_on_curve(cc.curve, q) == Incidence::InteriorOfEdge);
  }
  CHECK(total == r.N);
}

// Generic rational points: small numerators over a large prime denominator.
std::vector<TropPoint2> random_points(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-4000, 4000);
  std::vector<TropPoint2> out;
  while (out.size() < n) out.push_back(tp(Rational(num(rng), 997), Rational(num(rng), 991)));
  return out;
}

}  // namespace

TEST_CASE("path multiplicities") {
  const auto corner = path(1, 0, {{0, 1}, {0, 0}, {1, 0}});
  CHECK(path_multiplicity(corner, PathSide::Positive) == 1);
  CHECK(path_multiplicity(corner, PathSide::Negative) == 1);
  CHECK_THROWS(validate_path(path(1, 0, {{0, 1}, {1, 1}, {1, 0}})));
  CHECK_THROWS(validate_path(path(1, 0, {{0, 0}, {0, 1}, {1, 0}})));

  int nonzero = 0;
  for (const auto& p : enumerate_lattice_paths(2, 0)) {
    const BigInt m = path_multiplicity(p, PathSide::Positive) * path_multiplicity(p, PathSide::Negative);
    if (m != 0) {
      ++nonzero;
      CHECK(m == 1);
    }
  }
  CHECK(nonzero == 1);
}

TEST_CASE("lattice path counts") {
  CHECK(count_lattice_paths(1, 0) == 1);
  CHECK(count_lattice_paths(2, 0) == 1);
  CHECK(count_lattice_paths(3, 0) == 12);
  CHECK(count_lattice_paths(3, 1) == 1);
  CHECK(count_lattice_paths(4, 0) == 620);
  CHECK(count_lattice_paths(4, 1) == 225);
  CHECK(count_lattice_paths(4, 3) == 1);
  // The raw path sum also counts line + cubic: C(11, 2) = 55 more.
  CHECK(count_lattice_paths_all(4, 0) == 675);
  CHECK_THROWS(count_lattice_paths(3, 2));
  CHECK_THROWS(count_lattice_paths(0, 0));
  CHECK(count_lattice_paths_all(4, 0, 3) == count_lattice_paths_all(4, 0, 1));
  CHECK(enumerate_lattice_paths(3, 0).size() == enumerate_lattice_paths(3, 0).size());
}

TEST_CASE("Kontsevich recursion agrees with lattice paths") {
  CHECK(kontsevich_N(1) == 1);
  CHECK(kontsevich_N(2) == 1);
  CHECK(kontsevich_N(3) == 12);
  CHECK(kontsevich_N(4) == 620);
  CHECK(kontsevich_N(5) == 87304);
  CHECK(kontsevich_N(6) == BigInt("26312976"));
  for (long d = 1; d <= 5; ++d) CHECK(count_lattice_paths(d, 0) == kontsevich_N(d));
}

TEST_CASE("a cubic through 9 general points is unique") {
  // Oracle for N_{3,1} = 1: the 9 x 10 system of cubic monomials has full
  // rank, so its kernel is one cubic.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-30, 30);
  std::vector<std::vector<BigInt>> rows;
  for (int i = 0; i < 9; ++i) {
    const long x = c(rng), y = c(rng);
    std::vector<BigInt> row;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) row.push_back(boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(a)) * boost::multiprecision::pow(BigInt(y), static_cast<unsigned>(b)));
    rows.push_back(row);
  }
  CHECK(integer_rank(rows) == 9);
  CHECK(count_lattice_paths(3, 1) == 10 - integer_rank(rows));
}

TEST_CASE("lines through two points") {
  const std::vector<TropPoint2> pts{tp(0, 0), tp(3, 5)};
  const CountResult r = count_through(1, 0, pts);
  CHECK(r.N == 1);
  CHECK(r.certificate.kind == CertificateKind::General);
  REQUIRE(r.curves.size() == 1);
  CHECK(r.curves[0].curve.vertices()[0] == Point2(Rational(3), Rational(3)));
  check_curves(r, pts);

  // Brute force: a tropical line is determined by its vertex; scan a grid.
  int found = 0;
  for (long x = -20; x <= 20; ++x)
    for (long y = -20; y <= 20; ++y) {
      const auto line = trop_line(Point2(Rational(x, 2), Rational(y, 2)));
      if (point_on_curve(line, pts[0]) != Incidence::NotOnCurve && point_on_curve(line, pts[1]) != Incidence::NotOnCurve) {
        ++found;
        CHECK(line.vertices()[0] == r.curves[0].curve.vertices()[0]);
      }
    }
  CHECK(found == 1);

  const CountResult diag = count_through(1, 0, {tp(0, 0), tp(2, 2)});
  CHECK(diag.certificate.kind == CertificateKind::Degenerate);
  const CountResult hit = count_through(1, 0, {tp(0, 0), tp(0, 4)});
  CHECK(hit.certificate.kind == CertificateKind::Degenerate);
}

TEST_CASE("conics through five points") {
  const std::vector<TropPoint2> pts{tp(0, 0), tp(Rational(7, 3), 1), tp(5, Rational(-2, 5)), tp(Rational(-3, 2), 4), tp(Rational(11, 4), Rational(17, 3))};
  const CountResult r = count_through(2, 0, pts);
  CHECK(r.certificate.kind == CertificateKind::General);
  CHECK(r.N == kontsevich_N(2));
  check_curves(r, pts);
}

TEST_CASE("counts do not depend on the position of general points") {
  std::mt19937_64 rng(1234);
  for (long d : {1L, 2L}) {
    int general = 0;
    for (int trial = 0; trial < 40 && general < 20; ++trial) {
      const auto pts = random_points(rng, static_cast<std::size_t>(incidence_count(d, 0)));
      const CountResult r = count_through(d, 0, pts);
      if (r.certificate.kind != CertificateKind::General) continue;
      ++general;
      CHECK(r.N == count_lattice_paths(d, 0));
      check_curves(r, pts);
    }
    CHECK(general >= 20);
  }
}

TEST_CASE("counts are invariant under symmetries of the triangle") {
  std::mt19937_64 rng(77);
  const auto pts = random_points(rng, 5);
  const CountResult base = count_through(2, 0, pts);
  REQUIRE(base.certificate.kind == CertificateKind::General);
  // Swap of the axes, the order-3 rotation (x, y) -> (-y, x - y), and an
  // integer translation all permute the three end directions.
  const std::vector<std::function<TropPoint2(const Point2&)>> maps = {
      [](const Point2& q) { return tp(q(1), q(0)); },
      [](const Point2& q) { return tp(-q(1), q(0) - q(1)); },
      [](const Point2& q) { return tp(q(0) + 3, q(1) - 7); }};
  for (const auto& f : maps) {
    std::vector<TropPoint2> moved;
    for (const auto& q : pts) moved.push_back(f(q.finite()));
    const CountResult r = count_through(2, 0, moved);
    CHECK(r.certificate.kind == CertificateKind::General);
    CHECK(r.N == base.N);
    CHECK(r.curves.size() == base.curves.size());
  }
}

TEST_CASE("direct counting is deterministic across thread counts") {
  std::mt19937_64 rng(5);
  const auto pts = random_points(rng, 5);
  CountLimits one, three;
  three.threads = 3;
  const CountResult a = count_through(2, 0, pts, one), b = count_through(2, 0, pts, three);
  CHECK(a.N == b.N);
  CHECK(a.certificate.kind == b.certificate.kind);
  REQUIRE(a.curves.size() == b.curves.size());
  for (std::size_t i = 0; i < a.curves.size(); ++i) {
    CHECK(a.curves[i].curve.vertices() == b.curves[i].curve.vertices());
    CHECK(a.curves[i].point_edges == b.curves[i].point_edges);
  }
}

TEST_CASE("twelve rational cubics through eight points") {
  const std::vector<TropPoint2> pts{tp(Rational(1, 7), Rational(3, 11)),      tp(Rational(29, 13), Rational(-17, 19)),
                                    tp(Rational(-41, 23), Rational(53, 29)),  tp(Rational(67, 31), Rational(71, 37)),
                                    tp(Rational(-83, 41), Rational(-89, 43)), tp(Rational(97, 47), Rational(-101, 53)),
                                    tp(Rational(-107, 59), Rational(9, 61)),  tp(Rational(19, 67), Rational(131, 71))};
  const CountResult r = count_through(3, 0, pts);
  CHECK(r.certificate.kind == CertificateKind::General);
  CHECK(r.N == 12);
  check_curves(r, pts);
}

TEST_CASE("resource bounds are reported distinctly") {
  std::vector<TropPoint2> eleven;
  for (int i = 0; i < 11; ++i) eleven.push_back(tp(i, i * i));
  CHECK_THROWS_AS(count_through(4, 0, eleven), ResourceLimitError);
  CHECK_THROWS_AS(count_through(1, 0, {tp(0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(count_through(1, 0, {tp(0, 0), tp(0, 0)}), std::invalid_argument);
  CountLimits tiny;
  tiny.max_nodes_per_type = 1;
  const CountResult r = count_through(2, 0, {tp(0, 0), tp(Rational(7, 3), 1), tp(5, Rational(-2, 5)), tp(Rational(-3, 2), 4), tp(Rational(11, 4), Rational(17, 3))}, tiny);
  CHECK(r.certificate.kind == CertificateKind::Inconclusive);
  CHECK(r.certificate.resource_exceeded);
}

TEST_CASE("config pool") {
  const FieldParams f(5);
  const auto pool = default_config_pool(f, 42);
  CHECK(pool.size() == 6 + 24 + 16);
  CHECK(pool.front().matrix() == Matrix3q::Identity());
  for (const auto& c : pool) CHECK(c.matrix().determinant() != 0);
  const auto again = default_config_pool(f, 42);
  for (std::size_t i = 0; i < pool.size(); ++i) CHECK(pool[i].matrix() == again[i].matrix());
}

TEST_CASE("Mumford counts") {
  const FieldParams f(5);
  const auto pool = default_config_pool(f, 1);
  const MumfordResult line = mumford_count({ProjPoint2(1, 1, 5), ProjPoint2(1, 25, 1)}, 1, 0, pool, f);
  CHECK(line.certified);
  CHECK(line.N == 1);
  CHECK(line.configs_tried == 1);
  CHECK(line.tropical_points == std::vector<TropPoint2>{tp(0, 1), tp(2, 0)});

  // Tropicalises to (0,0), (2,5), (5,-3), (-4,1), (9,11) under the identity.
  std::vector<ProjPoint2> conic;
  for (auto [x, y] : {std::pair{0L, 0L}, {2L, 5L}, {5L, -3L}, {-4L, 1L}, {9L, 11L}})
    conic.emplace_back(Rational(1), power(5, x) * 2, power(5, y) * 3);
  const MumfordResult two = mumford_count(conic, 2, 0, pool, f);
  CAPTURE(two.reason);
  CHECK(two.certified);
  CHECK(two.configs_tried == 1);
  CHECK(two.N == kontsevich_N(2));

  const Rational eps = power(5, 40);
  const MumfordResult close = mumford_count({ProjPoint2(1, 1, 1), ProjPoint2(1, 1 + eps, 1 + eps)}, 1, 0, pool, f);
  CHECK_FALSE(close.certified);
  CHECK(close.N == 0);
  CHECK_FALSE(close.reason.empty());
  CHECK_THROWS(mumford_count({ProjPoint2(1, 1, 1)}, 1, 0, pool, f));
}
