#include "padtrop/tropical.hpp"

#include <doctest.h>

#include <random>

using namespace padtrop;

namespace {

Point2 pt(long x, long y) { return Point2(Rational(x), Rational(y)); }

ProjPoint2 P(const Rational& a, const Rational& b, const Rational& c) { return ProjPoint2(a, b, c); }

PlaneTropicalCurve uniform_line(const Point2& v, long w) {
  return PlaneTropicalCurve({v}, {}, {{0, LatticePoint(0, 1), w}, {0, LatticePoint(1, 0), w}, {0, LatticePoint(-1, -1), w}});
}

std::size_t count_of(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t i = s.find(what); i != std::string::npos; i = s.find(what, i + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("tropicalisation examples") {
  const auto std_cfg = LineConfig::standard();
  CHECK(tropicalize(P(1, power(5, 2), power(5, -3)), std_cfg, FieldParams(5)) == TropPoint2{Valuation(2), Valuation(-3)});
  const TropPoint2 q = tropicalize(P(1, 0, 5), std_cfg, FieldParams(5));
  CHECK(q.x.is_infinite());
  CHECK(q.y == Valuation(1));
  CHECK_FALSE(q.is_finite());
  CHECK(tropicalize(P(1, 4, 3), std_cfg, FieldParams(3)) == TropPoint2{Valuation(0), Valuation(1)});
  // Scaling the homogeneous coordinates changes nothing.
  CHECK(tropicalize(P(7, 28, 21), std_cfg, FieldParams(3)) == TropPoint2{Valuation(0), Valuation(1)});
  CHECK_THROWS_AS(tropicalize(P(0, 1, 1), std_cfg, FieldParams(3)), std::domain_error);
  Matrix3q singular = Matrix3q::Identity();
  singular(2, 2) = 0;
  CHECK_THROWS(LineConfig{singular});
}

TEST_CASE("tropicalisation is equivariant under PGL_3") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-6, 6), num(-50, 50);
  const FieldParams f(3);
  int checked = 0;
  while (checked < 300) {
    Matrix3q alpha, beta;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        alpha(i, j) = c(rng);
        beta(i, j) = c(rng);
      }
    if (alpha.determinant() == 0 || beta.determinant() == 0) continue;
    const Vector3q v(Rational(num(rng), 1 + std::abs(num(rng)) % 7), Rational(num(rng)), Rational(num(rng), 9));
    if (v.isZero()) continue;
    const Vector3q bv = beta * v;
    if ((alpha * bv)(0) == 0) continue;
    const TropPoint2 lhs = tropicalize(ProjPoint2(bv), LineConfig(alpha), f);
    const TropPoint2 rhs = tropicalize(ProjPoint2(v), LineConfig(Matrix3q(alpha * beta)), f);
    CHECK(lhs == rhs);
    ++checked;
  }
}

TEST_CASE("ramification refines the grid without changing values") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(1, 400);
  for (int i = 0; i < 200; ++i) {
    const ProjPoint2 q = P(num(rng), Rational(num(rng), num(rng)), Rational(num(rng)) * power(5, 3));
    const TropPoint2 base = tropicalize(q, LineConfig::standard(), FieldParams(5, 2));
    for (long m : {1L, 3L, 7L}) {
      const FieldParams fine(5, 2 * m);
      const TropPoint2 t = tropicalize(q, LineConfig::standard(), fine);
      CHECK(t == base);
      CHECK(fine.on_grid(t.x.value()));
      CHECK(fine.on_grid(t.y.value()));
    }
  }
}

TEST_CASE("tropical line incidence") {
  const auto line = trop_line(pt(0, 0));
  CHECK(point_on_curve(line, pt(0, 7)) == Incidence::InteriorOfEdge);
  CHECK(point_on_curve(line, pt(-2, -2)) == Incidence::InteriorOfEdge);
  CHECK(point_on_curve(line, pt(5, 0)) == Incidence::InteriorOfEdge);
  CHECK(point_on_curve(line, pt(0, 0)) == Incidence::Vertex);
  CHECK(point_on_curve(trop_line(pt(1, 2)), pt(0, 0)) == Incidence::NotOnCurve);
  CHECK(point_on_curve(line, Point2(Rational(1, 3), Rational(-1, 2))) == Incidence::NotOnCurve);
  CHECK_THROWS(point_on_curve(line, TropPoint2{Valuation::infinity(), Valuation(0)}));
  CHECK(point_on_curve(line, TropPoint2{Valuation(-3), Valuation(-3)}) == Incidence::InteriorOfEdge);
}

TEST_CASE("balancing and degree") {
  const auto line = trop_line(pt(0, 0));
  CHECK(check_balancing(line));
  CHECK(degree_of(line) == 1);
  const PlaneTropicalCurve unbalanced({pt(0, 0)}, {}, {{0, LatticePoint(1, 0), 1}, {0, LatticePoint(0, 1), 1}});
  CHECK_FALSE(check_balancing(unbalanced));
  CHECK_THROWS_AS(degree_of(unbalanced), std::domain_error);
  CHECK_THROWS_AS(dual_subdivision(unbalanced), std::domain_error);
  const PlaneTropicalCurve skew({pt(0, 0)}, {}, {{0, LatticePoint(1, 1), 2}, {0, LatticePoint(-1, 0), 2}, {0, LatticePoint(0, -1), 2}});
  CHECK(check_balancing(skew));
  CHECK_THROWS_AS(degree_of(skew), std::domain_error);
  const auto two = PlaneTropicalCurve::union_of(trop_line(pt(0, 0)), trop_line(pt(3, 1)));
  CHECK(check_balancing(two));
  CHECK(degree_of(two) == 2);
  CHECK(degree_of(uniform_line(pt(1, 1), 2)) == 2);
  // A bounded edge that is not primitive is rejected.
  CHECK_THROWS(PlaneTropicalCurve({pt(0, 0), pt(2, 0)}, {{0, 1, LatticePoint(2, 0), 1}}, {}));
}

TEST_CASE("dual subdivisions") {
  const auto one = dual_subdivision(trop_line(pt(0, 0)));
  CHECK(one.degree == 1);
  REQUIRE(one.cells.size() == 1);
  CHECK(one.cells[0].twice_area() == 1);

  const auto two = dual_subdivision(PlaneTropicalCurve::union_of(trop_line(pt(0, 0)), trop_line(pt(3, 1))));
  CHECK(two.degree == 2);
  CHECK(two.tiles_triangle());
  CHECK(two.cells.size() == 3);
  CHECK(two.parallelogram_count() == 1);
  int triangles = 0;
  for (const auto& c : two.cells) triangles += c.is_triangle() ? 1 : 0;
  CHECK(triangles == 2);

  const auto fat = dual_subdivision(uniform_line(pt(0, 0), 2));
  REQUIRE(fat.cells.size() == 1);
  CHECK(fat.cells[0].twice_area() == 4);
  for (const auto& e : fat.edges()) CHECK(lattice_length(LatticePoint(e.b - e.a)) == 2);
}

TEST_CASE("curve drawings") {
  const std::string svg = to_svg(trop_line(pt(0, 0)), {pt(0, 2)});
  CHECK(count_of(svg, "<line") == 3);
  CHECK(count_of(svg, "<circle") >= 1);
  CHECK(svg == to_svg(trop_line(pt(0, 0)), {pt(0, 2)}));
}
