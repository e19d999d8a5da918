#include "padtrop/counting.hpp"

#include "padtrop/linalg.hpp"
#include "padtrop/parallel.hpp"
#include "padtrop/subdivision.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace padtrop {

long max_genus(long d) { return (d - 1) * (d - 2) / 2; }
long incidence_count(long d, long g) { return 3 * d + g - 1; }

namespace {

void check_degree_genus(long d, long g) {
  if (d < 1) throw std::invalid_argument(fmt::format("degree {} must be >= 1", d));
  if (g < 0 || g > max_genus(d))
    throw std::invalid_argument(fmt::format("genus {} outside [0, (d-1)(d-2)/2 = {}]", g, max_genus(d)));
}

// Lexicographic in (x, -y).
bool lambda_less(const LatticePoint& a, const LatticePoint& b) { return a(0) != b(0) ? a(0) < b(0) : a(1) > b(1); }

std::vector<LatticePoint> boundary_path(long d, PathSide side) {
  std::vector<LatticePoint> out;
  if (side == PathSide::Positive) {
    for (long x = 0; x <= d; ++x) out.emplace_back(x, d - x);
  } else {
    for (long y = d; y >= 0; --y) out.emplace_back(0, y);
    for (long x = 1; x <= d; ++x) out.emplace_back(x, 0);
  }
  return out;
}

using PathKey = std::vector<std::pair<long, long>>;

class MultiplicityMemo {
 public:
  MultiplicityMemo(long d, PathSide side) : d_(d), side_(side), base_(boundary_path(d, side)) {}

  BigInt mu(const std::vector<LatticePoint>& path) {
    if (path == base_) return BigInt(1);
    PathKey key;
    key.reserve(path.size());
    for (const auto& q : path) key.emplace_back(q(0), q(1));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt result(0);
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      const long turn = cross(LatticePoint(path[j] - path[j - 1]), LatticePoint(path[j + 1] - path[j]));
      if (side_ == PathSide::Positive ? turn <= 0 : turn >= 0) continue;
      std::vector<LatticePoint> shortened = path;
      shortened.erase(shortened.begin() + static_cast<std::ptrdiff_t>(j));
      result = std::abs(turn) * mu(shortened);
      const LatticePoint flipped = path[j - 1] + path[j + 1] - path[j];
      if (in_triangle(d_, flipped) && lambda_less(path[j - 1], flipped) && lambda_less(flipped, path[j + 1])) {
        std::vector<LatticePoint> moved = path;
        moved[j] = flipped;
        result += mu(moved);
      }
      break;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  long d_;
  PathSide side_;
  std::vector<LatticePoint> base_;
  std::map<PathKey, BigInt> memo_;
};

}  // namespace

void validate_path(const LatticePath& path) {
  check_degree_genus(path.d, path.g);
  const auto n = static_cast<std::size_t>(incidence_count(path.d, path.g));
  if (path.points.size() != n + 1)
    throw std::invalid_argument(fmt::format("path has {} points, expected {}", path.points.size(), n + 1));
  if (path.points.front() != LatticePoint(0, path.d) || path.points.back() != LatticePoint(path.d, 0))
    throw std::invalid_argument("path must run from (0,d) to (d,0)");
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    if (!in_triangle(path.d, path.points[i]))
      throw std::invalid_argument(fmt::format("path point {} lies outside the triangle", i));
    if (i > 0 && !lambda_less(path.points[i - 1], path.points[i]))
      throw std::invalid_argument(fmt::format("path is not increasing at point {}", i));
  }
}

namespace {

// Chains of `steps` + 1 points from (0,d) to (d,0), in lexicographic order.
std::vector<std::vector<LatticePoint>> increasing_paths(long d, long steps) {
  auto pts = triangle_points(d);
  std::sort(pts.begin(), pts.end(), lambda_less);
  std::vector<std::vector<LatticePoint>> out;
  if (steps < 1 || static_cast<std::size_t>(steps) + 1 > pts.size()) return out;
  // pts.front() == (0,d) and pts.back() == (d,0); choose steps-1 of the rest.
  const auto inner = static_cast<std::size_t>(steps - 1);
  std::vector<LatticePoint> current{pts.front()};
  auto rec = [&](auto&& self, std::size_t next) -> void {
    const std::size_t chosen = current.size() - 1;
    if (chosen == inner) {
      current.push_back(pts.back());
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (std::size_t i = next; i + 1 < pts.size(); ++i) {
      if (pts.size() - 1 - i < inner - chosen) break;
      current.push_back(pts[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt r(1);
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<LatticePath> enumerate_lattice_paths(long d, long g) {
  check_degree_genus(d, g);
  std::vector<LatticePath> out;
  for (auto& pts : increasing_paths(d, incidence_count(d, g))) out.push_back({d, g, std::move(pts)});
  return out;
}

BigInt path_multiplicity(const LatticePath& path, PathSide side) {
  validate_path(path);
  return MultiplicityMemo(path.d, side).mu(path.points);
}

BigInt count_lattice_paths_all(long d, long g, unsigned threads) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  if (g > max_genus(d) || g < 1 - d) return BigInt(0);
  const auto paths = increasing_paths(d, incidence_count(d, g));
  const std::size_t chunk_size = 64;
  const std::size_t chunks = (paths.size() + chunk_size - 1) / chunk_size;
  const auto partial = parallel_map_chunks<BigInt>(chunks, threads, [&](std::size_t c) {
    MultiplicityMemo pos(d, PathSide::Positive), neg(d, PathSide::Negative);
    BigInt sum(0);
    for (std::size_t i = c * chunk_size; i < std::min(paths.size(), (c + 1) * chunk_size); ++i) {
      const BigInt plus = pos.mu(paths[i]);
      if (plus != 0) sum += plus * neg.mu(paths[i]);
    }
    return sum;
  });
  BigInt total(0);
  for (const auto& s : partial) total += s;
  return total;
}

BigInt count_lattice_paths(long d, long g, unsigned threads) {
  check_degree_genus(d, g);
  std::map<std::pair<long, long>, BigInt> all, irr;
  auto all_of = [&](long dd, long gg) -> const BigInt& {
    auto [it, inserted] = all.try_emplace({dd, gg});
    if (inserted) it->second = count_lattice_paths_all(dd, gg, threads);
    return it->second;
  };
  // Genus of a union is the sum of (g_i - 1) plus one. Splitting off the
  // component through the first point:
  //   all(d,g) = sum C(n-1, n1-1) irr(d1,g1) all(d-d1, g-g1+1) + irr(d,g).
  auto irr_of = [&](auto&& self, long dd, long gg) -> BigInt {
    if (auto it = irr.find({dd, gg}); it != irr.end()) return it->second;
    BigInt value = all_of(dd, gg);
    const long n = incidence_count(dd, gg);
    for (long d1 = 1; d1 < dd; ++d1) {
      for (long g1 = 0; g1 <= max_genus(d1); ++g1) {
        const BigInt& rest = all_of(dd - d1, gg - g1 + 1);
        if (rest == 0) continue;
        value -= binomial(n - 1, incidence_count(d1, g1) - 1) * self(self, d1, g1) * rest;
      }
    }
    irr.emplace(std::pair{dd, gg}, value);
    return value;
  };
  return irr_of(irr_of, d, g);
}

BigInt kontsevich_N(long d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<BigInt> N(static_cast<std::size_t>(d + 1), BigInt(0));
  N[1] = 1;
  for (long m = 2; m <= d; ++m) {
    BigInt sum(0);
    for (long d1 = 1; d1 < m; ++d1) {
      const long d2 = m - d1;
      const BigInt a = BigInt(d1 * d1 * d2 * d2) * binomial(3 * m - 4, 3 * d1 - 2);
      const BigInt b = BigInt(d1 * d1 * d1 * d2) * binomial(3 * m - 4, 3 * d1 - 1);
      sum += N[static_cast<std::size_t>(d1)] * N[static_cast<std::size_t>(d2)] * (a - b);
    }
    N[static_cast<std::size_t>(m)] = sum;
  }
  return N[static_cast<std::size_t>(d)];
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::General: return "General";
    case CertificateKind::Degenerate: return "Degenerate";
    case CertificateKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Linear form coef . c + constant over the coefficients c_v of the tropical
// polynomial min_v (c_v + v.x).
struct Form {
  std::vector<Rational> coef;
  Rational constant;
  // Cached conversions for the floating-point pruning pass.
  std::vector<double> coef_d;
  double constant_d = 0;

  void cache() {
    coef_d.resize(coef.size());
    for (std::size_t j = 0; j < coef.size(); ++j) coef_d[j] = to_double(coef[j]);
    constant_d = to_double(constant);
  }
};

enum class FormKind { Convexity, PointOnEdge };

struct Inequality {
  Form form;  // must be > 0
  FormKind kind;
};

// Forward-eliminated equation system over the rationals, grown one row at a
// time with undo.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols) {}

  enum class Added { Independent, Dependent, Inconsistent };

  Added add(const std::vector<Rational>& coef, const Rational& rhs) {
    std::vector<Rational> row = coef;
    Rational r = rhs;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const int pc = pivot_[k];
      if (row[static_cast<std::size_t>(pc)] == 0) continue;
      const Rational f = row[static_cast<std::size_t>(pc)];
      for (int j = pc; j < cols_; ++j)
        if (rows_[k][static_cast<std::size_t>(j)] != 0) row[static_cast<std::size_t>(j)] -= f * rows_[k][static_cast<std::size_t>(j)];
      r -= f * rhs_[k];
    }
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
      if (row[static_cast<std::size_t>(j)] != 0) {
        pc = j;
        break;
      }
    if (pc < 0) {
      history_.push_back(false);
      if (r != 0) return Added::Inconsistent;
      ++dependent_;
      return Added::Dependent;
    }
    const Rational inv = 1 / row[static_cast<std::size_t>(pc)];
    for (int j = pc; j < cols_; ++j) row[static_cast<std::size_t>(j)] *= inv;
    r *= inv;
    std::vector<double> mirror(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) mirror[j] = to_double(row[j]);
    rows_d_.push_back(std::move(mirror));
    rhs_d_.push_back(to_double(r));
    rows_.push_back(std::move(row));
    rhs_.push_back(r);
    pivot_.push_back(pc);
    history_.push_back(true);
    return Added::Independent;
  }

  // Undo the most recent add (including inconsistent ones).
  void pop(Added how) {
    const bool stored = history_.back();
    history_.pop_back();
    if (stored) {
      rows_.pop_back();
      rhs_.pop_back();
      rows_d_.pop_back();
      rhs_d_.pop_back();
      pivot_.pop_back();
    } else if (how == Added::Dependent) {
      --dependent_;
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int dependent() const { return dependent_; }

  template <class Scalar>
  linalg::AffineSolution<Scalar> solve() const {
    linalg::Matrix<Scalar> a(static_cast<Eigen::Index>(rows_.size()), cols_);
    linalg::Vector<Scalar> b(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      for (int j = 0; j < cols_; ++j) {
        if constexpr (std::is_same_v<Scalar, double>)
          a(static_cast<Eigen::Index>(k), j) = rows_d_[k][static_cast<std::size_t>(j)];
        else
          a(static_cast<Eigen::Index>(k), j) = rows_[k][static_cast<std::size_t>(j)];
      }
      if constexpr (std::is_same_v<Scalar, double>)
        b(static_cast<Eigen::Index>(k)) = rhs_d_[k];
      else
        b(static_cast<Eigen::Index>(k)) = rhs_[k];
    }
    return linalg::affine_solve<Scalar>(a, b);
  }

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<double>> rows_d_;
  std::vector<double> rhs_d_;
  std::vector<int> pivot_;
  std::vector<bool> history_;
  int dependent_ = 0;
};

// Largest uniform slack of the inequalities over the affine solution set.
template <class Scalar>
Scalar best_slack(const std::vector<const Inequality*>& ineqs, const linalg::AffineSolution<Scalar>& sol) {
  const auto k = static_cast<Eigen::Index>(ineqs.size());
  const Eigen::Index m = sol.particular.size();
  linalg::Matrix<Scalar> g(k, m);
  linalg::Vector<Scalar> h(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& f = ineqs[static_cast<std::size_t>(i)]->form;
    if constexpr (std::is_same_v<Scalar, double>) {
      for (Eigen::Index j = 0; j < m; ++j) g(i, j) = f.coef_d[static_cast<std::size_t>(j)];
      h(i) = f.constant_d;
    } else {
      for (Eigen::Index j = 0; j < m; ++j) g(i, j) = f.coef[static_cast<std::size_t>(j)];
      h(i) = f.constant;
    }
  }
  const linalg::Vector<Scalar> offset = g * sol.particular + h;
  if (sol.kernel.cols() == 0) return offset.size() ? offset.minCoeff() : Scalar(1);
  const linalg::Matrix<Scalar> gk = g * sol.kernel;
  return linalg::max_uniform_slack<Scalar>(gk, offset, Scalar(1));
}

struct TypeOutcome {
  std::vector<CountedCurve> curves;
  bool degenerate = false;
  std::string reason;
  bool exhausted = false;
};

class TypeSearch {
 public:
  TypeSearch(const DualSubdivision& sub, const std::vector<Point2>& pts, std::uint64_t budget)
      : sub_(sub), pts_(pts), budget_(budget), V_(sub.vertices()), edges_(sub.edges()), echelon_(static_cast<int>(V_.size())) {
    for (std::size_t i = 0; i < V_.size(); ++i) index_[key(V_[i])] = static_cast<int>(i);
    build_adjacency();
    // c at the first vertex is fixed to 0.
    std::vector<Rational> anchor(V_.size(), Rational(0));
    anchor[0] = 1;
    echelon_.add(anchor, Rational(0));
    for (const auto& cell : sub_.cells) {
      if (!cell.is_parallelogram()) continue;
      std::vector<Rational> row(V_.size(), Rational(0));
      row[idx(cell.corners[0])] += 1;
      row[idx(cell.corners[2])] += 1;
      row[idx(cell.corners[1])] -= 1;
      row[idx(cell.corners[3])] -= 1;
      if (echelon_.add(row, Rational(0)) != Echelon::Added::Independent)
        throw std::logic_error("parallelogram conditions are dependent");
    }
    build_convexity();
    for (const auto& q : convexity_) active_.push_back(&q);
  }

  TypeOutcome run() {
    assignment_.assign(pts_.size(), -1);
    dfs(0);
    return std::move(outcome_);
  }

 private:
  static std::pair<long, long> key(const LatticePoint& v) { return {v(0), v(1)}; }
  std::size_t idx(const LatticePoint& v) const { return static_cast<std::size_t>(index_.at(key(v))); }

  void build_adjacency() {
    // For each undirected edge: the corners of adjacent cells off the edge.
    for (std::size_t c = 0; c < sub_.cells.size(); ++c) {
      const auto& cs = sub_.cells[c].corners;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        LatticePoint a = cs[i], b = cs[(i + 1) % cs.size()];
        if (LatticeLess{}(b, a)) std::swap(a, b);
        adjacent_[{key(a), key(b)}].push_back({c, cs[(i + 2) % cs.size()]});
      }
    }
  }

  void build_convexity() {
    for (const auto& e : edges_) {
      if (!e.interior) continue;
      const auto& adj = adjacent_.at({key(e.a), key(e.b)});
      const LatticePoint& u = adj[0].second;
      const LatticePoint& w = adj[1].second;
      const Rational D(cross(LatticePoint(e.b - e.a), LatticePoint(u - e.a)));
      const Rational s = Rational(cross(LatticePoint(w - e.a), LatticePoint(u - e.a))) / D;
      const Rational t = Rational(cross(LatticePoint(e.b - e.a), LatticePoint(w - e.a))) / D;
      Form f{std::vector<Rational>(V_.size(), Rational(0)), Rational(0), {}, 0};
      f.coef[idx(w)] += 1;
      f.coef[idx(e.a)] -= 1 - s - t;
      f.coef[idx(e.b)] -= s;
      f.coef[idx(u)] -= t;
      f.cache();
      convexity_.push_back({std::move(f), FormKind::Convexity});
    }
  }

  static Rational dot(const LatticePoint& v, const Point2& p) { return v(0) * p(0) + v(1) * p(1); }

  // Point p on the curve edge dual to {a, b}: the neighbouring monomials stay
  // strictly above.
  std::vector<Inequality> point_inequalities(const SubdivisionEdge& e, const Point2& p) const {
    std::vector<Inequality> out;
    for (const auto& [cell, u] : adjacent_.at({key(e.a), key(e.b)})) {
      Form f{std::vector<Rational>(V_.size(), Rational(0)), Rational(dot(LatticePoint(u - e.a), p)), {}, 0};
      f.coef[idx(u)] += 1;
      f.coef[idx(e.a)] -= 1;
      f.cache();
      out.push_back({std::move(f), FormKind::PointOnEdge});
    }
    return out;
  }

  void dfs(std::size_t i) {
    if (outcome_.degenerate || outcome_.exhausted) return;
    if (i == pts_.size()) {
      leaf();
      return;
    }
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
      if (outcome_.degenerate || outcome_.exhausted) return;
      if (++nodes_ > budget_) {
        outcome_.exhausted = true;
        return;
      }
      const auto& e = edges_[ei];
      std::vector<Rational> row(V_.size(), Rational(0));
      row[idx(e.a)] += 1;
      row[idx(e.b)] -= 1;
      const auto how = echelon_.add(row, dot(LatticePoint(e.b - e.a), pts_[i]));
      if (how != Echelon::Added::Inconsistent) {
        auto ineqs = point_inequalities(e, pts_[i]);
        point_ineqs_.push_back(std::move(ineqs));
        const std::size_t before = active_.size();
        for (const auto& q : point_ineqs_.back()) active_.push_back(&q);
        assignment_[i] = static_cast<int>(ei);
        if (i + 1 == pts_.size() || feasible_double()) dfs(i + 1);
        assignment_[i] = -1;
        active_.resize(before);
        point_ineqs_.pop_back();
      }
      echelon_.pop(how);
    }
  }

  bool feasible_double() const {
    const auto sol = echelon_.solve<double>();
    if (!sol.consistent) return false;
    return best_slack<double>(active_, sol) > -1e-7;
  }

  void leaf() {
    const int m = static_cast<int>(V_.size());
    if (echelon_.dependent() == 0 && echelon_.rank() == m) {
      const auto sol = echelon_.solve<Rational>();
      Rational worst(1);
      bool worst_is_point = false;
      bool first = true;
      for (const auto* q : active_) {
        Rational v = q->form.constant;
        for (int j = 0; j < m; ++j) v += q->form.coef[static_cast<std::size_t>(j)] * sol.particular(j);
        if (first || v < worst || (v == worst && q->kind == FormKind::PointOnEdge)) {
          worst_is_point = q->kind == FormKind::PointOnEdge;
          worst = v;
          first = false;
        }
      }
      if (worst < 0) return;
      if (worst == 0) {
        degenerate(worst_is_point ? "an input point lies on a vertex of a solution curve"
                                  : "a solution curve has an edge of length zero (non-transverse)");
        return;
      }
      record(sol.particular);
      return;
    }
    const auto sol = echelon_.solve<Rational>();
    const Rational s = best_slack<Rational>(active_, sol);
    if (s < 0) return;
    degenerate(s > 0 ? "the incidence conditions are dependent: a positive-dimensional family of curves passes "
                       "through the points"
                     : "the incidence conditions are dependent and met only on the boundary of a cell");
  }

  void degenerate(std::string reason) {
    outcome_.degenerate = true;
    outcome_.reason = fmt::format("{} (type {})", reason, sub_.str());
  }

  void record(const linalg::Vector<Rational>& c) {
    auto coeff = [&](const LatticePoint& v) { return c(static_cast<Eigen::Index>(idx(v))); };
    // Curve vertex of each cell: where all its monomials tie.
    std::vector<Point2> vertices;
    for (const auto& cell : sub_.cells) {
      const auto& a = cell.corners[0];
      const auto& b = cell.corners[1];
      const auto& u = cell.corners[2];
      // (a-b).x = c_b - c_a, (a-u).x = c_u - c_a
      const Rational m00(a(0) - b(0)), m01(a(1) - b(1)), m10(a(0) - u(0)), m11(a(1) - u(1));
      const Rational r0 = coeff(b) - coeff(a), r1 = coeff(u) - coeff(a);
      const Rational det = m00 * m11 - m01 * m10;
      vertices.emplace_back((r0 * m11 - m01 * r1) / det, (m00 * r1 - m10 * r0) / det);
    }
    std::vector<CurveEdge> edges;
    std::vector<CurveRay> rays;
    for (const auto& e : edges_) {
      const auto& adj = adjacent_.at({key(e.a), key(e.b)});
      const LatticePoint span = e.b - e.a;
      const long weight = lattice_length(span);
      if (e.interior) {
        const int from = static_cast<int>(adj[0].first), to = static_cast<int>(adj[1].first);
        const Point2 delta = vertices[static_cast<std::size_t>(to)] - vertices[static_cast<std::size_t>(from)];
        LatticePoint dir = primitive(rotate_cw(span));
        if (delta.dot(to_point2(dir)) < 0) dir = -dir;
        edges.push_back({from, to, dir, weight});
      } else {
        LatticePoint dir;
        if (e.a(1) == 0 && e.b(1) == 0)
          dir = LatticePoint(0, 1);
        else if (e.a(0) == 0 && e.b(0) == 0)
          dir = LatticePoint(1, 0);
        else
          dir = LatticePoint(-1, -1);
        rays.push_back({static_cast<int>(adj[0].first), dir, weight});
      }
    }
    long mult = 1;
    for (const auto& cell : sub_.cells)
      if (!cell.is_parallelogram()) mult *= cell.twice_area();
    PlaneTropicalCurve curve(std::move(vertices), std::move(edges), std::move(rays));
    if (!check_balancing(curve) || degree_of(curve) != sub_.degree)
      throw std::logic_error("reconstructed curve is not a balanced curve of the expected degree");
    outcome_.curves.push_back({std::move(curve), sub_, mult, assignment_});
  }

  const DualSubdivision& sub_;
  const std::vector<Point2>& pts_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<LatticePoint> V_;
  std::vector<SubdivisionEdge> edges_;
  std::map<std::pair<long, long>, int> index_;
  std::map<std::pair<std::pair<long, long>, std::pair<long, long>>, std::vector<std::pair<std::size_t, LatticePoint>>>
      adjacent_;
  Echelon echelon_;
  std::vector<Inequality> convexity_;
  std::vector<std::vector<Inequality>> point_ineqs_;
  std::vector<const Inequality*> active_;
  std::vector<int> assignment_;
  TypeOutcome outcome_;
};

}  // namespace

CountResult count_through(long d, long g, const std::vector<TropPoint2>& pts, const CountLimits& limits) {
  check_degree_genus(d, g);
  if (d > 3 || g > 1)
    throw ResourceLimitError(fmt::format("direct enumeration is bounded to d <= 3 and g <= 1 (got d={}, g={})", d, g));
  const auto n = static_cast<std::size_t>(incidence_count(d, g));
  if (pts.size() != n)
    throw std::invalid_argument(fmt::format("expected {} points for d={}, g={}, got {}", n, d, g, pts.size()));
  std::vector<Point2> finite;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_finite()) throw std::invalid_argument(fmt::format("point {} has an infinite coordinate", i));
    finite.push_back(pts[i].finite());
    for (std::size_t j = 0; j < i; ++j)
      if (finite[j] == finite[i]) throw std::invalid_argument(fmt::format("points {} and {} coincide", j, i));
  }

  const auto types = enumerate_simple_subdivisions(d, g);
  // Each point list element is copied per worker through the const reference.
  auto per_type = parallel_map_chunks<TypeOutcome>(types.size(), limits.threads, [&](std::size_t t) {
    return TypeSearch(types[t], finite, limits.max_nodes_per_type).run();
  });

  CountResult result;
  result.d = d;
  result.g = g;
  bool exhausted = false;
  for (auto& o : per_type) {
    for (auto& c : o.curves) {
      result.N += c.multiplicity;
      result.curves.push_back(std::move(c));
    }
    if (o.degenerate && result.certificate.kind != CertificateKind::Degenerate) {
      result.certificate = {CertificateKind::Degenerate, o.reason, false};
    }
    exhausted = exhausted || o.exhausted;
  }
  if (result.certificate.kind != CertificateKind::Degenerate) {
    if (exhausted)
      result.certificate = {CertificateKind::Inconclusive,
                            fmt::format("search budget of {} nodes per type exceeded", limits.max_nodes_per_type), true};
    else
      result.certificate = {CertificateKind::General, "", false};
  }
  return result;
}

std::vector<LineConfig> default_config_pool(const FieldParams& params, std::uint64_t seed, int random_count) {
  std::vector<LineConfig> pool;
  std::array<int, 3> perm{0, 1, 2};
  do {
    Matrix3q m = Matrix3q::Zero();
    for (int i = 0; i < 3; ++i) m(i, perm[static_cast<std::size_t>(i)]) = 1;
    pool.emplace_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      Matrix3q m = Matrix3q::Zero();
      m(0, 0) = power(params.p(), a);
      m(1, 1) = power(params.p(), b);
      m(2, 2) = 1;
      pool.emplace_back(m);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2), pos(0, 2);
  for (int k = 0; k < random_count; ++k) {
    Matrix3q m = Matrix3q::Identity();
    for (int step = 0; step < 6; ++step) {
      const int i = pos(rng);
      int j = pos(rng);
      if (i == j) j = (j + 1) % 3;
      Matrix3q elem = Matrix3q::Identity();
      elem(i, j) = entry(rng);
      m = elem * m;
    }
    pool.emplace_back(m);
  }
  return pool;
}

MumfordResult mumford_count(const std::vector<ProjPoint2>& points, long d, long g,
                            const std::vector<LineConfig>& configs, const FieldParams& params,
                            const CountLimits& limits) {
  check_degree_genus(d, g);
  const auto n = static_cast<std::size_t>(incidence_count(d, g));
  if (points.size() != n)
    throw std::invalid_argument(fmt::format("expected {} points for d={}, g={}, got {}", n, d, g, points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw std::invalid_argument(fmt::format("points {} and {} coincide", j, i));

  MumfordResult out;
  const BigInt expected = count_lattice_paths(d, g, limits.threads);
  std::string last_reason = "configuration pool is empty";
  for (const auto& cfg : configs) {
    ++out.configs_tried;
    std::vector<TropPoint2> trop;
    bool usable = true;
    for (const auto& pt : points) {
      try {
        trop.push_back(tropicalize(pt, cfg, params));
      } catch (const std::domain_error&) {
        usable = false;
        last_reason = "a point lies on a line of the configuration";
        break;
      }
      if (!trop.back().is_finite()) {
        usable = false;
        last_reason = "a tropicalised point has an infinite coordinate";
        break;
      }
    }
    if (!usable) continue;
    for (std::size_t i = 0; i < trop.size() && usable; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (trop[i] == trop[j]) {
          usable = false;
          last_reason = "two tropicalised points coincide";
          break;
        }
    if (!usable) continue;
    CountResult res = count_through(d, g, trop, limits);
    if (res.certificate.kind != CertificateKind::General) {
      last_reason = res.certificate.reason;
      out.resource_exceeded = out.resource_exceeded || res.certificate.resource_exceeded;
      continue;
    }
    if (res.N != expected) {
      out.reason = fmt::format("count {} disagrees with the lattice path count {}; refusing to certify",
                               to_string(res.N), to_string(expected));
      return out;
    }
    out.certified = true;
    out.N = res.N;
    out.config = cfg;
    out.tropical_points = std::move(trop);
    out.count = std::move(res);
    out.resource_exceeded = false;
    return out;
  }
  out.reason = fmt::format("no configuration among {} gave a general-position certificate (last: {})",
                           out.configs_tried, last_reason);
  return out;
}

}  // namespace padtrop
