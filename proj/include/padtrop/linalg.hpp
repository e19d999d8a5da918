#pragma once

// Small dense linear algebra over an arbitrary field-like scalar: echelon
// forms, affine solution sets and a two-phase simplex. Instantiated with
// Rational for exact work and with double for fast pruning.

#include "padtrop/rational.hpp"

#include <Eigen/Core>

#include <cmath>
#include <vector>

namespace padtrop::linalg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
struct ZeroTest {
  static bool is_zero(const Scalar& x) { return x == 0; }
  static bool is_positive(const Scalar& x) { return x > 0; }
};

template <>
struct ZeroTest<double> {
  static constexpr double eps = 1e-9;
  static bool is_zero(double x) { return std::abs(x) <= eps; }
  static bool is_positive(double x) { return x > eps; }
};

template <class Scalar>
bool is_zero(const Scalar& x) { return ZeroTest<Scalar>::is_zero(x); }
template <class Scalar>
bool is_positive(const Scalar& x) { return ZeroTest<Scalar>::is_positive(x); }

// Reduced row echelon form in place; returns pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        // Prefer the largest magnitude for floating point, the first nonzero otherwise.
        if constexpr (std::is_floating_point_v<Scalar>) {
          if (sel < 0 || std::abs(m(r, col)) > std::abs(m(sel, col))) sel = r;
        } else {
          sel = r;
          break;
        }
      }
    }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Eigen::Index rank(Matrix<Scalar> m) {
  return static_cast<Eigen::Index>(rref(m).size());
}

// {x : A x = b} written as particular + kernel * t.
template <class Scalar>
struct AffineSolution {
  bool consistent = false;
  Vector<Scalar> particular;
  Matrix<Scalar> kernel;
  Eigen::Index rank = 0;
};

template <class Scalar>
AffineSolution<Scalar> affine_solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  const Eigen::Index n = a.cols();
  Matrix<Scalar> aug(a.rows(), n + 1);
  aug << a, b;
  const auto pivots = rref(aug);
  AffineSolution<Scalar> out;
  out.rank = static_cast<Eigen::Index>(pivots.size());
  for (Eigen::Index col : pivots) {
    if (col == n) return out;  // 0 = nonzero row
  }
  out.consistent = true;
  out.particular = Vector<Scalar>::Zero(n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    out.particular(pivots[r]) = aug(static_cast<Eigen::Index>(r), n);
    is_pivot[static_cast<std::size_t>(pivots[r])] = true;
  }
  out.kernel = Matrix<Scalar>::Zero(n, n - out.rank);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    out.kernel(free, k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out.kernel(pivots[r], k) = -aug(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return out;
}

enum class LpStatus { Optimal, Unbounded, Infeasible };

template <class Scalar>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar value{};
  Vector<Scalar> x;
};

// minimize c^T x subject to A x = b, x >= 0. Dense two-phase tableau simplex
// with Bland's rule, so it terminates on degenerate problems.
template <class Scalar>
LpResult<Scalar> simplex_standard(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& c) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  // Columns: x (n), artificials (m), rhs.
  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < Scalar(0);
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = flip ? Scalar(-a(i, j)) : a(i, j);
    t(i, n + i) = Scalar(1);
    t(i, n + m) = flip ? Scalar(-b(i)) : b(i);
    basis[static_cast<std::size_t>(i)] = n + i;
  }

  auto pivot = [&](Eigen::Index r, Eigen::Index col) {
    const Scalar inv = Scalar(1) / t(r, col);
    t.row(r) *= inv;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == r || is_zero(t(i, col))) continue;
      const Scalar f = t(i, col);
      t.row(i) -= f * t.row(r);
    }
    basis[static_cast<std::size_t>(r)] = col;
  };

  // Objective row holds reduced costs; minimisation, so enter on negative cost.
  auto run = [&](Eigen::Index allowed_cols) -> bool {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j) {
        if (is_positive(Scalar(-t(m, j)))) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m; ++i) {
        if (!is_positive(t(i, enter))) continue;
        const Scalar ratio = t(i, n + m) / t(i, enter);
        if (leave < 0 || ratio < best ||
            (!(best < ratio) && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  // Phase 1: minimise the sum of artificials.
  for (Eigen::Index i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (Eigen::Index i = 0; i < m; ++i) t(m, n + i) = Scalar(0);
  run(n + m);
  LpResult<Scalar> out;
  if (is_positive(Scalar(-t(m, n + m)))) return out;  // infeasible

  // Drive artificials out of the basis where possible.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[static_cast<std::size_t>(i)] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!is_zero(t(i, j))) {
        pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 objective.
  t.row(m).setZero();
  for (Eigen::Index j = 0; j < n; ++j) t(m, j) = c(j);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index bj = basis[static_cast<std::size_t>(i)];
    if (bj < n && !is_zero(t(m, bj))) {
      const Scalar f = t(m, bj);
      t.row(m) -= f * t.row(i);
    }
  }
  // Artificial columns are barred from re-entering.
  if (!run(n)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index bj = basis[static_cast<std::size_t>(i)];
    if (bj < n) out.x(bj) = t(i, n + m);
  }
  out.value = c.dot(out.x);
  return out;
}

// maximize c^T y subject to G y >= h with y free.
template <class Scalar>
LpResult<Scalar> maximize_free(const Matrix<Scalar>& g, const Vector<Scalar>& h, const Vector<Scalar>& c) {
  const Eigen::Index k = g.rows();
  const Eigen::Index n = g.cols();
  // y = y+ - y-, G y - w = h.
  Matrix<Scalar> a = Matrix<Scalar>::Zero(k, 2 * n + k);
  a.leftCols(n) = g;
  a.middleCols(n, n) = -g;
  a.rightCols(k) = -Matrix<Scalar>::Identity(k, k);
  Vector<Scalar> cost = Vector<Scalar>::Zero(2 * n + k);
  cost.head(n) = -c;
  cost.segment(n, n) = c;
  auto res = simplex_standard<Scalar>(a, h, cost);
  LpResult<Scalar> out;
  out.status = res.status;
  if (res.status != LpStatus::Optimal) return out;
  out.x = res.x.head(n) - res.x.segment(n, n);
  out.value = c.dot(out.x);
  return out;
}

// Largest s <= cap such that G y + h >= s componentwise for some y. The
// system is always feasible for small enough s. Solved through the dual
//   min h.l + cap*m  s.t.  G^T l = 0, sum(l) + m = 1, l, m >= 0,
// which has only cols(G) + 1 rows.
template <class Scalar>
Scalar max_uniform_slack(const Matrix<Scalar>& g, const Vector<Scalar>& h, const Scalar& cap) {
  const Eigen::Index k = g.rows();
  const Eigen::Index n = g.cols();
  if (k == 0) return cap;
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n + 1, k + 1);
  a.topLeftCorner(n, k) = g.transpose();
  a.row(n).setConstant(Scalar(1));
  Vector<Scalar> b = Vector<Scalar>::Zero(n + 1);
  b(n) = Scalar(1);
  Vector<Scalar> cost(k + 1);
  cost.head(k) = h;
  cost(k) = cap;
  return simplex_standard<Scalar>(a, b, cost).value;
}

}  // namespace padtrop::linalg
