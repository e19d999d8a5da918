#pragma once

// Exact p-adic scalars over Q, valuations, projective points and the
// PGL_2 action on P^1.

#include "padtrop/rational.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

#include <string>
#include <string_view>
#include <vector>

namespace padtrop {

bool is_prime(long n);

// Prime p and ramification index e. The value group of the field is (1/e)Z
// and the residue field is always F_p.
class FieldParams {
 public:
  explicit FieldParams(long p, long e = 1);

  long p() const { return p_; }
  long e() const { return e_; }
  // Size of the residue field (always p: totally ramified extensions only).
  long q() const { return p_; }
  // Valuation of a uniformiser.
  Rational uniformizer_valuation() const { return Rational(1, e_); }
  bool on_grid(const Rational& v) const { return is_integer(v * e_); }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;

 private:
  long p_;
  long e_;
};

// v(p) = 1. v(0) = +inf.
Valuation val(const Rational& x, const FieldParams& params);
// |x| = p^{-v(x)}, |0| = 0.
Rational abs(const Rational& x, const FieldParams& params);

// p^k for any integer k.
Rational power(long p, long k);

using Vector2q = Eigen::Matrix<Rational, 2, 1>;
using Vector3q = Eigen::Matrix<Rational, 3, 1>;
using Matrix2q = Eigen::Matrix<Rational, 2, 2>;
using Matrix3q = Eigen::Matrix<Rational, 3, 3>;

// Point (x0 : x1) of P^1(Q); the affine value is x0/x1, so (1:0) is infinity.
// Stored in canonical form: first nonzero coordinate equals 1.
class ProjPoint1 {
 public:
  ProjPoint1(Rational x0, Rational x1);
  static ProjPoint1 finite(const Rational& x) { return ProjPoint1(x, Rational(1)); }
  static ProjPoint1 infinity() { return ProjPoint1(Rational(1), Rational(0)); }

  const Vector2q& coords() const { return coords_; }
  bool is_infinity() const { return coords_(1) == 0; }
  // Precondition: not infinity.
  Rational affine() const;

  friend bool operator==(const ProjPoint1& a, const ProjPoint1& b) { return a.coords_ == b.coords_; }
  std::string str() const;

 private:
  Vector2q coords_;
};

// Parses "num/den", "num" or "inf".
ProjPoint1 parse_proj_point1(std::string_view text);

class ProjPoint2 {
 public:
  ProjPoint2(Rational x0, Rational x1, Rational x2);
  explicit ProjPoint2(const Vector3q& v);

  const Vector3q& coords() const { return coords_; }
  friend bool operator==(const ProjPoint2& a, const ProjPoint2& b) { return a.coords_ == b.coords_; }
  std::string str() const;

 private:
  void canonicalize();
  Vector3q coords_;
};

// z -> (az + b)/(cz + d) with ad - bc != 0.
class Moebius {
 public:
  explicit Moebius(const Matrix2q& m);
  Moebius(Rational a, Rational b, Rational c, Rational d);
  static Moebius identity() { return Moebius(1, 0, 0, 1); }

  const Matrix2q& matrix() const { return m_; }
  ProjPoint1 operator()(const ProjPoint1& z) const;
  // (f * g)(z) = f(g(z)).
  friend Moebius operator*(const Moebius& f, const Moebius& g) { return Moebius(Matrix2q(f.m_ * g.m_)); }
  // Equality in PGL_2: matrices agree up to a nonzero scalar.
  bool equivalent(const Moebius& other) const;

 private:
  Matrix2q m_;
};

inline ProjPoint1 moebius_apply(const Moebius& m, const ProjPoint1& z) { return m(z); }

// The unique Moebius map with m(a) = 0, m(b) = 1, m(c) = infinity.
Moebius normalize_to_standard_triple(const ProjPoint1& a, const ProjPoint1& b, const ProjPoint1& c);

// (a, b; c, d) = ((a-c)(b-d)) / ((a-d)(b-c)) computed projectively. Returns a
// point of P^1 so that degenerate configurations stay representable.
ProjPoint1 cross_ratio(const ProjPoint1& a, const ProjPoint1& b, const ProjPoint1& c, const ProjPoint1& d);

// {x : v(x - center) >= radius_val} (closed) or {x : v(x - center) > radius_val}.
struct Disc {
  Disc(Rational center, Rational radius_val, bool closed, FieldParams params);

  Rational center;
  Rational radius_val;
  bool closed;
  FieldParams params;
};

enum class DiscRelation { Equal, FirstInsideSecond, SecondInsideFirst, Disjoint };

DiscRelation disc_relation(const Disc& d1, const Disc& d2);
std::string to_string(DiscRelation r);

}  // namespace padtrop
