#include "padtrop/padic.hpp"

#include <gmp.h>

#include <cctype>
#include <stdexcept>

namespace padtrop {

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_big = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    return Rational(to_big(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  const BigInt d = to_big(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(to_big(num), d);
}

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const BigInt& z) { return z.str(); }

BigInt floor(const Rational& q) {
  BigInt n = numerator(q);
  BigInt d = denominator(q);
  BigInt r;
  mpz_fdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
  return r;
}

const Rational& Valuation::value() const {
  if (infinite_) throw std::logic_error("value() of infinite valuation");
  return value_;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

FieldParams::FieldParams(long p, long e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("ramification index must be >= 1");
}

namespace {

long remove_factor(BigInt& z, long p) {
  BigInt pz(p);
  return static_cast<long>(mpz_remove(z.backend().data(), z.backend().data(), pz.backend().data()));
}

}  // namespace

Valuation val(const Rational& x, const FieldParams& params) {
  if (x == 0) return Valuation::infinity();
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  return Valuation(remove_factor(n, params.p()) - remove_factor(d, params.p()));
}

Rational power(long p, long k) {
  BigInt r;
  mpz_ui_pow_ui(r.backend().data(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
  return k >= 0 ? Rational(r) : Rational(BigInt(1), r);
}

Rational abs(const Rational& x, const FieldParams& params) {
  const Valuation v = val(x, params);
  if (v.is_infinite()) return Rational(0);
  return power(params.p(), -v.value().convert_to<long>());
}

ProjPoint1::ProjPoint1(Rational x0, Rational x1) {
  if (x0 == 0 && x1 == 0) throw std::invalid_argument("(0:0) is not a projective point");
  const Rational lead = x0 != 0 ? x0 : x1;
  coords_ << x0 / lead, x1 / lead;
}

Rational ProjPoint1::affine() const {
  if (is_infinity()) throw std::domain_error("affine() of the point at infinity");
  return coords_(0) / coords_(1);
}

std::string ProjPoint1::str() const { return is_infinity() ? "inf" : to_string(affine()); }

ProjPoint1 parse_proj_point1(std::string_view text) {
  if (text == "inf") return ProjPoint1::infinity();
  return ProjPoint1::finite(parse_rational(text));
}

ProjPoint2::ProjPoint2(Rational x0, Rational x1, Rational x2) {
  coords_ << std::move(x0), std::move(x1), std::move(x2);
  canonicalize();
}

ProjPoint2::ProjPoint2(const Vector3q& v) : coords_(v) { canonicalize(); }

void ProjPoint2::canonicalize() {
  for (int i = 0; i < 3; ++i) {
    if (coords_(i) != 0) {
      const Rational lead = coords_(i);
      for (int j = 0; j < 3; ++j) coords_(j) /= lead;
      return;
    }
  }
  throw std::invalid_argument("(0:0:0) is not a projective point");
}

std::string ProjPoint2::str() const {
  return "(" + to_string(coords_(0)) + ":" + to_string(coords_(1)) + ":" + to_string(coords_(2)) + ")";
}

Moebius::Moebius(const Matrix2q& m) : m_(m) {
  if (m_.determinant() == 0) throw std::invalid_argument("degenerate Moebius matrix (ad - bc = 0)");
}

Moebius::Moebius(Rational a, Rational b, Rational c, Rational d) {
  m_ << std::move(a), std::move(b), std::move(c), std::move(d);
  if (m_.determinant() == 0) throw std::invalid_argument("degenerate Moebius matrix (ad - bc = 0)");
}

ProjPoint1 Moebius::operator()(const ProjPoint1& z) const {
  const Vector2q w = m_ * z.coords();
  return ProjPoint1(w(0), w(1));
}

bool Moebius::equivalent(const Moebius& other) const {
  // Proportional iff all 2x2 minors of the stacked entries vanish.
  const auto& a = m_.reshaped();
  const auto& b = other.m_.reshaped();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a(i) * b(j) != a(j) * b(i)) return false;
  return true;
}

namespace {

// [x, y] = x0 y1 - x1 y0; for finite points this is (x - y) up to a unit factor.
Rational bracket(const ProjPoint1& x, const ProjPoint1& y) {
  return x.coords()(0) * y.coords()(1) - x.coords()(1) * y.coords()(0);
}

}  // namespace

Moebius normalize_to_standard_triple(const ProjPoint1& a, const ProjPoint1& b, const ProjPoint1& c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("normalize_to_standard_triple needs distinct points");
  // m(z) = ([z,a][b,c] : [z,c][b,a]).
  const Rational bc = bracket(b, c);
  const Rational ba = bracket(b, a);
  const auto& av = a.coords();
  const auto& cv = c.coords();
  return Moebius(bc * av(1), -bc * av(0), ba * cv(1), -ba * cv(0));
}

ProjPoint1 cross_ratio(const ProjPoint1& a, const ProjPoint1& b, const ProjPoint1& c, const ProjPoint1& d) {
  return ProjPoint1(bracket(a, c) * bracket(b, d), bracket(a, d) * bracket(b, c));
}

Disc::Disc(Rational center_, Rational radius_val_, bool closed_, FieldParams params_)
    : center(std::move(center_)), radius_val(std::move(radius_val_)), closed(closed_), params(params_) {
  if (!params.on_grid(radius_val))
    throw std::invalid_argument("disc radius valuation " + to_string(radius_val) + " is not in (1/e)Z");
}

DiscRelation disc_relation(const Disc& d1, const Disc& d2) {
  if (!(d1.params == d2.params)) throw std::invalid_argument("disc_relation: mismatched field parameters");
  // Over K the open disc {v > r} equals the closed disc {v >= r + 1/e}.
  const Rational step = d1.params.uniformizer_valuation();
  const Rational r1 = d1.closed ? d1.radius_val : Rational(d1.radius_val + step);
  const Rational r2 = d2.closed ? d2.radius_val : Rational(d2.radius_val + step);
  const Valuation gap = val(Rational(d1.center - d2.center), d1.params);
  const Rational& coarse = r1 < r2 ? r1 : r2;
  if (gap < Valuation(coarse)) return DiscRelation::Disjoint;
  if (r1 == r2) return DiscRelation::Equal;
  return r1 > r2 ? DiscRelation::FirstInsideSecond : DiscRelation::SecondInsideFirst;
}

std::string to_string(DiscRelation r) {
  switch (r) {
    case DiscRelation::Equal: return "Equal";
    case DiscRelation::FirstInsideSecond: return "FirstInsideSecond";
    case DiscRelation::SecondInsideFirst: return "SecondInsideFirst";
    case DiscRelation::Disjoint: return "Disjoint";
  }
  return "?";
}

}  // namespace padtrop
