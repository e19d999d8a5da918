#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace padtrop {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "num", "num/den" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Largest integer <= q.
BigInt floor(const Rational& q);

// An element of Q extended by +infinity; valuations live here.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(Rational v) : value_(std::move(v)) {}
  explicit Valuation(long v) : value_(v) {}

  static Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Precondition: finite.
  const Rational& value() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(Rational(a.value_ + b.value_));
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace padtrop
