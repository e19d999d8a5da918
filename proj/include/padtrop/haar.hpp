#pragma once

// Seeded Haar samplers on Q_p built from finite p-adic digit expansions.

#include "padtrop/rational.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace padtrop {

// Deterministic 64-bit stream. Distributions are implemented here rather than
// with <random> distributions so that samples agree across standard libraries.
class SplitRng {
 public:
  // Independent stream for (seed, stream) pairs.
  SplitRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  // Uniform on {0, ..., n-1} by rejection.
  std::uint64_t below(std::uint64_t n);
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

// Finite digit expansion sum_{i} digit[i] * p^(low + i), digits in [0, p).
// Equality up to the stored precision stands in for p-adic equality.
struct DigitExpansion {
  long low = 0;
  std::vector<std::uint8_t> digits;

  // Index of the first nonzero digit as an absolute position, or `high` when
  // all digits vanish.
  long valuation(long high) const;
  Rational to_rational(long p) const;
};

// Fixed-size window of positions [low, low + size) shared by all expansions in
// one computation, so differences are digit-by-digit.
class DigitSpace {
 public:
  DigitSpace(long p, long low, long size);

  long p() const { return p_; }
  long low() const { return low_; }
  long high() const { return low_ + size_; }

  DigitExpansion zero() const;
  DigitExpansion one() const;
  // center + p^k * u with u a Haar-random unit carrying `depth` digits (or up
  // to the top of the space). Precondition: low <= k < high.
  DigitExpansion near(const DigitExpansion& center, long k, long depth, SplitRng& rng) const;
  // Valuation of a - b, or high() when they agree on every stored digit.
  long val_diff(const DigitExpansion& a, const DigitExpansion& b) const;

 private:
  long p_;
  long low_;
  long size_;
};

// Haar sample with valuation k drawn proportionally to p^{-k}(1 - 1/p) on
// [v_min, v_max]: p^k times a unit of `depth` uniform digits, the leading one
// nonzero.
Rational haar_sample(long p, long v_min, long v_max, long depth, SplitRng& rng);
// Convenience form drawing from stream 0 of `seed`.
Rational haar_sample(long p, long v_min, long v_max, long depth, std::uint64_t seed);

}  // namespace padtrop
