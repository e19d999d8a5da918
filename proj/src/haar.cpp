#include "padtrop/haar.hpp"

#include "padtrop/padic.hpp"

#include <cmath>
#include <stdexcept>

namespace padtrop {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851f42d4c957f2dULL))) {}

std::uint64_t SplitRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

double SplitRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

long DigitExpansion::valuation(long high) const {
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] != 0) return low + static_cast<long>(i);
  return high;
}

Rational DigitExpansion::to_rational(long p) const {
  BigInt n(0);
  for (std::size_t i = digits.size(); i-- > 0;) n = n * p + digits[i];
  return Rational(n) * power(p, low);
}

DigitSpace::DigitSpace(long p, long low, long size) : p_(p), low_(low), size_(size) {
  if (p < 2 || p > 255) throw std::invalid_argument("digit spaces support 2 <= p <= 255");
  if (size < 1) throw std::invalid_argument("digit space must hold at least one position");
}

DigitExpansion DigitSpace::zero() const { return {low_, std::vector<std::uint8_t>(static_cast<std::size_t>(size_), 0)}; }

DigitExpansion DigitSpace::one() const {
  if (low_ > 0 || high() <= 0) throw std::invalid_argument("digit space does not contain position 0");
  auto e = zero();
  e.digits[static_cast<std::size_t>(-low_)] = 1;
  return e;
}

DigitExpansion DigitSpace::near(const DigitExpansion& center, long k, long depth, SplitRng& rng) const {
  if (k < low_ || k >= high()) throw std::out_of_range("offset valuation outside the digit space");
  DigitExpansion out = center;
  const auto start = static_cast<std::size_t>(k - low_);
  const std::size_t stop = std::min(static_cast<std::size_t>(size_), start + 1 + static_cast<std::size_t>(depth));
  unsigned carry = 0;
  const auto p = static_cast<unsigned>(p_);
  for (std::size_t i = start; i < static_cast<std::size_t>(size_); ++i) {
    unsigned add = 0;
    if (i == start)
      add = 1 + static_cast<unsigned>(rng.below(p - 1));
    else if (i < stop)
      add = static_cast<unsigned>(rng.below(p));
    else if (carry == 0)
      break;
    const unsigned s = out.digits[i] + add + carry;
    out.digits[i] = static_cast<std::uint8_t>(s % p);
    carry = s / p;
  }
  return out;
}

long DigitSpace::val_diff(const DigitExpansion& a, const DigitExpansion& b) const {
  for (std::size_t i = 0; i < static_cast<std::size_t>(size_); ++i)
    if (a.digits[i] != b.digits[i]) return low_ + static_cast<long>(i);
  return high();
}

Rational haar_sample(long p, long v_min, long v_max, long depth, SplitRng& rng) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (v_min > v_max) throw std::invalid_argument("empty valuation window");
  if (depth < 1) throw std::invalid_argument("digit depth must be >= 1");
  // P(k) proportional to p^{-(k - v_min)}: inverse CDF of a truncated geometric law.
  const double r = 1.0 / static_cast<double>(p);
  const long span = v_max - v_min + 1;
  const double total = (1.0 - std::pow(r, static_cast<double>(span))) / (1.0 - r);
  double u = rng.uniform01() * total;
  long k = v_min;
  double w = 1.0;
  while (k < v_max && u >= w) {
    u -= w;
    w *= r;
    ++k;
  }
  BigInt unit(1 + rng.below(static_cast<std::uint64_t>(p - 1)));
  BigInt scale(1);
  for (long i = 1; i < depth; ++i) {
    scale *= p;
    unit += scale * rng.below(static_cast<std::uint64_t>(p));
  }
  return Rational(unit) * power(p, k);
}

Rational haar_sample(long p, long v_min, long v_max, long depth, std::uint64_t seed) {
  SplitRng rng(seed, 0);
  return haar_sample(p, v_min, v_max, depth, rng);
}

}  // namespace padtrop
