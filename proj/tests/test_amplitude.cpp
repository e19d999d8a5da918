#include "padtrop/amplitude.hpp"
#include "padtrop/haar.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace padtrop;

namespace {

// Region-by-region series of the four-point integrand; the shell {v = k} has
// mass p^{-k}(1 - 1/p). Terms decay like p^{-margin k}, so the depth (at least
// 40) is chosen to push the tail well below p^{-30}.
double series_oracle(long p, double a, double b) {
  const double q = static_cast<double>(p);
  const double margin = std::min({1 + a, 1 + b, -(1 + a + b)});
  const int depth = std::max(40, static_cast<int>(std::ceil(40 / margin)) + 1);
  const double shell = 1 - 1 / q;  // shell mass without its p^{-k}
  double total = 1 - 2 / q;
  for (int k = 1; k <= depth; ++k) {
    total += shell * std::pow(q, -k * (1 + a));     // |x| = p^{-k}, |1 - x| = 1
    total += shell * std::pow(q, -k * (1 + b));     // |1 - x| = p^{-k}, |x| = 1
    total += shell * std::pow(q, k * (1 + a + b));  // |x| = |1 - x| = p^k, shell mass p^k(1 - 1/p)
  }
  return total;
}

bool within_sigma(double estimate, double se, double exact, double k = 3) { return std::abs(estimate - exact) <= k * se; }

}  // namespace

TEST_CASE("kinematics") {
  for (double a : {-0.8, -0.3, 0.5}) {
    const Kinematics k = Kinematics::four_point(a, -0.7);
    CHECK(k.n() == 4);
    CHECK(k.dot(1, 2) == doctest::Approx(a));
    CHECK(k.dot(1, 3) == doctest::Approx(-0.7));
    CHECK(k.dot(1, 2) + k.dot(1, 3) + k.dot(1, 4) == doctest::Approx(-2).epsilon(1e-12));
    for (int i = 1; i <= 4; ++i) CHECK(k.dot(i, i) == doctest::Approx(2));
  }
  Eigen::MatrixXd gram = Eigen::MatrixXd::Constant(4, 4, -0.5);
  gram.diagonal().setConstant(2);
  const Kinematics five = Kinematics::from_gram(gram);
  CHECK(five.n() == 5);
  CHECK(five.dot(5, 5) == doctest::Approx(2));
  CHECK(five.momenta()[0].size() == 26);
  CHECK_THROWS(Kinematics({Eigen::VectorXd::Unit(2, 0), -Eigen::VectorXd::Unit(2, 0)}));
  CHECK_NOTHROW(Kinematics({Eigen::VectorXd::Constant(2, 1.0), Eigen::VectorXd::Constant(2, -1.0)}));
  CHECK_THROWS(Kinematics::four_point(5, 5));
}

TEST_CASE("closed-form four-point amplitude") {
  // Z_p has mass 1: U + G(0) + G(0).
  const auto exact = veneziano4_exact(5, 0, 0);
  Rational zp(0);
  for (const auto& [region, value] : exact.regions)
    if (region != Region::Outside) zp += value;
  CHECK(zp == 1);
  CHECK(exact.value == 0);
  for (long p : {2L, 3L, 7L}) CHECK(veneziano4_exact(p, 0, 0).value == 0);
  CHECK(units_region_mass(5) == Rational(3, 5));

  const Veneziano4 v = veneziano4(3, -0.8, -0.8, ContinuationMode::StrictConvergent);
  CHECK(std::isfinite(v.value));
  CHECK(v.regions.size() == 4);
  for (long p : {2L, 3L, 5L, 7L})
    for (auto [a, b] : {std::pair{-0.8, -0.8}, std::pair{-0.7, -0.6}, std::pair{-0.95, -0.2}, std::pair{-0.5, -0.55}}) {
      const double closed = veneziano4(p, a, b, ContinuationMode::StrictConvergent).value;
      CHECK(std::abs(closed - series_oracle(p, a, b)) < std::pow(static_cast<double>(p), -30) + 1e-12 * std::abs(closed));
    }

  CHECK_THROWS_AS(veneziano4(3, -1.5, -0.2, ContinuationMode::StrictConvergent), std::domain_error);
  CHECK_NOTHROW(veneziano4(3, -1.5, -0.2, ContinuationMode::AnalyticContinuation));
  CHECK_THROWS_AS(veneziano4(3, -1, -0.2, ContinuationMode::AnalyticContinuation), std::domain_error);
  CHECK_THROWS_AS(veneziano4(3, -0.4, -0.6, ContinuationMode::AnalyticContinuation), std::domain_error);
  CHECK(veneziano4(5, 0, 0, ContinuationMode::AnalyticContinuation).value == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("total mass of P^1") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    CHECK(p1_total_mass(p) == 2);
    CHECK(p1_total_mass_partial(p, 1) == 1 + (1 - Rational(1, p)));
    Rational previous(0);
    for (long depth = 0; depth <= 12; ++depth) {
      const Rational s = p1_total_mass_partial(p, depth);
      CHECK(s > previous);
      CHECK(s < 2);
      previous = s;
    }
  }
  CHECK_THROWS(p1_total_mass(4));
}

TEST_CASE("Haar samples") {
  const FieldParams f5(5);
  SplitRng rng(1, 0);
  for (int i = 0; i < 1000; ++i) CHECK(abs(haar_sample(5, 0, 0, 8, rng), f5) == 1);

  const int n = 100000;
  int deep = 0;
  SplitRng r2(2, 0);
  for (int i = 0; i < n; ++i) deep += val(haar_sample(5, 0, 20, 4, r2), f5).value() >= 1 ? 1 : 0;
  const double freq = static_cast<double>(deep) / n;
  CHECK(within_sigma(freq, std::sqrt(0.2 * 0.8 / n), 0.2));

  // Residues of x and x + c are both uniform (chi-square, 4 degrees of
  // freedom, 0.999 quantile 18.47).
  SplitRng r3(3, 0);
  std::vector<int> plain(5), shifted(5);
  for (int i = 0; i < n; ++i) {
    const Rational x = haar_sample(5, 0, 20, 6, r3);
    auto residue = [](const Rational& q) {
      const BigInt num = numerator(q) % 5, den = denominator(q) % 5;
      BigInt r = (num + 5) % 5;
      for (int inv = 1; inv < 5; ++inv)
        if ((den * inv) % 5 == 1) r = (r * inv) % 5;
      return static_cast<int>(r.convert_to<long>());
    };
    ++plain[static_cast<std::size_t>(residue(x))];
    ++shifted[static_cast<std::size_t>(residue(x + 3))];
  }
  for (const auto* counts : {&plain, &shifted}) {
    double chi2 = 0;
    for (int c : *counts) chi2 += (c - n / 5.0) * (c - n / 5.0) / (n / 5.0);
    CHECK(chi2 < 18.47);
  }
  CHECK(haar_sample(7, -3, 3, 10, std::uint64_t{9}) == haar_sample(7, -3, 3, 10, std::uint64_t{9}));
  CHECK_THROWS(haar_sample(5, 2, 1, 4, std::uint64_t{0}));
  CHECK_THROWS(haar_sample(6, 0, 1, 4, std::uint64_t{0}));
}

TEST_CASE("convergence of exponent tables") {
  CHECK(check_convergence(four_point_exponents(-0.8, -0.8)).convergent);
  CHECK(check_convergence(four_point_exponents(-0.8, -0.8)).margin == doctest::Approx(0.2));
  CHECK_FALSE(check_convergence(four_point_exponents(0, 0)).convergent);
  CHECK_FALSE(check_convergence(four_point_exponents(-1.2, -0.1)).convergent);
}

TEST_CASE("Monte-Carlo four-point amplitude") {
  McOptions o;
  o.samples = 400000;
  o.seed = 11;
  const McResult r = amplitude_n_mc(3, Kinematics::four_point(-0.8, -0.8), o);
  CHECK(r.warning.empty());
  CHECK(within_sigma(r.estimate, r.std_error, veneziano4(3, -0.8, -0.8, ContinuationMode::StrictConvergent).value));

  // x -> 1 - x swaps the two exponents.
  const McResult ab = amplitude_n_mc(5, four_point_exponents(-0.7, -0.6), o);
  o.seed = 12;
  const McResult ba = amplitude_n_mc(5, four_point_exponents(-0.6, -0.7), o);
  CHECK(std::abs(ab.estimate - ba.estimate) <= 3 * std::hypot(ab.std_error, ba.std_error));

  McOptions units;
  units.samples = 200000;
  units.seed = 5;
  units.window = {{0, 0}};
  units.units_only = true;
  const McResult u = amplitude_n_mc(5, four_point_exponents(0, 0), units);
  CHECK(within_sigma(u.estimate, std::max(u.std_error, 1e-12), 0.6));

  McOptions bad;
  bad.samples = 10000;
  const McResult divergent = amplitude_n_mc(5, four_point_exponents(0.5, 0.5), bad);
  CHECK_FALSE(divergent.convergence.convergent);
  CHECK_FALSE(divergent.warning.empty());
}

TEST_CASE("Monte-Carlo five-point amplitude is seed consistent and thread independent") {
  Eigen::MatrixXd gram = Eigen::MatrixXd::Constant(4, 4, -0.5);
  gram.diagonal().setConstant(2);
  const Kinematics kin = Kinematics::from_gram(gram);
  CHECK(check_convergence(exponents_of(kin)).convergent);
  McOptions o;
  o.samples = 200000;
  o.seed = 1;
  const McResult a = amplitude_n_mc(3, kin, o);
  o.seed = 2;
  const McResult b = amplitude_n_mc(3, kin, o);
  CHECK(std::abs(a.estimate - b.estimate) <= 3 * std::hypot(a.std_error, b.std_error));
  o.threads = 4;
  const McResult c = amplitude_n_mc(3, kin, o);
  CHECK(c.estimate == b.estimate);
  CHECK(c.std_error == b.std_error);
}

TEST_CASE("cell histograms") {
  const long p = 5;
  const std::int64_t n = 40000;
  const CellHistogram h = cell_histogram(p, 4, n, 3);
  double sum = 0;
  std::map<std::string, double> by_name;
  for (const auto& [type, count] : h.counts) {
    sum += h.frequency(type);
    by_name[four_point_cell_name(type)] += h.frequency(type);
  }
  CHECK(sum == doctest::Approx(1));
  const double sigma = std::sqrt(0.25 / static_cast<double>(n));
  CHECK(std::abs(by_name["D"] - 0.6) <= 3 * sigma);
  CHECK(std::abs(by_name["B"] - 0.2) <= 3 * sigma);
  CHECK(std::abs(by_name["C"] - 0.2) <= 3 * sigma);
  CHECK(std::abs(by_name["B"] - by_name["C"]) <= 3 * std::sqrt(2) * sigma);
  CHECK(by_name["A"] == 0);
  CHECK(cell_histogram(p, 4, 5000, 8, 1).counts == cell_histogram(p, 4, 5000, 8, 3).counts);

  const CellHistogram h5 = cell_histogram(3, 5, 5000, 1);
  std::int64_t total = 0;
  for (const auto& [type, count] : h5.counts) total += count;
  CHECK(total == 5000);
  CHECK_THROWS(cell_histogram(5, 6, 10, 1));
}
