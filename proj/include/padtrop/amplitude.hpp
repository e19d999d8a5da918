#pragma once

// p-adic Haar integrals: the 4-point Veneziano amplitude region by region, the
// total mass of P^1(Q_p), Monte-Carlo n-point tachyon amplitudes and the
// distribution of Haar samples over the cells of M_{0,n}.

#include "padtrop/btree.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace padtrop {

// Real on-shell momenta: sum k_i = 0 and k_i^2 = 2, each within 1e-9.
class Kinematics {
 public:
  static constexpr double tolerance = 1e-9;

  explicit Kinematics(std::vector<Eigen::VectorXd> momenta);
  // Momenta realising a Gram matrix of k_1..k_{n-1} (diagonal 2, positive
  // definite); k_n closes the sum. Throws when the last momentum is off shell.
  static Kinematics from_gram(const Eigen::MatrixXd& gram);
  // Four momenta with k1.k2 = a and k1.k3 = b.
  static Kinematics four_point(double a, double b);

  int n() const { return static_cast<int>(momenta_.size()); }
  // 1-based labels.
  double dot(int i, int j) const;
  const std::vector<Eigen::VectorXd>& momenta() const { return momenta_; }

 private:
  std::vector<Eigen::VectorXd> momenta_;
};

enum class Region { InsideZero, InsideOne, Units, Outside };
std::string to_string(Region r);

struct RegionValue {
  Region region;
  double exponent;  // a, b, 0 or a + b
  double value;
  bool convergent;
};

enum class ContinuationMode { StrictConvergent, AnalyticContinuation };

struct Veneziano4 {
  double value;
  std::vector<RegionValue> regions;
};

// A = U(p) + G(p,a) + G(p,b) + H(p,a+b). Throws std::domain_error at poles
// and, in StrictConvergent mode, naming the first divergent region.
Veneziano4 veneziano4(long p, double a, double b, ContinuationMode mode);

struct Veneziano4Exact {
  Rational value;
  std::vector<std::pair<Region, Rational>> regions;
};
// Same decomposition in exact arithmetic for integer exponents, always by
// analytic continuation.
Veneziano4Exact veneziano4_exact(long p, long a, long b);

// Haar mass of {|x| = |x - 1| = 1}: 1 - 2/p.
Rational units_region_mass(long p);

// Mass of P^1(Q_p): Z_p plus the chart x -> 1/(px) for |x| > 1, summed as an
// exact geometric series. Equals 2.
Rational p1_total_mass(long p);
// Same with the |x| > 1 part truncated after valuations -1..-depth.
Rational p1_total_mass_partial(long p, long depth);

// Exponents of the integrand over x_2..x_{n-2} with punctures 0, 1, inf
// fixed: prod |x_i|^{to0_i} |1 - x_i|^{to1_i} prod_{i<j} |x_i - x_j|^{pair_ij}.
struct ExponentTable {
  std::vector<double> to0;
  std::vector<double> to1;
  Eigen::MatrixXd pair;

  int variables() const { return static_cast<int>(to0.size()); }
};

// n = 4 follows |x|^{k1.k2} |1-x|^{k1.k3}; n >= 5 uses k1.ki, k_{n-1}.ki and
// ki.kj.
ExponentTable exponents_of(const Kinematics& kin);
ExponentTable four_point_exponents(double a, double b);

struct ConvergenceReport {
  bool convergent;
  // Smallest slack over all collision and escape-to-infinity conditions.
  double margin;
  std::string worst;
};
ConvergenceReport check_convergence(const ExponentTable& t);

struct McOptions {
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  // Valuation window for every variable; chosen from the convergence margin
  // when empty.
  std::optional<std::pair<long, long>> window;
  long digits = 24;
  unsigned threads = 1;
  // Integrate only over |x| = |1 - x| = 1 (n = 4).
  bool units_only = false;
};

struct McResult {
  double estimate = 0;
  double std_error = 0;
  std::int64_t samples = 0;
  long v_min = 0;
  long v_max = 0;
  ConvergenceReport convergence;
  std::string warning;
};

McResult amplitude_n_mc(long p, const ExponentTable& t, const McOptions& opts);
McResult amplitude_n_mc(long p, const Kinematics& kin, const McOptions& opts);

struct CellHistogram {
  int n = 0;
  std::int64_t samples = 0;
  std::map<CombType, std::int64_t> counts;

  double frequency(const CombType& t) const;
};

// Types of the dendrograms of {0, 1, inf, x_2, ...} with x_i Haar-random in
// Z_p, for n = 4 or 5.
CellHistogram cell_histogram(long p, int n, std::int64_t samples, std::uint64_t seed, unsigned threads = 1);

// Letter names A-D of the four cells of M_{0,4} for labels (0, 1, inf, x).
std::string four_point_cell_name(const CombType& t);

}  // namespace padtrop
