#include "padtrop/amplitude.hpp"

#include "padtrop/haar.hpp"
#include "padtrop/parallel.hpp"

#include <Eigen/Cholesky>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace padtrop {

Kinematics::Kinematics(std::vector<Eigen::VectorXd> momenta) : momenta_(std::move(momenta)) {
  if (momenta_.size() < 2) throw std::invalid_argument("kinematics need at least two momenta");
  const auto dim = momenta_.front().size();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
  for (std::size_t i = 0; i < momenta_.size(); ++i) {
    const auto& k = momenta_[i];
    if (k.size() != dim) throw std::invalid_argument("momenta have different dimensions");
    if (std::abs(k.squaredNorm() - 2.0) > tolerance)
      throw std::invalid_argument(fmt::format("k_{}^2 = {} is not 2", i + 1, k.squaredNorm()));
    sum += k;
  }
  if (sum.cwiseAbs().maxCoeff() > tolerance) throw std::invalid_argument("momenta do not sum to zero");
}

Kinematics Kinematics::from_gram(const Eigen::MatrixXd& gram) {
  const auto m = gram.rows();
  if (gram.cols() != m || m < 1) throw std::invalid_argument("Gram matrix must be square");
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("Gram matrix is not positive definite");
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::Index dim = std::max<Eigen::Index>(26, m);
  std::vector<Eigen::VectorXd> momenta;
  Eigen::VectorXd last = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::VectorXd k = Eigen::VectorXd::Zero(dim);
    k.head(m) = L.row(i).transpose();
    last -= k;
    momenta.push_back(std::move(k));
  }
  momenta.push_back(std::move(last));
  return Kinematics(std::move(momenta));
}

Kinematics Kinematics::four_point(double a, double b) {
  const double c = -2.0 - a - b;
  Eigen::Matrix3d g;
  g << 2, a, b, a, 2, c, b, c, 2;
  return from_gram(g);
}

double Kinematics::dot(int i, int j) const {
  return momenta_.at(static_cast<std::size_t>(i - 1)).dot(momenta_.at(static_cast<std::size_t>(j - 1)));
}

std::string to_string(Region r) {
  switch (r) {
    case Region::InsideZero: return "InsideZero";
    case Region::InsideOne: return "InsideOne";
    case Region::Units: return "Units";
    case Region::Outside: return "Outside";
  }
  return "?";
}

namespace {

void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument(fmt::format("{} is not prime", p));
}

// (1 - 1/p) r / (1 - r): the sum over k >= 1 of (1 - 1/p) r^k.
double geometric_region(long p, double r) { return (1.0 - 1.0 / static_cast<double>(p)) * r / (1.0 - r); }

}  // namespace

Veneziano4 veneziano4(long p, double a, double b, ContinuationMode mode) {
  require_prime(p);
  const double P = static_cast<double>(p);
  struct Spec {
    Region region;
    double exponent;
    double ratio;
    bool convergent;
  };
  const Spec specs[] = {
      {Region::InsideZero, a, std::pow(P, -(1.0 + a)), 1.0 + a > 0},
      {Region::InsideOne, b, std::pow(P, -(1.0 + b)), 1.0 + b > 0},
      {Region::Outside, a + b, std::pow(P, 1.0 + a + b), a + b + 1.0 < 0},
  };
  Veneziano4 out{1.0 - 2.0 / P, {{Region::Units, 0.0, 1.0 - 2.0 / P, true}}};
  for (const auto& s : specs) {
    if (!s.convergent && mode == ContinuationMode::StrictConvergent)
      throw std::domain_error(fmt::format("region {} diverges at exponent {}", to_string(s.region), s.exponent));
    if (s.ratio == 1.0) throw std::domain_error(fmt::format("pole in region {}", to_string(s.region)));
    const double v = geometric_region(p, s.ratio);
    out.regions.push_back({s.region, s.exponent, v, s.convergent});
    out.value += v;
  }
  return out;
}

Veneziano4Exact veneziano4_exact(long p, long a, long b) {
  require_prime(p);
  const Rational lead = 1 - Rational(1, p);
  auto region = [&](Region r, long log_ratio) {
    const Rational ratio = power(p, log_ratio);
    if (ratio == 1) throw std::domain_error(fmt::format("pole in region {}", to_string(r)));
    return std::pair{r, Rational(lead * ratio / (1 - ratio))};
  };
  Veneziano4Exact out{units_region_mass(p), {{Region::Units, units_region_mass(p)}}};
  out.regions.push_back(region(Region::InsideZero, -(1 + a)));
  out.regions.push_back(region(Region::InsideOne, -(1 + b)));
  out.regions.push_back(region(Region::Outside, 1 + a + b));
  for (std::size_t i = 1; i < out.regions.size(); ++i) out.value += out.regions[i].second;
  return out;
}

Rational units_region_mass(long p) {
  require_prime(p);
  return 1 - Rational(2, p);
}

Rational p1_total_mass(long p) {
  require_prime(p);
  // Valuation -k has Haar mass p^k (1 - 1/p) and weight p |x|^{-2} = p^{1-2k}:
  // term_k = (1 - 1/p) p^{1-k}, a geometric series with first term 1 - 1/p.
  const Rational first = 1 - Rational(1, p);
  const Rational ratio(1, p);
  return 1 + first / (1 - ratio);
}

Rational p1_total_mass_partial(long p, long depth) {
  require_prime(p);
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  Rational sum(1);
  for (long k = 1; k <= depth; ++k) sum += p * power(p, -2 * k) * power(p, k) * (1 - Rational(1, p));
  return sum;
}

ExponentTable four_point_exponents(double a, double b) {
  ExponentTable t;
  t.to0 = {a};
  t.to1 = {b};
  t.pair = Eigen::MatrixXd::Zero(1, 1);
  return t;
}

ExponentTable exponents_of(const Kinematics& kin) {
  const int n = kin.n();
  if (n < 4) throw std::invalid_argument("amplitudes need n >= 4 momenta");
  if (n == 4) return four_point_exponents(kin.dot(1, 2), kin.dot(1, 3));
  ExponentTable t;
  const int m = n - 3;
  t.pair = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    t.to0.push_back(kin.dot(1, i + 2));
    t.to1.push_back(kin.dot(n - 1, i + 2));
    for (int j = 0; j < m; ++j)
      if (i != j) t.pair(i, j) = kin.dot(i + 2, j + 2);
  }
  return t;
}

ConvergenceReport check_convergence(const ExponentTable& t) {
  const int m = t.variables();
  if (m < 1 || m > 20) throw std::invalid_argument("exponent table needs 1..20 variables");
  ConvergenceReport rep{true, std::numeric_limits<double>::infinity(), ""};
  auto consider = [&](double slack, const std::string& what) {
    if (slack < rep.margin) {
      rep.margin = slack;
      rep.worst = what;
    }
  };
  auto names = [&](std::uint32_t mask) {
    std::string s;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s += (s.empty() ? "x" : ",x") + std::to_string(i + 2);
    return s;
  };
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    double inner = 0, at0 = 0, at1 = 0, outer = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask & (1u << i))) continue;
      at0 += t.to0[static_cast<std::size_t>(i)];
      at1 += t.to1[static_cast<std::size_t>(i)];
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        if (mask & (1u << j)) {
          if (j > i) inner += t.pair(i, j);
        } else {
          outer += t.pair(i, j);
        }
      }
    }
    // Collapse onto 0, onto 1, or onto a free point.
    consider(size + inner + at0, "{" + names(mask) + "} -> 0");
    consider(size + inner + at1, "{" + names(mask) + "} -> 1");
    if (size >= 2) consider(size - 1 + inner, "{" + names(mask) + "} collide");
    // Escape to infinity together.
    consider(-(size + inner + at0 + at1 + outer), "{" + names(mask) + "} -> inf");
  }
  rep.convergent = rep.margin > 0;
  return rep;
}

namespace {

constexpr std::int64_t kChunk = 4096;

struct Moments {
  std::int64_t n = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0) return;
    const auto total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / static_cast<double>(total);
    m2 += o.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(o.n) / static_cast<double>(total);
    n = total;
  }
};

// Law of k on [lo, hi] proportional to p^{-c |k - pivot|}, sampled by table
// lookup. One-sided laws use pivot = lo.
class ValuationLaw {
 public:
  ValuationLaw(double log_p, double c, long lo, long hi, long pivot) : lo_(lo), hi_(hi) {
    double total = 0;
    for (long k = lo; k <= hi; ++k) {
      total += std::exp(-c * log_p * static_cast<double>(std::abs(k - pivot)));
      cdf_.push_back(total);
    }
    for (auto& v : cdf_) v /= total;
    log_total_ = std::log(total);
    c_log_p_ = c * log_p;
    pivot_ = pivot;
  }

  bool contains(long k) const { return k >= lo_ && k <= hi_; }
  long sample(SplitRng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return lo_ + std::min<long>(static_cast<long>(it - cdf_.begin()), hi_ - lo_);
  }
  double log_prob(long k) const { return -c_log_p_ * static_cast<double>(std::abs(k - pivot_)) - log_total_; }

 private:
  long lo_, hi_, pivot_ = 0;
  std::vector<double> cdf_;
  double log_total_ = 0, c_log_p_ = 0;
};

double log_sum_exp(const std::vector<double>& v) {
  const double mx = *std::max_element(v.begin(), v.end());
  double s = 0;
  for (double x : v) s += std::exp(x - mx);
  return mx + std::log(s);
}

}  // namespace

McResult amplitude_n_mc(long p, const ExponentTable& t, const McOptions& opts) {
  require_prime(p);
  if (opts.samples < 2) throw std::invalid_argument("need at least two samples");
  if (opts.digits < 1) throw std::invalid_argument("digit depth must be >= 1");
  const int m = t.variables();
  if (opts.units_only && m != 1) throw std::invalid_argument("units-only integration needs n = 4");

  McResult res;
  res.samples = opts.samples;
  res.convergence = check_convergence(t);
  const double log_p = std::log(static_cast<double>(p));
  double c = std::min(res.convergence.margin, 1.0);
  if (!res.convergence.convergent) {
    res.warning = "non-convergent exponents (" + res.convergence.worst + "); the estimate covers the window only";
    c = 0.25;
  }
  if (opts.window) {
    res.v_min = opts.window->first;
    res.v_max = opts.window->second;
    if (res.v_min > res.v_max) throw std::invalid_argument("empty valuation window");
  } else {
    // Truncation error of order p^{-margin W} < 1e-9.
    const long W = std::min<long>(400, static_cast<long>(std::ceil(9.0 * std::log(10.0) / (c * log_p))));
    res.v_min = -W;
    res.v_max = W;
  }
  const long v_min = res.v_min, v_max = res.v_max;
  const DigitSpace space(p, std::min(v_min, 0L), std::max(v_max, 0L) - std::min(v_min, 0L) + opts.digits + 2);
  const DigitExpansion zero = space.zero(), one = space.one();
  const double log_shell = std::log(1.0 - 1.0 / static_cast<double>(p));

  const ValuationLaw law0(log_p, c, v_min, v_max, 0);
  const bool use_one = v_min <= 0 && v_max >= 1;
  const std::optional<ValuationLaw> law1 = use_one ? std::optional<ValuationLaw>(ValuationLaw(log_p, c, 1, v_max, 1))
                                                   : std::nullopt;
  // Neighbour laws depend only on the neighbour's valuation.
  std::map<long, ValuationLaw> neighbour_laws;
  for (long kappa = v_min; kappa < v_max; ++kappa)
    neighbour_laws.emplace(kappa, ValuationLaw(log_p, c, kappa + 1, v_max, kappa + 1));

  struct Component {
    const DigitExpansion* center;
    const ValuationLaw* law;
  };

  const std::int64_t chunks = (opts.samples + kChunk - 1) / kChunk;
  const auto partial = parallel_map_chunks<Moments>(static_cast<std::size_t>(chunks), opts.threads, [&](std::size_t ci) {
    SplitRng rng(opts.seed, ci);
    Moments mom;
    const std::int64_t begin = static_cast<std::int64_t>(ci) * kChunk;
    const std::int64_t end = std::min(opts.samples, begin + kChunk);
    std::vector<DigitExpansion> xs(static_cast<std::size_t>(m));
    std::vector<long> kappa(static_cast<std::size_t>(m));
    std::vector<Component> comps;
    std::vector<double> terms;
    for (std::int64_t s = begin; s < end; ++s) {
      double log_q = 0;
      for (int j = 0; j < m; ++j) {
        comps.clear();
        comps.push_back({&zero, &law0});
        if (law1) comps.push_back({&one, &*law1});
        for (int i = 0; i < j; ++i) {
          auto it = neighbour_laws.find(kappa[static_cast<std::size_t>(i)]);
          if (it != neighbour_laws.end()) comps.push_back({&xs[static_cast<std::size_t>(i)], &it->second});
        }
        const auto& pick = comps[rng.below(comps.size())];
        const long k = pick.law->sample(rng);
        xs[static_cast<std::size_t>(j)] = space.near(*pick.center, k, opts.digits, rng);
        kappa[static_cast<std::size_t>(j)] = space.val_diff(xs[static_cast<std::size_t>(j)], zero);
        terms.clear();
        for (const auto& comp : comps) {
          const long kc = space.val_diff(xs[static_cast<std::size_t>(j)], *comp.center);
          if (!comp.law->contains(kc)) continue;
          // Haar density of the shell {val = kc} is p^{kc} / (1 - 1/p).
          terms.push_back(comp.law->log_prob(kc) + static_cast<double>(kc) * log_p - log_shell);
        }
        log_q += log_sum_exp(terms) - std::log(static_cast<double>(comps.size()));
      }
      double log_f = 0;
      bool inside = true;
      for (int i = 0; i < m; ++i) {
        const auto& x = xs[static_cast<std::size_t>(i)];
        const long v0 = kappa[static_cast<std::size_t>(i)];
        const long v1 = space.val_diff(x, one);
        if (opts.units_only && (v0 != 0 || v1 != 0)) inside = false;
        log_f -= log_p * (t.to0[static_cast<std::size_t>(i)] * static_cast<double>(v0) +
                          t.to1[static_cast<std::size_t>(i)] * static_cast<double>(v1));
        for (int j = i + 1; j < m; ++j)
          log_f -= log_p * t.pair(i, j) * static_cast<double>(space.val_diff(x, xs[static_cast<std::size_t>(j)]));
      }
      mom.add(inside ? std::exp(log_f - log_q) : 0.0);
    }
    return mom;
  });

  Moments total;
  for (const auto& mo : partial) total.merge(mo);
  res.estimate = total.mean;
  res.std_error = std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n));
  return res;
}

McResult amplitude_n_mc(long p, const Kinematics& kin, const McOptions& opts) {
  return amplitude_n_mc(p, exponents_of(kin), opts);
}

double CellHistogram::frequency(const CombType& t) const {
  auto it = counts.find(t);
  return it == counts.end() || samples == 0 ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
}

CellHistogram cell_histogram(long p, int n, std::int64_t samples, std::uint64_t seed, unsigned threads) {
  require_prime(p);
  if (n != 4 && n != 5) throw std::invalid_argument("cell histograms support n = 4 or 5");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const FieldParams params(p);
  const long depth = 32;
  const std::int64_t chunks = (samples + kChunk - 1) / kChunk;
  using Counts = std::map<CombType, std::int64_t>;
  const auto partial = parallel_map_chunks<Counts>(static_cast<std::size_t>(chunks), threads, [&](std::size_t ci) {
    SplitRng rng(seed, ci);
    Counts counts;
    const std::int64_t begin = static_cast<std::int64_t>(ci) * kChunk;
    const std::int64_t end = std::min(samples, begin + kChunk);
    for (std::int64_t s = begin; s < end; ++s) {
      std::vector<ProjPoint1> pts{ProjPoint1::finite(0), ProjPoint1::finite(1), ProjPoint1::infinity()};
      while (static_cast<int>(pts.size()) < n) {
        const Rational x = haar_sample(p, 0, depth, depth, rng);
        const ProjPoint1 q = ProjPoint1::finite(x);
        // Z_p sample: valuation >= depth stands for 0 and is redrawn, as are
        // collisions at the stored precision.
        if (std::find(pts.begin(), pts.end(), q) != pts.end()) continue;
        pts.push_back(q);
      }
      ++counts[comb_type_of(build_dendrogram(pts, params))];
    }
    return counts;
  });
  CellHistogram h;
  h.n = n;
  h.samples = samples;
  for (const auto& c : partial)
    for (const auto& [type, k] : c) h.counts[type] += k;
  return h;
}

std::string four_point_cell_name(const CombType& t) {
  if (t.n() != 4) throw std::invalid_argument("four-point cell names need n = 4");
  if (t.splits().empty()) return "D";
  switch (t.splits().front()) {
    case 0b1100: return "A";  // {0,1} | {inf,x}
    case 0b0110: return "B";  // {0,x} | {1,inf}
    case 0b1010: return "C";  // {1,x} | {0,inf}
  }
  return "?";
}

}  // namespace padtrop
