#include "padtrop/clmeasure.hpp"

#include "padtrop/parallel.hpp"
#include "padtrop/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace padtrop {

ChainModel::ChainModel(long n) : N(n) {
  if (n < 1) throw std::invalid_argument("a reduction chain needs N >= 1");
}

std::vector<Rational> ChainModel::positions() const {
  std::vector<Rational> out;
  for (long k = 0; k <= N; ++k) out.emplace_back(k, N);
  return out;
}

Rational DiscreteMeasure::total_mass() const {
  Rational s(0);
  for (const auto& a : atoms) s += a.mass;
  return s;
}

DiscreteMeasure cl_chain_measure(const ChainModel& chain) {
  DiscreteMeasure m;
  const auto pos = chain.positions();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const bool end = k == 0 || k + 1 == pos.size();
    m.atoms.push_back({pos[k], end ? Rational(1, 2 * chain.N) : Rational(1, chain.N)});
  }
  return m;
}

DiscreteMeasure cl_chain_measure(long N) { return cl_chain_measure(ChainModel(N)); }

Rational cdf_distance_to_lebesgue(const DiscreteMeasure& m) {
  std::vector<Atom> atoms = m.atoms;
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.position < y.position; });
  // F is constant on [a_k, a_{k+1}); |F - t| peaks at an end of each piece.
  Rational best(0);
  Rational F(0);
  Rational left(0);
  for (std::size_t i = 0; i < atoms.size();) {
    const Rational& t = atoms[i].position;
    if (t < 0 || t > 1) throw std::invalid_argument("atom outside [0, 1]");
    best = std::max({best, Rational(abs(F - left)), Rational(abs(F - t))});
    for (; i < atoms.size() && atoms[i].position == t; ++i) F += atoms[i].mass;
    left = t;
  }
  return std::max({best, Rational(abs(F - left)), Rational(abs(F - 1))});
}

Rational weak_convergence_error(long N) { return cdf_distance_to_lebesgue(cl_chain_measure(N)); }

Rational CellMeasure::total_mass() const {
  Rational s(0);
  for (const auto& c : cells) s += c.weight;
  return s;
}

CellMeasure moduli_cell_measure(int n, double lambda) {
  if (n < 3 || n > 8) throw std::invalid_argument("moduli_cell_measure supports 3 <= n <= 8");
  if (!(lambda > 0)) throw std::invalid_argument("cutoff lambda must be positive");
  CellMeasure m;
  m.n = n;
  m.lambda = lambda;
  const Rational w(1, static_cast<long>(binary_count(n)));
  for (auto& t : enumerate_comb_types(n)) {
    const bool binary = t.is_binary();
    m.cells.push_back({std::move(t), binary ? w : Rational(0)});
  }
  return m;
}

double integrate_cells(const CellMeasure& m, const CellFunction& f, int grid, unsigned threads) {
  if (grid < 1) throw std::invalid_argument("quadrature grid needs at least one point per axis");
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m.cells.size(); ++i)
    if (m.cells[i].weight != 0) live.push_back(i);
  const auto parts = parallel_map_chunks<double>(live.size(), threads, [&](std::size_t c) {
    const auto& cell = m.cells[live[c]];
    const int dim = cell.type.dimension();
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    std::vector<double> x(static_cast<std::size_t>(dim));
    const double h = m.lambda / grid;
    double sum = 0;
    long count = 0;
    for (;;) {
      for (int a = 0; a < dim; ++a) x[static_cast<std::size_t>(a)] = (idx[static_cast<std::size_t>(a)] + 0.5) * h;
      sum += f(cell.type, x);
      ++count;
      int a = 0;
      while (a < dim && ++idx[static_cast<std::size_t>(a)] == grid) idx[static_cast<std::size_t>(a++)] = 0;
      if (a == dim) break;
    }
    return to_double(cell.weight) * (sum / static_cast<double>(count));
  });
  double total = 0;
  for (double v : parts) total += v;
  return total;
}

bool correlator_dimension_predicate(int g, const std::vector<int>& k) {
  const int n = static_cast<int>(k.size());
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  if (n < 1) throw std::invalid_argument("at least one marked point is required");
  long sum = 0;
  for (int ki : k) {
    if (ki < 0) throw std::invalid_argument("descendant indices must be >= 0");
    sum += ki;
  }
  const long dim = 3L * g - 3 + n;
  if (dim < 0) throw std::domain_error(fmt::format("M_{{{},{}}} is empty: 3g - 3 + n = {}", g, n, dim));
  return sum == dim;
}

std::string to_svg(const DiscreteMeasure& m) {
  const double width = 480, height = 320;
  double top = 0;
  for (const auto& a : m.atoms) top = std::max(top, to_double(a.mass));
  if (top <= 0) top = 1;
  Viewport vp(0, 1, 0, top, width, height);
  SvgDocument doc(width, height);
  doc.line(vp.x(0), vp.y(0), vp.x(1), vp.y(0));
  const double bar = std::min(24.0, 0.6 * (vp.x(1) - vp.x(0)) / std::max<std::size_t>(m.atoms.size(), 1));
  for (const auto& a : m.atoms) {
    const double x = vp.x(to_double(a.position));
    const double y = vp.y(to_double(a.mass));
    doc.rect(x - bar / 2, y, bar, vp.y(0) - y, "steelblue");
    doc.text(x, y - 4, to_string(a.mass), 11);
    doc.text(x, vp.y(0) + 14, to_string(a.position), 11);
  }
  return doc.str();
}

}  // namespace padtrop
