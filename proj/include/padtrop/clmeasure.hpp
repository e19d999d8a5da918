#pragma once

// Discrete measures on the unit segment from reduction chains of P^1, and the
// tropical-limit measure on the cells of M_{0,n}^trop.

#include "padtrop/btree.hpp"

#include <functional>
#include <string>
#include <vector>

namespace padtrop {

// Chain of N + 1 components with dual vertices at k/N, k = 0..N.
struct ChainModel {
  long N;

  explicit ChainModel(long n);
  std::vector<Rational> positions() const;
};

struct Atom {
  Rational position;
  Rational mass;
};

struct DiscreteMeasure {
  std::vector<Atom> atoms;  // sorted by position

  Rational total_mass() const;
};

// Trapezoid weights: 1/(2N) at the endpoints and 1/N inside.
DiscreteMeasure cl_chain_measure(long N);
DiscreteMeasure cl_chain_measure(const ChainModel& chain);

// sup_{t in [0,1]} |F(t) - t| for the distribution function F of a measure
// supported on [0,1], computed exactly piece by piece.
Rational cdf_distance_to_lebesgue(const DiscreteMeasure& m);
Rational weak_convergence_error(long N);

struct CellWeight {
  CombType type;
  Rational weight;
};

// Uniform density on [0, lambda]^dim on every cell, weighted per cell.
struct CellMeasure {
  int n = 0;
  double lambda = 1;
  std::vector<CellWeight> cells;  // every type of M_{0,n}^trop

  Rational total_mass() const;
};

// Weight 1/(2n-5)!! on each binary cell, 0 elsewhere. 3 <= n <= 8.
CellMeasure moduli_cell_measure(int n, double lambda);

using CellFunction = std::function<double(const CombType&, const std::vector<double>&)>;

// Sum over cells of weight times the midpoint-rule average of f on a grid
// with `grid` points per axis. Zero-weight cells are never evaluated, so they
// contribute exactly 0. f must be safe to call concurrently.
double integrate_cells(const CellMeasure& m, const CellFunction& f, int grid, unsigned threads = 1);

// Whether <tau_{k_1} ... tau_{k_n}>_g can be non-zero: sum k_i = 3g - 3 + n.
// Throws std::domain_error when 3g - 3 + n < 0.
bool correlator_dimension_predicate(int g, const std::vector<int>& k);

std::string to_svg(const DiscreteMeasure& m);

}  // namespace padtrop
