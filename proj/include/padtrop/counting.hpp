#pragma once

// Counting plane tropical curves of degree d and genus g: lattice paths, the
// Kontsevich recursion, direct enumeration through given points, and the
// certified count for points tropicalised through a line configuration.

#include "padtrop/tropical.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padtrop {

// A computation refused or abandoned because of a size or time bound, as
// opposed to bad input or a mathematical degeneracy.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (d-1)(d-2)/2
long max_genus(long d);
// 3d + g - 1
long incidence_count(long d, long g);

// Lattice points of dΔ from (0,d) to (d,0), strictly increasing in the
// lexicographic order of (x, -y).
struct LatticePath {
  long d = 0;
  long g = 0;
  std::vector<LatticePoint> points;
};

enum class PathSide { Positive, Negative };

// Throws std::invalid_argument naming the violated condition.
void validate_path(const LatticePath& path);
// All λ-increasing paths with 3d + g - 1 steps, in lexicographic order.
std::vector<LatticePath> enumerate_lattice_paths(long d, long g);
BigInt path_multiplicity(const LatticePath& path, PathSide side);
// Sum of mu+ * mu- over all paths with 3d + g - 1 steps. This counts every
// curve of Euler genus g, reducible ones included, so g may be as low as 1 - d.
BigInt count_lattice_paths_all(long d, long g, unsigned threads = 1);
// Irreducible curves N_{d,g}: the reducible contributions are split off from
// count_lattice_paths_all by the exponential formula.
BigInt count_lattice_paths(long d, long g, unsigned threads = 1);

BigInt kontsevich_N(long d);

enum class CertificateKind { General, Degenerate, Inconclusive };
std::string to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::Inconclusive;
  std::string reason;
  // Inconclusive because a search bound was hit.
  bool resource_exceeded = false;
};

struct CountedCurve {
  PlaneTropicalCurve curve;
  DualSubdivision subdivision;
  long multiplicity;
  // Index into the subdivision's edges() carrying each input point.
  std::vector<int> point_edges;
};

struct CountResult {
  long d = 0;
  long g = 0;
  BigInt N{0};
  std::vector<CountedCurve> curves;
  Certificate certificate;
};

struct CountLimits {
  // Search nodes allowed per combinatorial type.
  std::uint64_t max_nodes_per_type = 2'000'000;
  unsigned threads = 1;
};

// Curves of degree d and genus g through 3d + g - 1 distinct finite points,
// for d <= 3 and g <= 1. Larger d raises ResourceLimitError.
CountResult count_through(long d, long g, const std::vector<TropPoint2>& pts, const CountLimits& limits = {});

// Identity, coordinate permutations, diag(p^a, p^b, 1) for small a, b, and
// `random_count` seeded unimodular integer matrices.
std::vector<LineConfig> default_config_pool(const FieldParams& params, std::uint64_t seed, int random_count = 16);

struct MumfordResult {
  bool certified = false;
  BigInt N{0};
  std::string reason;
  int configs_tried = 0;
  bool resource_exceeded = false;
  // Set when certified.
  std::optional<LineConfig> config;
  std::vector<TropPoint2> tropical_points;
  std::optional<CountResult> count;
};

MumfordResult mumford_count(const std::vector<ProjPoint2>& points, long d, long g,
                            const std::vector<LineConfig>& configs, const FieldParams& params,
                            const CountLimits& limits = {});

}  // namespace padtrop
