#pragma once

// Simple subdivisions of dΔ: the combinatorial types of simple plane tropical
// curves, i.e. tilings by lattice triangles and parallelograms using every
// boundary lattice point.

#include "padtrop/btree.hpp"
#include "padtrop/lattice.hpp"

#include <vector>

namespace padtrop {

// Dual graph of the curve with each parallelogram resolved into two crossing
// edges: triangles give one vertex, parallelograms two, interior edges give
// edges and boundary edges give ends.
Semigraph resolved_semigraph(const DualSubdivision& s);

// All simple subdivisions whose resolved dual graph is connected with first
// Betti number g. Every tiling is produced once, in a deterministic order.
std::vector<DualSubdivision> enumerate_simple_subdivisions(long d, long g);

}  // namespace padtrop
