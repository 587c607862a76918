#pragma once

#include <map>
#include <vector>

#include "bipath/module.hpp"

namespace bipath {

/// Interval decomposition of an equioriented path module with explicit
/// change of basis: bases[v] conjugates the module maps to the exact 0/1
/// staircase matrices of the canonically ordered direct sum of interval
/// summands.  vertex_basis[v] is its inverse (columns = the basis vectors
/// of the summands alive at v, in canonical order).
struct PathDecomposition {
    Path path = Path::Upper;
    std::vector<PathInterval> intervals;      // one entry per summand, canonical order
    std::vector<FMatrix> bases;               // per vertex 0..K
    std::vector<FMatrix> vertex_basis;        // per vertex 0..K, inverse of bases
    std::vector<std::vector<int>> alive;      // per vertex: summand indices alive there
};

/// Canonical summand order: intervals touching an endpoint first, sorted
/// by their position in projective_injective_order; then inner intervals
/// by (birth, death).  Copies of one interval stay adjacent; ties keep
/// discovery order.
PathDecomposition decompose_path(const PathModule& pm, Path path);

/// Independent barcode oracle: multiplicity of [b,d] by inclusion-
/// exclusion over ranks of composites.
std::map<PathInterval, int> barcode_by_ranks(const PathModule& pm, Path path);

/// Sort key shared by decompose_path and the reductions built on it.
long canonical_bar_key(const PathInterval& iv, int K);

}  // namespace bipath
