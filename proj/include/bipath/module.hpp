#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bipath/matrix.hpp"
#include "bipath/poset.hpp"

namespace bipath {

/// A persistence module over the bipath poset: one vector-space dimension
/// per vertex and one matrix per covering arrow.  up_maps[k] is the arrow
/// from upper position k to k+1 (position 0 = minimum, n+1 = maximum);
/// low_maps likewise for the lower path.
struct BipathModule {
    BipathShape shape;
    FieldSpec field{2};
    int dim0 = 0, dim1 = 0;
    std::vector<int> dim_up, dim_low;        // sizes n and m
    std::vector<FMatrix> up_maps, low_maps;  // sizes n+1 and m+1

    int dim_at(Path p, int pos) const;
    int dim_vertex(int vid) const;
    const FMatrix& map_at(Path p, int pos) const;  // arrow pos -> pos+1
    FMatrix& map_at(Path p, int pos);

    /// Composite of the arrows from path position `from` to `to`.
    FMatrix composite(Path p, int from, int to) const;
    /// Composite from the minimum to the maximum (along the upper path).
    FMatrix full_composite() const { return composite(Path::Upper, 0, shape.n + 1); }

    static BipathModule zeros(const BipathShape& shape, FieldSpec field);
};

/// One path of a bipath module: dims[0..K] and maps[0..K-1].
struct PathModule {
    FieldSpec field{2};
    std::vector<int> dims;
    std::vector<FMatrix> maps;

    int K() const { return static_cast<int>(dims.size()) - 1; }
    FMatrix composite(int from, int to) const;
};

struct Violation {
    bool ok = true;
    std::string message;
};

/// Checks matrix shapes and the one commutativity relation (upper
/// composite = lower composite).
Violation validate(const BipathModule& v);

BipathModule interval_module(const BipathInterval& i, const BipathShape& shape, FieldSpec field);

BipathModule direct_sum(const BipathModule& v, const BipathModule& w);

PathModule restrict_path(const BipathModule& v, Path p);

FMatrix random_invertible(std::size_t n, FieldSpec field, std::uint64_t& state);

/// Direct sum of the given interval modules conjugated by an independent
/// random change of basis at every vertex.  Ground truth for decomposition
/// tests: the result is isomorphic to the plain sum by construction.
std::pair<BipathModule, std::map<BipathInterval, int>> scrambled_sum(
    const std::vector<BipathInterval>& intervals, const BipathShape& shape, FieldSpec field,
    std::uint64_t seed);

}  // namespace bipath
