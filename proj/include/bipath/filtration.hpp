#pragma once

#include <map>
#include <string>
#include <vector>

#include "bipath/block_matrix.hpp"

namespace bipath {

struct Simplex {
    std::string id;
    std::vector<int> verts;  // sorted, distinct
    int u = 0, l = 0;        // entry grades: 0 = shared initial space,
                             // n+1 / m+1 = present only at the maximum
    int dim() const { return static_cast<int>(verts.size()) - 1; }
};

struct BipathFiltration {
    BipathShape shape;
    std::vector<Simplex> simplices;
    int max_dim() const;
};

/// Parses the line-based text format
///   bipath <n> <m>
///   simplex <id> v=<v1,v2,...> u=<0..n+1> l=<0..m+1>
/// ('#' starts a comment) and validates closure, grade ranges, the
/// "grade 0 on both axes or neither" rule, and duplicates.  Errors carry
/// line numbers.
BipathFiltration parse_filtration(const std::string& text);

std::string format_filtration(const BipathFiltration& f);

/// One bar of a path reduction plus a representative cycle, written in a
/// path-independent coordinate order over the q-simplices.
struct PathBarRep {
    PathInterval bar;
    std::vector<std::uint32_t> cycle;
};

struct PathReduction {
    Path path = Path::Upper;
    int q = 0;
    int K = 1;  // maximum path position
    FieldSpec field{2};
    std::vector<PathBarRep> bars;  // canonical bar order
    FMatrix boundary_at_min;       // basis of the degree-q boundary space of the initial complex
    FMatrix boundary_at_max;       // ... of the final complex
};

/// Standard persistence column reduction along one path of the filtration.
PathReduction reduce_path(const BipathFiltration& f, Path path, int q, FieldSpec field);

/// Change-of-basis matrices between the two reductions, at the minimum
/// (lambda) and the maximum (gamma), by expressing each upper
/// representative cycle in the lower cycle basis modulo boundaries.
std::pair<FMatrix, FMatrix> lambda_gamma(const PathReduction& up, const PathReduction& low);

std::map<BipathInterval, int> bipath_pd(const BipathFiltration& f, int q, FieldSpec field);

/// Per-degree diagrams for q = 0 .. max simplex dimension.
std::vector<std::map<BipathInterval, int>> bipath_pd_all(const BipathFiltration& f, FieldSpec field);

}  // namespace bipath
