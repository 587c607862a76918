#pragma once

#include <string>

#include "bipath/filtration.hpp"
#include "bipath/module.hpp"

namespace bipath {

/// Module JSON: {"shape":[n,m],"p":2,"dims":{"0":..,"u1":..,"l1":..,"1":..},
/// "maps":{"0->u1":[[...]],...}} with row-major matrices.  A map entry may
/// be omitted only when one of its endpoints has dimension 0.
std::string module_to_json(const BipathModule& v);
BipathModule module_from_json(const std::string& text);

/// One-critical two-parameter filtration restricted along an order
/// embedding of the bipath poset into the grid.
///
/// Grid JSON: {"simplices":[{"id":"ab","v":[0,1],"grade":[x,y]},...]}
/// Embedding JSON: {"shape":[n,m],"zero":[x,y],"one":[x,y],
///                  "upper":[[x,y],...n points],"lower":[[x,y],...m points]}
/// A simplex enters at the first embedded path point whose grid grade
/// dominates its own; simplices dominated by no path point enter only at
/// the maximum.
BipathFiltration restrict_grid(const std::string& grid_json, const std::string& embedding_json);

}  // namespace bipath
