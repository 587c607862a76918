#pragma once

#include <map>

#include "bipath/module.hpp"

namespace bipath {

struct SplitResult {
    std::map<BipathInterval, int> extracted;
    BipathModule remainder;
};

/// Extracts rank(min -> max composite) copies of the full interval; the
/// remainder has zero composite.
SplitResult split_full(const BipathModule& v);

/// Requires zero composite.  Extracts the submodule generated by the
/// space at the minimum as intervals containing the minimum only; the
/// remainder is zero at the minimum.
SplitResult split_left(const BipathModule& w);

/// Dual of split_left through the maximum; requires a zero space at the
/// minimum.  The remainder is zero at both endpoints.
SplitResult split_right(const BipathModule& x);

/// Requires zero spaces at both endpoints: the two paths decouple and
/// each contributes its own barcode.
std::map<BipathInterval, int> split_rest(const BipathModule& z);

/// split_full -> split_left -> split_right -> split_rest.
std::map<BipathInterval, int> decompose_direct(const BipathModule& v);

}  // namespace bipath
