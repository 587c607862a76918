#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bipath/poset.hpp"

namespace bipath {

struct BipathDiagram {
    BipathShape shape;
    std::optional<int> degree;                // unset for raw-module decompositions
    std::map<BipathInterval, int> points;     // interval -> multiplicity (>= 1)
};

struct LayoutPoint {
    BipathInterval interval;
    char region;  // 'B', 'L', 'R', 'U', 'D'
    int x = 0, y = 0;
    int mult = 1;
};

struct RegionRect {
    char region;
    int x0, x1, y0, y1;  // inclusive cell ranges
};

/// Planar grid placement: the four interval classes tile four quadrants
/// around the center, the full interval sits in the extreme upper-left
/// corner, and containment shrinks weakly right/down within a region.
struct PlanarLayout {
    int width = 0, height = 0;  // grid extents (cells 0..width-1 / 0..height-1)
    std::vector<LayoutPoint> points;
    std::vector<RegionRect> regions;
};

PlanarLayout layout(const BipathDiagram& d);

/// Cell of a single interval in the layout grid.
std::pair<int, int> layout_cell(const BipathInterval& i, const BipathShape& s);

std::string emit_json(const BipathDiagram& d);
std::string emit_csv(const BipathDiagram& d);
std::string emit_svg(const BipathDiagram& d);
std::string emit(const BipathDiagram& d, const std::string& format);

BipathDiagram parse_diagram_json(const std::string& text);

}  // namespace bipath
