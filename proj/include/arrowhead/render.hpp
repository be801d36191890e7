#pragma once

#include <span>
#include <string>

#include "arrowhead/curves.hpp"
#include "arrowhead/lattice.hpp"

namespace arrowhead {

struct RenderSpec {
    double stroke_width = 2.0;
    double scale = 40.0;  // pixels per lattice unit
    double margin = 10.0;
    std::string tile_fill = "#808080";
    std::string curve_color = "#000000";
    long long tile_cap = kDefaultTileCap;
};

/// Single <path> document. Throws EmptyPolyline.
std::string render_curve(std::span<const CartesianPoint> polyline, const RenderSpec& spec = {});

/// One polygon per dark tile; with a non-empty overlay the curve path is
/// drawn above the tiles. Throws SizeGuard past spec.tile_cap.
std::string render_gasket(const GasketApproximation& gasket, const RenderSpec& spec = {},
                          std::span<const CartesianPoint> overlay = {});

}  // namespace arrowhead
