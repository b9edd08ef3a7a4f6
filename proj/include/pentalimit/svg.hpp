#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentalimit/geom.hpp"

namespace pentalimit {

// Nested polygon figure (outermost first). All coordinates are written with
// fixed 6-decimal formatting, so the output bytes are a pure function of the
// inputs. The y axis is flipped into SVG screen orientation.
std::string render_svg(const std::vector<Polygon<double>>& rings,
                       const std::optional<Point2<double>>& marker);

}  // namespace pentalimit
