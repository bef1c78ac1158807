#pragma once

#include <string>
#include <vector>

#include "nsgs/young_diagram.hpp"

namespace nsgs {

enum class RenderFormat { Ascii, Svg };

struct RenderOptions {
    RenderFormat format = RenderFormat::Ascii;
    bool show_hooks = false;
    /// Boxes drawn distinctly (angle brackets in text, filled in SVG).
    std::vector<BoxCoord> highlight;
    /// SVG box edge in pixels, within [8, 128].
    Int cell_size = 24;
};

/// Renders the diagram to a text document.  Ascii output has one line per
/// row with each box as `[  ]` (or `[%3d]` carrying the hook length);
/// highlighted boxes swap the brackets for angle brackets.  Svg output is a
/// standalone document with one rect per box.  Byte-for-byte deterministic.
/// Throws InvalidHighlight for coordinates outside the diagram and
/// MalformedInput for a cell size out of range.
std::string render(const YoungDiagram& diagram, const RenderOptions& options);

} // namespace nsgs
