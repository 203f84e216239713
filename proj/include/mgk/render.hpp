#pragma once

#include <string>

#include "mgk/graph.hpp"

namespace mgk {

struct RenderOptions {
    // Pixels per coordinate unit.
    double pixels_per_unit = 40.0;
    // Blank border around the drawing, in units.
    double margin = 0.5;
    // Stroke width in units.
    double stroke_width = 0.03;
    // Mark vertices, coloring degree-2 vertices distinctly.
    bool label_degrees = false;
};

// Renders the graph as an SVG 1.1 document: one line element per edge,
// round caps, y-axis flipped so larger y is drawn higher. Throws NoEdges
// for an edgeless graph.
std::string render_svg(const Graph& g, const RenderOptions& opts = {});

} // namespace mgk
