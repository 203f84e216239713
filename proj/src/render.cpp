#include "mgk/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mgk/errors.hpp"

namespace mgk {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg(const Graph& g, const RenderOptions& opts) {
    if (g.edges.empty()) {
        throw NoEdges("nothing to render: the graph has no edges");
    }
    double min_x = g.vertices[0].x, max_x = g.vertices[0].x;
    double min_y = g.vertices[0].y, max_y = g.vertices[0].y;
    for (const Point2& p : g.vertices) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double ppu = opts.pixels_per_unit;
    const double width = (max_x - min_x + 2.0 * opts.margin) * ppu;
    const double height = (max_y - min_y + 2.0 * opts.margin) * ppu;
    auto px = [&](const Point2& p) {
        return (p.x - min_x + opts.margin) * ppu;
    };
    auto py = [&](const Point2& p) {
        return (max_y - p.y + opts.margin) * ppu;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(width) << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 "
        << fmt(width) << " " << fmt(height) << "\">\n";
    svg << "  <g stroke=\"black\" stroke-width=\"" << fmt(opts.stroke_width * ppu)
        << "\" stroke-linecap=\"round\">\n";
    for (const auto& [i, j] : g.edges) {
        svg << "    <line x1=\"" << fmt(px(g.vertices[i])) << "\" y1=\""
            << fmt(py(g.vertices[i])) << "\" x2=\"" << fmt(px(g.vertices[j]))
            << "\" y2=\"" << fmt(py(g.vertices[j])) << "\"/>\n";
    }
    svg << "  </g>\n";
    if (opts.label_degrees) {
        auto degrees = degree_sequence(g);
        svg << "  <g stroke=\"none\">\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            const char* fill = degrees[v] == 2 ? "#d62728" : "#1f77b4";
            svg << "    <circle cx=\"" << fmt(px(g.vertices[v])) << "\" cy=\""
                << fmt(py(g.vertices[v])) << "\" r=\"" << fmt(0.06 * ppu)
                << "\" fill=\"" << fill << "\"/>\n";
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace mgk
