#include "doctest.h"

#include <string>

#include "mgk/errors.hpp"
#include "mgk/render.hpp"
#include "support.hpp"

using namespace mgk;
using namespace mgk::test;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int count = 0;
    size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("render_svg draws one line per edge") {
    std::string svg = render_svg(unit_triangle());
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
    CHECK(count_occurrences(svg, "<line ") == 3);
    CHECK(svg.find("stroke-linecap=\"round\"") != std::string::npos);
    CHECK(svg.find("<circle") == std::string::npos);
}

TEST_CASE("render_svg sizes the canvas from the bounds") {
    // Unit square, margin 0.5, 40 px per unit: 2 units across -> 80 px.
    std::string svg = render_svg(unit_rhombus());
    CHECK(svg.find("width=\"80\"") != std::string::npos);
    CHECK(svg.find("height=\"80\"") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 80 80\"") != std::string::npos);
    // Default stroke: 0.03 units * 40 px = 1.2 px.
    CHECK(svg.find("stroke-width=\"1.2\"") != std::string::npos);
}

TEST_CASE("render_svg flips the y axis") {
    // Vertex 2 of the square sits at y=1 (the top); it must be drawn with a
    // smaller pixel y than vertex 1 at y=0.
    Graph g = build_graph({{0.0, 0.0}, {1.0, 0.0}},
                          std::vector<Edge>{{0, 1}});
    g.vertices[1] = {0.0, 1.0}; // vertical unit edge after validation
    std::string svg = render_svg(g);
    // y=1 maps to margin*ppu = 20; y=0 maps to (1+margin)*ppu = 60.
    CHECK(svg.find("y1=\"60\"") != std::string::npos);
    CHECK(svg.find("y2=\"20\"") != std::string::npos);
}

TEST_CASE("render_svg honors the pixel and margin options") {
    RenderOptions opts;
    opts.pixels_per_unit = 100.0;
    opts.margin = 1.0;
    std::string svg = render_svg(unit_triangle(), opts);
    // 1 unit wide + 2 units of margin at 100 px.
    CHECK(svg.find("width=\"300\"") != std::string::npos);
}

TEST_CASE("render_svg marks degrees on request") {
    RenderOptions opts;
    opts.label_degrees = true;
    std::string svg = render_svg(double_triangle(), opts);
    CHECK(count_occurrences(svg, "<circle ") == 4);
    // The two outer tips have degree 2 and get the distinct fill.
    CHECK(count_occurrences(svg, "#d62728") == 2);
    CHECK(count_occurrences(svg, "#1f77b4") == 2);
}

TEST_CASE("render_svg rejects an edgeless graph") {
    Graph g;
    g.vertices = {{0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(render_svg(g), NoEdges);
}

TEST_CASE("render_svg output is deterministic") {
    CHECK(render_svg(corpus_entry("fig11/0").graph) ==
          render_svg(corpus_entry("fig11/0").graph));
    CHECK(count_occurrences(render_svg(corpus_entry("fig11/0").graph),
                            "<line ") == 60);
}
