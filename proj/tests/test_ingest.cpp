#include "doctest.h"

#include <sstream>

#include "mgk/errors.hpp"
#include "mgk/ingest.hpp"
#include "support.hpp"

using namespace mgk;
using namespace mgk::test;

TEST_CASE("extract_segments reads a single draw command") {
    auto segs = extract_segments("\\draw (0,0) -- (1,0);");
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].a.x == 0.0);
    CHECK(segs[0].a.y == 0.0);
    CHECK(segs[0].b.x == 1.0);
    CHECK(segs[0].b.y == 0.0);
}

TEST_CASE("extract_segments expands chains") {
    auto segs = extract_segments("\\draw (0,0) -- (1.5,2.25) -- (3,0);");
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].b.x == 1.5);
    CHECK(segs[0].b.y == 2.25);
    CHECK(segs[1].a.x == 1.5);
    CHECK(segs[1].b.x == 3.0);
}

TEST_CASE("extract_segments is whitespace-insensitive") {
    auto a = extract_segments("( 0 , 0 )--( 1 , 0 )");
    auto b = extract_segments("(0,0) -- (1,0)");
    auto c = extract_segments("(0,0)\n  --\n  (1,0)");
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    REQUIRE(c.size() == 1);
    CHECK(a[0].b.x == b[0].b.x);
    CHECK(c[0].b.x == b[0].b.x);
}

TEST_CASE("extract_segments ignores unrelated text") {
    auto segs = extract_segments(
        "\\begin{tikzpicture}[scale=0.1]\n"
        "% a comment with -- dashes\n"
        "\\draw[thick] (2.5,-3.75) -- (44.27,-3.75);\n"
        "\\fill (2.5,-3.75) circle (1.5pt);\n"
        "\\end{tikzpicture}\n");
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].a.x == 2.5);
    CHECK(segs[0].a.y == -3.75);
    CHECK(segs[0].b.x == 44.27);
}

TEST_CASE("extract_segments parses signed and scientific numbers") {
    auto segs = extract_segments("(-1.5e1,+2.25) -- (0.5e-1,-3)");
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].a.x == -15.0);
    CHECK(segs[0].a.y == 2.25);
    CHECK(segs[0].b.x == 0.05);
    CHECK(segs[0].b.y == -3.0);
}

TEST_CASE("extract_segments throws on a malformed continuation") {
    CHECK_THROWS_AS(extract_segments("(0,0) -- (oops)"), MalformedCoordinate);
    CHECK_THROWS_AS(extract_segments("(0,0) -- (1,)"), MalformedCoordinate);
    CHECK_THROWS_AS(extract_segments("(0,0) --"), MalformedCoordinate);
}

TEST_CASE("extract_segments stream overload matches the string overload") {
    std::istringstream in("(0,0) -- (1,0) -- (2,0)");
    auto from_stream = extract_segments(in);
    auto from_string = extract_segments("(0,0) -- (1,0) -- (2,0)");
    REQUIRE(from_stream.size() == from_string.size());
    CHECK(from_stream[1].b.x == from_string[1].b.x);
}

TEST_CASE("unify_endpoints merges repeated coordinates") {
    // The same junction written to 4 decimals in two draw commands.
    auto segs = extract_segments(
        "(0,0) -- (0.5,0.866)\n"
        "(1,0) -- (0.5001,0.8660)\n");
    Graph g = unify_endpoints(segs);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("unify_endpoints numbers vertices by first appearance") {
    auto segs = extract_segments("(5,5) -- (0,0)\n(1,0) -- (5,5.0001)\n");
    Graph g = unify_endpoints(segs);
    REQUIRE(g.vertex_count() == 3);
    // Group centroid of the two (5,5)-ish mentions.
    CHECK(g.vertices[0].x == doctest::Approx(5.0));
    CHECK(g.vertices[0].y == doctest::Approx(5.00005));
    CHECK(g.vertices[1].x == doctest::Approx(0.0));
    CHECK(g.vertices[2].x == doctest::Approx(1.0));
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges[0] == Edge{0, 1});
    CHECK(g.edges[1] == Edge{0, 2});
}

TEST_CASE("unify_endpoints drops duplicate segments") {
    auto segs = extract_segments("(0,0) -- (1,0)\n(1,0) -- (0,0)\n");
    Graph g = unify_endpoints(segs);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("unify_endpoints rejects smeared endpoint chains") {
    // Five mentions, each within tolerance of the next, spanning 3.6x the
    // tolerance in total: transitively one group, but too spread to trust.
    std::vector<Segment> segs;
    for (int i = 0; i < 5; ++i) {
        segs.push_back({{0.009 * i, 0.0}, {5.0, 5.0 + 0.1 * i}});
    }
    CHECK_THROWS_AS(unify_endpoints(segs), MergeAmbiguity);
}

TEST_CASE("estimate_scale takes the median edge length") {
    // Lengths 1, 1, and sqrt(2): median 1.
    Graph g = build_graph({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}},
                          std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(estimate_scale(g) == doctest::Approx(1.0));

    // Even count: mean of the middle two.
    Graph h = build_graph({{0.0, 0.0}, {2.0, 0.0}, {2.0, 4.0}, {-6.0, 0.0}},
                          std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {2, 3}});
    // Lengths sorted: 2, 4, 6, sqrt(80); median (4+6)/2 = 5.
    CHECK(estimate_scale(h) == doctest::Approx(5.0));
}

TEST_CASE("estimate_scale honors an explicit expected unit") {
    Graph g = unit_triangle();
    IngestOptions opts;
    opts.expected_unit = 43.77;
    CHECK(estimate_scale(g, opts) == 43.77);
    opts.expected_unit = -1.0;
    CHECK_THROWS_AS(estimate_scale(g, opts), NonPositiveScale);
}

TEST_CASE("estimate_scale of a normalized graph is one") {
    CHECK(estimate_scale(unit_triangle()) == doctest::Approx(1.0));
}

TEST_CASE("estimate_scale requires edges") {
    Graph g;
    g.vertices = {{0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(estimate_scale(g), NoEdges);
}

TEST_CASE("normalize divides coordinates and resets the scale") {
    Graph g = build_graph({{0.0, 0.0}, {43.77, 0.0}},
                          std::vector<Edge>{{0, 1}});
    Graph n = normalize(g, 43.77);
    CHECK(n.vertices[1].x == doctest::Approx(1.0));
    CHECK(n.scale == 1.0);
    CHECK_THROWS_AS(normalize(g, 0.0), NonPositiveScale);
    CHECK_THROWS_AS(normalize(g, -2.0), NonPositiveScale);
}

TEST_CASE("ingest pipeline is invariant under figure rescaling") {
    // The same drawing at three magnifications normalizes identically.
    const char* base =
        "(0,0) -- (40,0) -- (20,34.641) -- (0,0)\n"
        "(40,0) -- (60,34.641) -- (20,34.641)\n";
    Graph reference = normalize(unify_endpoints(extract_segments(base)),
                                estimate_scale(unify_endpoints(
                                    extract_segments(base))));
    for (double k : {0.5, 2.0, 10.0}) {
        std::ostringstream scaled;
        for (const Segment& s : extract_segments(base)) {
            scaled << "(" << s.a.x * k << "," << s.a.y * k << ") -- ("
                   << s.b.x * k << "," << s.b.y * k << ")\n";
        }
        Graph g = unify_endpoints(extract_segments(scaled.str()));
        Graph n = normalize(g, estimate_scale(g));
        REQUIRE(n.vertex_count() == reference.vertex_count());
        REQUIRE(n.edges == reference.edges);
        for (int v = 0; v < n.vertex_count(); ++v) {
            CHECK(n.vertices[v].x ==
                  doctest::Approx(reference.vertices[v].x).epsilon(1e-9));
            CHECK(n.vertices[v].y ==
                  doctest::Approx(reference.vertices[v].y).epsilon(1e-9));
        }
    }
}
