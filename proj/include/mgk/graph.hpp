#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mgk/geometry.hpp"

namespace mgk {

// Undirected edge as an index pair with first < second.
using Edge = std::pair<int, int>;

// A graph realized in the plane. Immutable by convention once built: all
// operations return new values. `scale` is raw-units-per-unit-edge; 1.0
// once normalized.
struct Graph {
    std::vector<Point2> vertices;
    std::vector<Edge> edges; // sorted, unique, each with i < j
    double scale = 1.0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

struct RegularityClass {
    enum class Tag { FourRegular, TwoFourRegular, Irregular };

    Tag tag = Tag::Irregular;
    int degree2_count = 0;              // meaningful for TwoFourRegular
    std::map<int, int> degree_histogram;

    bool is_four_regular() const { return tag == Tag::FourRegular; }
    bool is_two_four_regular() const { return tag == Tag::TwoFourRegular; }
};

// Minimum allowed distance between distinct vertices, in whatever units the
// coordinates are in. Matches the default endpoint-merge tolerance.
inline constexpr double kVertexMergeTolerance = 0.01;

// Validates indices, rejects self-loops, deduplicates unordered pairs, and
// rejects vertex positions closer than merge_tolerance.
Graph build_graph(std::vector<Point2> points, std::span<const Edge> edge_pairs,
                  double merge_tolerance = kVertexMergeTolerance);

std::vector<int> degree_sequence(const Graph& g);

RegularityClass classify_regularity(const Graph& g);

bool is_connected(const Graph& g);

// Splits into connected components, ordered by smallest original vertex
// index; vertex indices are re-compacted per component preserving order.
std::vector<Graph> connected_components(const Graph& g);

} // namespace mgk
