#pragma once

#include <istream>
#include <optional>
#include <string_view>
#include <vector>

#include "mgk/graph.hpp"

namespace mgk {

// One raw line segment in figure units, as drawn.
struct Segment {
    Point2 a;
    Point2 b;
};

struct IngestOptions {
    // Endpoints closer than this (raw units) collapse into one vertex. The
    // figure data repeats coordinates to 4 decimals, so repeated mentions
    // differ by at most 2e-4 while real vertex gaps are several units.
    double merge_tolerance = 0.01;
    // Overrides the median-edge-length scale estimate when set.
    std::optional<double> expected_unit;
};

// Scans arbitrary text for the pattern `(x,y) -- (x,y)`, with optional
// whitespace anywhere inside it. Chains `A -- B -- C` yield (A,B) and (B,C);
// everything else is ignored. Throws MalformedCoordinate if a parenthesized
// group adjacent to a `--` joiner does not parse as a coordinate pair.
std::vector<Segment> extract_segments(std::string_view text);
std::vector<Segment> extract_segments(std::istream& in);

// Collapses endpoint groups (transitive closure under merge_tolerance) into
// vertices at group centroids, one edge per segment, duplicates removed.
// Vertices are numbered by first appearance in the segment stream. Throws
// MergeAmbiguity if a group's diameter exceeds 3x the tolerance.
Graph unify_endpoints(const std::vector<Segment>& segments,
                      const IngestOptions& opts = {});

// Median edge length in raw units, or opts.expected_unit when set.
double estimate_scale(const Graph& g, const IngestOptions& opts = {});

// Divides all coordinates by `scale` and marks the result normalized.
Graph normalize(const Graph& g, double scale);

} // namespace mgk
