#pragma once

#include <string>
#include <vector>

#include "mgk/graph.hpp"

namespace mgk {

struct VerificationPolicy {
    // Max allowed | edge length - 1 |. 1e-3 suits raw figure coordinates;
    // tighten to 1e-9 after refinement.
    double length_tolerance = 1e-3;
    // Min allowed clearance between non-adjacent features, in edge lengths.
    double separation_delta = 1e-6;
    bool require_connected = true;
};

struct LengthCheck {
    double max_deviation = 0.0;
    int worst_edge = -1; // index into g.edges, -1 when edgeless
};

// Identifies the feature pair realizing the minimum separation.
struct SeparationWitness {
    enum class Kind { None, EdgeEdge, VertexEdge, VertexVertex, ZeroAngle };
    Kind kind = Kind::None;
    // EdgeEdge/ZeroAngle: two edge indices. VertexEdge: vertex, edge.
    // VertexVertex: two vertex indices.
    int a = -1;
    int b = -1;
};

struct SeparationCheck {
    double min_separation = 0.0;
    SeparationWitness worst;
};

struct VerificationReport {
    double max_length_deviation = 0.0;
    double min_nonadjacent_separation = 0.0;
    RegularityClass regularity;
    bool connected = false;
    bool pass = false;
    std::vector<std::string> failures; // empty iff pass
};

// Max over edges of | ||p_i - p_j|| - 1 |. Graph must be normalized.
LengthCheck check_unit_lengths(const Graph& g);

// Minimum clearance over: pairs of edges sharing no endpoint (closed-segment
// distance), vertices against non-incident edges, and all vertex pairs.
// Edges sharing an endpoint must additionally subtend a positive angle
// (collinear-overlapping edges count as separation zero).
SeparationCheck check_separation(const Graph& g);

// Aggregates length, separation, regularity, and connectivity checks.
// Pass requires every check within policy and a regularity class of
// FourRegular or TwoFourRegular.
VerificationReport verify_matchstick(const Graph& g,
                                     const VerificationPolicy& policy = {});

// Distance between the two degree-2 vertices, in edge-length units.
// Throws WrongClass unless the graph has exactly two degree-2 vertices.
double degree2_distance(const Graph& g);

} // namespace mgk
