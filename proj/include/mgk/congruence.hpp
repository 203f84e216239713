#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgk/geometry.hpp"
#include "mgk/graph.hpp"

namespace mgk {

// Isometry-invariant summary; equal fingerprints are necessary but not
// sufficient for congruence.
struct Fingerprint {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<int> degree_sequence; // sorted ascending
    // All pairwise vertex distances, rounded to 6 decimals (stored as
    // micro-units), sorted ascending.
    std::vector<std::int64_t> distance_multiset;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct CongruenceResult {
    bool congruent = false;
    // Maps vertices of the first graph onto the second.
    std::optional<std::vector<int>> vertex_mapping;
    std::optional<Isometry> isometry;
    double max_alignment_error = 0.0;
};

Fingerprint fingerprint(const Graph& g);

// Adjacency-preserving bijection from a's vertices to b's, found by
// backtracking with degree and neighbor-degree pruning, lowest candidate
// first (deterministic). Throws IsomorphismTimeout past 1e7 search nodes.
std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b);

// Walks the isomorphisms of a onto b and best-fits an isometry (centered
// orthogonal alignment, reflection branch tried explicitly) for each one;
// congruent iff some isomorphism aligns every vertex within tol.
CongruenceResult is_congruent(const Graph& a, const Graph& b,
                              double tol = 1e-6);

// Groups graphs into congruence classes. Fingerprint buckets keep the
// pairwise tests sparse; each class lists the member ids with the
// lexicographically smallest id as representative.
struct CongruenceClass {
    std::string representative;
    std::vector<std::string> members; // sorted, includes the representative
};

std::vector<CongruenceClass> dedup(
    const std::vector<std::pair<std::string, const Graph*>>& entries,
    double tol = 1e-6);

} // namespace mgk
