#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgk/catalog.hpp"
#include "mgk/geometry.hpp"
#include "mgk/graph.hpp"

namespace mgk::test {

inline std::string corpus_dir() {
    const char* dir = std::getenv("MGK_CORPUS");
    if (!dir) {
        throw std::runtime_error("MGK_CORPUS is not set");
    }
    return dir;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>{});
}

// Full corpus pipeline output, built once per process.
inline const CatalogSummary& corpus_summary() {
    static const CatalogSummary summary = build_catalog(corpus_dir());
    return summary;
}

// Ingested, refined, verified corpus entries, built once per process.
inline const std::vector<CatalogEntry>& corpus_entries() {
    return corpus_summary().entries;
}

inline const CatalogEntry& corpus_entry(const std::string& id) {
    for (const CatalogEntry& entry : corpus_entries()) {
        if (entry.id == id) return entry;
    }
    throw std::runtime_error("no corpus entry " + id);
}

inline Graph unit_triangle() {
    return build_graph({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}},
                       std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
}

// Unit 4-cycle: square realization, one internal degree of freedom.
inline Graph unit_rhombus() {
    return build_graph({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}},
                       std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Two unit triangles sharing an edge: 4 vertices, 5 edges, rigid.
inline Graph double_triangle() {
    const double h = std::sqrt(3.0) / 2.0;
    return build_graph({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}, {0.5, -h}},
                       std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

inline Graph apply_isometry(const Graph& g, const Isometry& iso) {
    Graph out = g;
    for (Point2& p : out.vertices) p = iso.apply(p);
    return out;
}

inline Isometry random_isometry(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
    std::uniform_real_distribution<double> shift(-5.0, 5.0);
    return Isometry{angle(rng), {shift(rng), shift(rng)},
                    (rng() & 1u) != 0u};
}

inline Graph jitter(const Graph& g, double magnitude, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-magnitude, magnitude);
    Graph out = g;
    for (Point2& p : out.vertices) {
        p.x += d(rng);
        p.y += d(rng);
    }
    return out;
}

} // namespace mgk::test
