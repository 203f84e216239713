#include "mgk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mgk/errors.hpp"

namespace mgk {

Graph build_graph(std::vector<Point2> points, std::span<const Edge> edge_pairs,
                  double merge_tolerance) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y))
            throw Error("vertex " + std::to_string(i) + " has non-finite coordinates");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (distance(points[i], points[j]) < merge_tolerance)
                throw DuplicateVertexPosition(
                    "vertices " + std::to_string(i) + " and " + std::to_string(j) +
                    " closer than merge tolerance");
        }
    }

    std::vector<Edge> edges;
    edges.reserve(edge_pairs.size());
    for (const auto& [a, b] : edge_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IndexOutOfRange("edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") references a vertex outside 0.." +
                                  std::to_string(n - 1));
        if (a == b)
            throw SelfLoop("edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    return Graph{std::move(points), std::move(edges), 1.0};
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.vertices.size(), 0);
    for (const auto& [i, j] : g.edges) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

RegularityClass classify_regularity(const Graph& g) {
    RegularityClass rc;
    for (int d : degree_sequence(g)) ++rc.degree_histogram[d];

    const auto& h = rc.degree_histogram;
    const bool only4 = h.size() == 1 && h.count(4);
    const bool only24 = h.size() == 2 && h.count(2) && h.count(4);
    if (!g.vertices.empty() && only4) {
        rc.tag = RegularityClass::Tag::FourRegular;
    } else if (only24) {
        rc.tag = RegularityClass::Tag::TwoFourRegular;
        rc.degree2_count = h.at(2);
    } else {
        rc.tag = RegularityClass::Tag::Irregular;
    }
    return rc;
}

namespace {

std::vector<int> component_labels(const Graph& g, int& count) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [i, j] : g.edges) parent[find(i)] = find(j);

    // Label components 0,1,... by smallest member vertex index.
    std::vector<int> label(n, -1);
    count = 0;
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (label[r] < 0) label[r] = count++;
        label[v] = label[r];
    }
    return label;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertices.empty()) return true;
    int count = 0;
    component_labels(g, count);
    return count == 1;
}

std::vector<Graph> connected_components(const Graph& g) {
    int count = 0;
    const std::vector<int> label = component_labels(g, count);

    std::vector<Graph> comps(count);
    std::vector<int> local(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        Graph& c = comps[label[v]];
        local[v] = c.vertex_count();
        c.vertices.push_back(g.vertices[v]);
        c.scale = g.scale;
    }
    for (const auto& [i, j] : g.edges)
        comps[label[i]].edges.emplace_back(local[i], local[j]);
    for (Graph& c : comps) std::sort(c.edges.begin(), c.edges.end());
    return comps;
}

} // namespace mgk
