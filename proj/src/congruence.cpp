#include "mgk/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "mgk/errors.hpp"

namespace mgk {

namespace {

constexpr long long kNodeBudget = 10'000'000;

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [i, j] : g.edges) {
        adj[i][j] = 1;
        adj[j][i] = 1;
    }
    return adj;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

// Vertices of a in BFS order from the lowest index of each component, so
// every vertex after the first of its component has an already-visited
// neighbor and the candidate set stays narrow.
std::vector<int> search_order(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        order.push_back(start);
        for (size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int nb : adj[order[head]]) {
                if (!seen[nb]) {
                    seen[nb] = 1;
                    order.push_back(nb);
                }
            }
        }
    }
    return order;
}

// Sorted multiset of neighbor degrees, the second-order pruning signature.
std::vector<int> neighbor_degrees(const std::vector<std::vector<int>>& adj,
                                  const std::vector<int>& degree, int v) {
    std::vector<int> out;
    out.reserve(adj[v].size());
    for (int nb : adj[v]) out.push_back(degree[nb]);
    std::sort(out.begin(), out.end());
    return out;
}

struct IsoSearch {
    const std::vector<std::vector<char>>& adj_a;
    const std::vector<std::vector<char>>& adj_b;
    const std::vector<int>& order;          // a-vertices, BFS order
    const std::vector<std::vector<int>>& candidates; // per a-vertex
    int n;
    std::vector<int> map_a_to_b;
    std::vector<char> used_b;
    long long nodes = 0;

    // Visits complete isomorphisms in deterministic (lowest candidate
    // first) order until `sink` returns true. Returns true if stopped.
    template <typename Sink>
    bool run(size_t depth, Sink&& sink) {
        if (depth == order.size()) {
            return sink(map_a_to_b);
        }
        int u = order[depth];
        for (int w : candidates[u]) {
            if (used_b[w]) continue;
            if (++nodes > kNodeBudget) {
                throw IsomorphismTimeout(
                    "isomorphism search exceeded the node budget");
            }
            bool ok = true;
            for (size_t k = 0; k < depth; ++k) {
                int v = order[k];
                if (adj_a[u][v] != adj_b[w][map_a_to_b[v]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_a_to_b[u] = w;
            used_b[w] = 1;
            if (run(depth + 1, sink)) return true;
            used_b[w] = 0;
            map_a_to_b[u] = -1;
        }
        return false;
    }
};

// Enumerates adjacency-preserving bijections a -> b; stops when `sink`
// returns true. Returns false without calling `sink` when the graphs
// cannot be isomorphic.
template <typename Sink>
bool for_each_isomorphism(const Graph& a, const Graph& b, Sink&& sink) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    if (n == 0) {
        return sink(std::vector<int>{});
    }
    auto deg_a = degree_sequence(a);
    auto deg_b = degree_sequence(b);
    {
        auto sorted_a = deg_a;
        auto sorted_b = deg_b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) return false;
    }

    auto lists_a = adjacency_lists(a);
    auto lists_b = adjacency_lists(b);
    auto adj_a = adjacency_matrix(a);
    auto adj_b = adjacency_matrix(b);
    auto order = search_order(lists_a);

    // Static candidate sets: degree and neighbor-degree multiset must match.
    std::vector<std::vector<int>> nd_b(n);
    for (int w = 0; w < n; ++w) nd_b[w] = neighbor_degrees(lists_b, deg_b, w);
    std::vector<std::vector<int>> candidates(n);
    for (int u = 0; u < n; ++u) {
        auto nd_u = neighbor_degrees(lists_a, deg_a, u);
        for (int w = 0; w < n; ++w) {
            if (deg_a[u] == deg_b[w] && nd_u == nd_b[w]) {
                candidates[u].push_back(w);
            }
        }
        if (candidates[u].empty()) return false;
    }

    IsoSearch search{adj_a, adj_b, order, candidates, n,
                     std::vector<int>(n, -1), std::vector<char>(n, 0)};
    return search.run(0, sink);
}

struct Alignment {
    Isometry isometry;
    double max_error = std::numeric_limits<double>::infinity();
};

// Least-squares isometry taking a's vertices onto b's under `mapping`,
// via centering and 2x2 cross-covariance SVD; the rotation and reflection
// branches are both evaluated and the tighter one wins.
Alignment best_fit_isometry(const Graph& a, const Graph& b,
                            const std::vector<int>& mapping) {
    int n = a.vertex_count();
    Point2 ca{0.0, 0.0}, cb{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        ca = ca + a.vertices[i];
        cb = cb + b.vertices[mapping[i]];
    }
    ca = (1.0 / n) * ca;
    cb = (1.0 / n) * cb;

    Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
    for (int i = 0; i < n; ++i) {
        Point2 pa = a.vertices[i] - ca;
        Point2 pb = b.vertices[mapping[i]] - cb;
        M(0, 0) += pb.x * pa.x;
        M(0, 1) += pb.x * pa.y;
        M(1, 0) += pb.y * pa.x;
        M(1, 1) += pb.y * pa.y;
    }
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(
        M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double det_uv =
        (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0 ? -1.0
                                                                        : 1.0;

    Alignment best;
    for (double branch : {det_uv, -det_uv}) {
        Eigen::Matrix2d O = svd.matrixU() *
                            Eigen::Vector2d(1.0, branch).asDiagonal() *
                            svd.matrixV().transpose();
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            Point2 pa = a.vertices[i] - ca;
            Point2 pb = b.vertices[mapping[i]] - cb;
            double ex = O(0, 0) * pa.x + O(0, 1) * pa.y - pb.x;
            double ey = O(1, 0) * pa.x + O(1, 1) * pa.y - pb.y;
            err = std::max(err, std::hypot(ex, ey));
        }
        if (err < best.max_error) {
            best.max_error = err;
            Isometry iso;
            iso.reflect = O.determinant() < 0.0;
            // With O = R(angle) * diag(1, reflect ? -1 : 1), the first
            // column of O is (cos angle, sin angle) either way.
            iso.angle = std::atan2(O(1, 0), O(0, 0));
            iso.translation = {cb.x - (O(0, 0) * ca.x + O(0, 1) * ca.y),
                               cb.y - (O(1, 0) * ca.x + O(1, 1) * ca.y)};
            best.isometry = iso;
        }
    }
    return best;
}

} // namespace

Fingerprint fingerprint(const Graph& g) {
    Fingerprint fp;
    fp.vertex_count = g.vertex_count();
    fp.edge_count = g.edge_count();
    fp.degree_sequence = degree_sequence(g);
    std::sort(fp.degree_sequence.begin(), fp.degree_sequence.end());
    fp.distance_multiset.reserve(
        static_cast<size_t>(fp.vertex_count) * (fp.vertex_count - 1) / 2);
    for (int i = 0; i < fp.vertex_count; ++i) {
        for (int j = i + 1; j < fp.vertex_count; ++j) {
            double d = distance(g.vertices[i], g.vertices[j]);
            fp.distance_multiset.push_back(std::llround(d * 1e6));
        }
    }
    std::sort(fp.distance_multiset.begin(), fp.distance_multiset.end());
    return fp;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b) {
    std::optional<std::vector<int>> found;
    for_each_isomorphism(a, b, [&](const std::vector<int>& mapping) {
        found = mapping;
        return true;
    });
    return found;
}

CongruenceResult is_congruent(const Graph& a, const Graph& b, double tol) {
    CongruenceResult result;
    result.max_alignment_error = std::numeric_limits<double>::infinity();
    for_each_isomorphism(a, b, [&](const std::vector<int>& mapping) {
        Alignment fit = best_fit_isometry(a, b, mapping);
        if (fit.max_error < result.max_alignment_error) {
            result.max_alignment_error = fit.max_error;
            result.vertex_mapping = mapping;
            result.isometry = fit.isometry;
        }
        return fit.max_error <= tol;
    });
    if (result.max_alignment_error <= tol) {
        result.congruent = true;
    } else {
        result.vertex_mapping.reset();
        result.isometry.reset();
    }
    return result;
}

std::vector<CongruenceClass> dedup(
    const std::vector<std::pair<std::string, const Graph*>>& entries,
    double tol) {
    int n = static_cast<int>(entries.size());
    std::vector<Fingerprint> prints(n);
    for (int i = 0; i < n; ++i) prints[i] = fingerprint(*entries[i].second);

    // Bucket by the combinatorial part of the fingerprint; distances are
    // compared with slack inside the bucket so rounding boundaries cannot
    // split a pair of congruent graphs.
    std::map<std::tuple<int, int, std::vector<int>>, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i) {
        buckets[{prints[i].vertex_count, prints[i].edge_count,
                 prints[i].degree_sequence}]
            .push_back(i);
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };

    auto distances_compatible = [&](int i, int j) {
        const auto& da = prints[i].distance_multiset;
        const auto& db = prints[j].distance_multiset;
        for (size_t k = 0; k < da.size(); ++k) {
            if (std::llabs(da[k] - db[k]) > 2) return false;
        }
        return true;
    };

    for (const auto& [key, bucket] : buckets) {
        for (size_t x = 0; x < bucket.size(); ++x) {
            for (size_t y = x + 1; y < bucket.size(); ++y) {
                int i = bucket[x], j = bucket[y];
                if (find(i) == find(j)) continue;
                if (!distances_compatible(i, j)) continue;
                if (is_congruent(*entries[i].second, *entries[j].second, tol)
                        .congruent) {
                    parent[find(i)] = find(j);
                }
            }
        }
    }

    std::map<int, std::vector<std::string>> by_root;
    for (int i = 0; i < n; ++i) {
        by_root[find(i)].push_back(entries[i].first);
    }
    std::vector<CongruenceClass> classes;
    classes.reserve(by_root.size());
    for (auto& [root, ids] : by_root) {
        std::sort(ids.begin(), ids.end());
        classes.push_back({ids.front(), std::move(ids)});
    }
    std::sort(classes.begin(), classes.end(),
              [](const CongruenceClass& a, const CongruenceClass& b) {
                  return a.representative < b.representative;
              });
    return classes;
}

} // namespace mgk
