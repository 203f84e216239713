#include "mgk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mgk/errors.hpp"
#include "mgk/geometry.hpp"

namespace mgk {

LengthCheck check_unit_lengths(const Graph& g) {
    LengthCheck check;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [i, j] = g.edges[e];
        double dev = std::abs(distance(g.vertices[i], g.vertices[j]) - 1.0);
        if (dev > check.max_deviation || check.worst_edge < 0) {
            check.max_deviation = dev;
            check.worst_edge = static_cast<int>(e);
        }
    }
    return check;
}

SeparationCheck check_separation(const Graph& g) {
    SeparationCheck check;
    check.min_separation = std::numeric_limits<double>::infinity();
    auto consider = [&](double d, SeparationWitness w) {
        if (d < check.min_separation) {
            check.min_separation = d;
            check.worst = w;
        }
    };

    const auto& vs = g.vertices;
    int ne = g.edge_count();
    for (int a = 0; a < ne; ++a) {
        auto [i, j] = g.edges[a];
        for (int b = a + 1; b < ne; ++b) {
            auto [k, l] = g.edges[b];
            bool share_i = (i == k || i == l);
            bool share_j = (j == k || j == l);
            if (!share_i && !share_j) {
                double d = segment_segment_distance(vs[i], vs[j], vs[k], vs[l]);
                consider(d, {SeparationWitness::Kind::EdgeEdge, a, b});
                continue;
            }
            if (share_i && share_j) continue; // same edge cannot recur
            // One shared endpoint: the edges must open a positive angle.
            // With u, v the directions away from the shared vertex, a zero
            // angle (parallel, same direction) means geometric overlap.
            int shared = share_i ? i : j;
            int tip_a = share_i ? j : i;
            int tip_b = (k == shared) ? l : k;
            Point2 u = vs[tip_a] - vs[shared];
            Point2 v = vs[tip_b] - vs[shared];
            if (dot(u, v) > 0.0 &&
                std::abs(cross(u, v)) <= 1e-12 * norm(u) * norm(v)) {
                consider(0.0, {SeparationWitness::Kind::ZeroAngle, a, b});
            }
        }
    }

    int nv = g.vertex_count();
    for (int v = 0; v < nv; ++v) {
        for (int b = 0; b < ne; ++b) {
            auto [k, l] = g.edges[b];
            if (v == k || v == l) continue;
            double d = point_segment_distance(vs[v], vs[k], vs[l]);
            consider(d, {SeparationWitness::Kind::VertexEdge, v, b});
        }
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            consider(distance(vs[i], vs[j]),
                     {SeparationWitness::Kind::VertexVertex, i, j});
        }
    }

    if (!std::isfinite(check.min_separation)) {
        check.min_separation = 0.0; // fewer than two features
        check.worst = {};
    }
    return check;
}

VerificationReport verify_matchstick(const Graph& g,
                                     const VerificationPolicy& policy) {
    VerificationReport report;
    auto lengths = check_unit_lengths(g);
    auto separation = check_separation(g);
    report.max_length_deviation = lengths.max_deviation;
    report.min_nonadjacent_separation = separation.min_separation;
    report.regularity = classify_regularity(g);
    report.connected = is_connected(g);

    if (lengths.max_deviation > policy.length_tolerance) {
        std::ostringstream msg;
        msg << "edge " << lengths.worst_edge << " deviates from unit length by "
            << lengths.max_deviation << " (tolerance "
            << policy.length_tolerance << ")";
        report.failures.push_back(msg.str());
    }
    if (separation.min_separation < policy.separation_delta) {
        std::ostringstream msg;
        msg << "minimum feature separation " << separation.min_separation
            << " below delta " << policy.separation_delta;
        report.failures.push_back(msg.str());
    }
    if (report.regularity.tag == RegularityClass::Tag::Irregular) {
        report.failures.push_back(
            "degrees are neither 4-regular nor (2,4)-regular");
    }
    if (policy.require_connected && !report.connected) {
        report.failures.push_back("graph is not connected");
    }
    report.pass = report.failures.empty();
    return report;
}

double degree2_distance(const Graph& g) {
    std::vector<int> deg2;
    auto degrees = degree_sequence(g);
    for (size_t v = 0; v < degrees.size(); ++v) {
        if (degrees[v] == 2) deg2.push_back(static_cast<int>(v));
    }
    if (deg2.size() != 2) {
        std::ostringstream msg;
        msg << "expected exactly two degree-2 vertices, found " << deg2.size();
        throw WrongClass(msg.str());
    }
    return distance(g.vertices[deg2[0]], g.vertices[deg2[1]]);
}

} // namespace mgk
