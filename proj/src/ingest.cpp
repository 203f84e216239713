#include "mgk/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "mgk/errors.hpp"

namespace mgk {

namespace {

struct Scanner {
    std::string_view text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    // Attempts to read `(x, y)` starting at pos (after leading whitespace).
    // On success advances past the closing paren and returns the point.
    std::optional<Point2> try_coordinate() {
        size_t save = pos;
        skip_ws();
        if (done() || text[pos] != '(') {
            pos = save;
            return std::nullopt;
        }
        ++pos;
        auto x = try_number();
        if (!x) {
            pos = save;
            return std::nullopt;
        }
        skip_ws();
        if (done() || text[pos] != ',') {
            pos = save;
            return std::nullopt;
        }
        ++pos;
        auto y = try_number();
        if (!y) {
            pos = save;
            return std::nullopt;
        }
        skip_ws();
        if (done() || text[pos] != ')') {
            pos = save;
            return std::nullopt;
        }
        ++pos;
        return Point2{*x, *y};
    }

    std::optional<double> try_number() {
        skip_ws();
        size_t start = pos;
        if (!done() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        bool digits = false;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            digits = true;
        }
        if (!done() && text[pos] == '.') {
            ++pos;
            while (!done() &&
                   std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                digits = true;
            }
        }
        if (digits && !done() && (text[pos] == 'e' || text[pos] == 'E')) {
            size_t mark = pos;
            ++pos;
            if (!done() && (text[pos] == '+' || text[pos] == '-')) ++pos;
            bool exp_digits = false;
            while (!done() &&
                   std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                exp_digits = true;
            }
            if (!exp_digits) pos = mark;
        }
        if (!digits) {
            pos = start;
            return std::nullopt;
        }
        // from_chars rejects a leading '+'.
        size_t parse_from = text[start] == '+' ? start + 1 : start;
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data() + parse_from,
                                         text.data() + pos, value);
        if (ec != std::errc{} || ptr != text.data() + pos) {
            pos = start;
            return std::nullopt;
        }
        return value;
    }

    // True if the next non-whitespace characters are `--`; consumes them.
    bool try_joiner() {
        size_t save = pos;
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '-') {
            pos += 2;
            return true;
        }
        pos = save;
        return false;
    }
};

} // namespace

std::vector<Segment> extract_segments(std::string_view text) {
    std::vector<Segment> segments;
    Scanner sc{text};
    std::optional<Point2> chain_end;
    while (!sc.done()) {
        if (!chain_end) {
            chain_end = sc.try_coordinate();
            if (!chain_end) {
                ++sc.pos;
            }
            continue;
        }
        if (!sc.try_joiner()) {
            // Chain over; the coordinate we hold was a label position or the
            // tail of a finished chain.
            chain_end.reset();
            continue;
        }
        auto next = sc.try_coordinate();
        if (!next) {
            std::ostringstream msg;
            msg << "expected a coordinate after `--` at offset " << sc.pos;
            throw MalformedCoordinate(msg.str());
        }
        segments.push_back({*chain_end, *next});
        chain_end = next;
    }
    return segments;
}

std::vector<Segment> extract_segments(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>{});
    return extract_segments(text);
}

Graph unify_endpoints(const std::vector<Segment>& segments,
                      const IngestOptions& opts) {
    // Endpoints in stream order: segment k contributes indices 2k and 2k+1.
    std::vector<Point2> pts;
    pts.reserve(segments.size() * 2);
    for (const Segment& s : segments) {
        pts.push_back(s.a);
        pts.push_back(s.b);
    }

    // Union-find over endpoints; pairs within tolerance share a group.
    std::vector<int> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    // Sort indices by x so only a sliding window needs pairwise checks.
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pts[a].x < pts[b].x;
    });
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = i + 1; j < order.size(); ++j) {
            if (pts[order[j]].x - pts[order[i]].x > opts.merge_tolerance) break;
            if (distance(pts[order[i]], pts[order[j]]) <= opts.merge_tolerance) {
                unite(order[i], order[j]);
            }
        }
    }

    // Number groups by first appearance in the endpoint stream.
    std::vector<int> group_of(pts.size(), -1);
    std::vector<std::vector<int>> members;
    for (size_t i = 0; i < pts.size(); ++i) {
        int root = find(static_cast<int>(i));
        if (group_of[root] < 0) {
            group_of[root] = static_cast<int>(members.size());
            members.emplace_back();
        }
        group_of[i] = group_of[root];
        members[group_of[root]].push_back(static_cast<int>(i));
    }

    // Place each vertex at its group centroid; reject smeared groups where
    // the transitive closure chained together points that are not actually
    // near each other.
    std::vector<Point2> vertices(members.size());
    for (size_t g = 0; g < members.size(); ++g) {
        Point2 sum{0.0, 0.0};
        for (int idx : members[g]) sum = sum + pts[idx];
        vertices[g] = (1.0 / static_cast<double>(members[g].size())) * sum;
        double diameter = 0.0;
        for (size_t i = 0; i < members[g].size(); ++i) {
            for (size_t j = i + 1; j < members[g].size(); ++j) {
                diameter = std::max(
                    diameter, distance(pts[members[g][i]], pts[members[g][j]]));
            }
        }
        if (diameter > 3.0 * opts.merge_tolerance) {
            std::ostringstream msg;
            msg << "endpoint group around (" << vertices[g].x << ", "
                << vertices[g].y << ") has diameter " << diameter
                << ", more than 3x the merge tolerance "
                << opts.merge_tolerance;
            throw MergeAmbiguity(msg.str());
        }
    }

    std::vector<Edge> edges;
    edges.reserve(segments.size());
    for (size_t k = 0; k < segments.size(); ++k) {
        int u = group_of[2 * k];
        int v = group_of[2 * k + 1];
        edges.push_back({u, v});
    }
    return build_graph(std::move(vertices), edges, opts.merge_tolerance);
}

double estimate_scale(const Graph& g, const IngestOptions& opts) {
    if (opts.expected_unit) {
        if (*opts.expected_unit <= 0.0 ||
            !std::isfinite(*opts.expected_unit)) {
            throw NonPositiveScale("expected unit must be positive and finite");
        }
        return *opts.expected_unit;
    }
    if (g.edges.empty()) {
        throw NoEdges("cannot estimate scale of a graph with no edges");
    }
    std::vector<double> lengths;
    lengths.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        lengths.push_back(distance(g.vertices[e.first], g.vertices[e.second]));
    }
    std::sort(lengths.begin(), lengths.end());
    size_t n = lengths.size();
    double median = (n % 2 == 1)
                        ? lengths[n / 2]
                        : 0.5 * (lengths[n / 2 - 1] + lengths[n / 2]);
    return median;
}

Graph normalize(const Graph& g, double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        std::ostringstream msg;
        msg << "scale must be positive and finite, got " << scale;
        throw NonPositiveScale(msg.str());
    }
    Graph out = g;
    for (Point2& p : out.vertices) {
        p = (1.0 / scale) * p;
    }
    out.scale = 1.0;
    return out;
}

} // namespace mgk
