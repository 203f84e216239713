#include "mgk/mgf.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "mgk/errors.hpp"

namespace mgk {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line << ": " << what;
    throw FormatError(msg.str(), line);
}

// Splits on single spaces; consecutive spaces produce an empty field, which
// the callers reject, enforcing the single-space rule.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (start <= line.size()) {
        size_t space = line.find(' ', start);
        if (space == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, space - start));
        start = space + 1;
    }
    return fields;
}

int parse_index(std::string_view field, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
        fail(line, std::string("bad ") + what + " `" + std::string(field) +
                       "`");
    }
    return value;
}

double parse_coord(std::string_view field, int line) {
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() ||
        !std::isfinite(value)) {
        fail(line, "bad coordinate `" + std::string(field) + "`");
    }
    return value;
}

void format_coord(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

Graph read_mgf(std::string_view text) {
    std::vector<Point2> vertices;
    std::vector<Edge> edges;
    bool saw_header = false;
    bool saw_edge = false;

    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            fail(line_no + 1, "missing trailing newline");
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (!saw_header) {
            if (line != "mgf 1") {
                fail(line_no, "expected header `mgf 1`");
            }
            saw_header = true;
            continue;
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto fields = split_fields(line);
        if (fields[0] == "v") {
            if (saw_edge) {
                fail(line_no, "vertex line after edge lines");
            }
            if (fields.size() != 4) {
                fail(line_no, "vertex line needs 4 fields");
            }
            int index = parse_index(fields[1], line_no, "vertex index");
            if (index != static_cast<int>(vertices.size())) {
                std::ostringstream msg;
                msg << "vertex index " << index << " out of order, expected "
                    << vertices.size();
                fail(line_no, msg.str());
            }
            double x = parse_coord(fields[2], line_no);
            double y = parse_coord(fields[3], line_no);
            vertices.push_back({x, y});
        } else if (fields[0] == "e") {
            if (fields.size() != 3) {
                fail(line_no, "edge line needs 3 fields");
            }
            saw_edge = true;
            int i = parse_index(fields[1], line_no, "edge endpoint");
            int j = parse_index(fields[2], line_no, "edge endpoint");
            if (i >= j) {
                fail(line_no, "edge endpoints must satisfy i < j");
            }
            if (j >= static_cast<int>(vertices.size())) {
                std::ostringstream msg;
                msg << "edge endpoint " << j << " out of range for "
                    << vertices.size() << " vertices";
                fail(line_no, msg.str());
            }
            edges.push_back({i, j});
        } else {
            fail(line_no, "unknown record `" + std::string(fields[0]) + "`");
        }
    }
    if (!saw_header) {
        fail(1, "empty input, expected header `mgf 1`");
    }

    Graph g;
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    return g;
}

std::string write_mgf(const Graph& g) {
    std::string out = "mgf 1\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        out += "v ";
        out += std::to_string(i);
        out += ' ';
        format_coord(out, g.vertices[i].x);
        out += ' ';
        format_coord(out, g.vertices[i].y);
        out += '\n';
    }
    for (const Edge& e : g.edges) {
        out += "e ";
        out += std::to_string(e.first);
        out += ' ';
        out += std::to_string(e.second);
        out += '\n';
    }
    return out;
}

Graph read_mgf_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::string text(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>{});
    return read_mgf(text);
}

void write_mgf_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << write_mgf(g);
    if (!out) {
        throw Error("failed writing " + path);
    }
}

} // namespace mgk
