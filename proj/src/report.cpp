#include "mgk/report.hpp"

#include <cmath>
#include <cstdio>

namespace mgk {

void JsonWriter::separate() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_.empty()) {
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

void JsonWriter::write_quoted(std::string_view s) {
    out_ += '"';
    for (char c : s) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\r': out_ += "\\r"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out_ += buf;
                } else {
                    out_ += c;
                }
        }
    }
    out_ += '"';
}

JsonWriter& JsonWriter::key(std::string_view k) {
    separate();
    write_quoted(k);
    out_ += ':';
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
    separate();
    write_quoted(s);
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) {
    return value(std::string_view(s));
}

JsonWriter& JsonWriter::value(double v) {
    separate();
    if (!std::isfinite(v)) {
        out_ += "null";
        return *this;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out_ += buf;
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    separate();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separate();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::null() {
    separate();
    out_ += "null";
    return *this;
}

std::string regularity_name(const RegularityClass& r) {
    switch (r.tag) {
        case RegularityClass::Tag::FourRegular: return "4-regular";
        case RegularityClass::Tag::TwoFourRegular: return "2,4-regular";
        case RegularityClass::Tag::Irregular: return "irregular";
    }
    return "irregular";
}

ReportRecord make_record(const std::string& id, const Graph& g) {
    ReportRecord rec;
    rec.id = id;
    rec.vertices = g.vertex_count();
    rec.edges = g.edge_count();
    rec.regularity = regularity_name(classify_regularity(g));
    return rec;
}

void fill_verification(ReportRecord& rec, const VerificationReport& report) {
    rec.max_length_deviation = report.max_length_deviation;
    rec.min_separation = report.min_nonadjacent_separation;
    rec.connected = report.connected;
    rec.regularity = regularity_name(report.regularity);
}

void fill_rigidity(ReportRecord& rec, const RigidityReport& report) {
    rec.rank = report.rank;
    rec.internal_dof = report.internal_dof;
    rec.classification = report.rigid ? "rigid" : "flexible";
}

void write_record(JsonWriter& w, const ReportRecord& rec) {
    w.begin_object();
    w.key("id").value(rec.id);
    w.key("vertices").value(rec.vertices);
    w.key("edges").value(rec.edges);
    w.key("regularity").value(rec.regularity);
    w.key("max_length_deviation");
    rec.max_length_deviation ? w.value(*rec.max_length_deviation) : w.null();
    w.key("min_separation");
    rec.min_separation ? w.value(*rec.min_separation) : w.null();
    w.key("connected");
    rec.connected ? w.value(*rec.connected) : w.null();
    w.key("rank");
    rec.rank ? w.value(*rec.rank) : w.null();
    w.key("internal_dof");
    rec.internal_dof ? w.value(*rec.internal_dof) : w.null();
    w.key("classification");
    rec.classification ? w.value(*rec.classification) : w.null();
    w.key("degree2_distance");
    rec.degree2_distance ? w.value(*rec.degree2_distance) : w.null();
    w.key("refinement");
    if (rec.refinement) {
        w.begin_object();
        w.key("iterations").value(rec.refinement->iterations);
        w.key("final_max_residual").value(rec.refinement->final_max_residual);
        w.key("converged").value(rec.refinement->converged);
        w.end_object();
    } else {
        w.null();
    }
    w.end_object();
}

std::string record_json(const ReportRecord& rec) {
    JsonWriter w;
    write_record(w, rec);
    return w.str() + "\n";
}

} // namespace mgk
