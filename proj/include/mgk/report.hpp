#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgk/graph.hpp"
#include "mgk/refine.hpp"
#include "mgk/rigidity.hpp"
#include "mgk/verify.hpp"

namespace mgk {

// Minimal JSON emitter with insertion-ordered keys and fixed float
// formatting (17 significant digits), so identical inputs always serialize
// to identical bytes.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);
    JsonWriter& value(std::string_view s);
    JsonWriter& value(const char* s);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(bool v);
    JsonWriter& null();

    const std::string& str() const { return out_; }

  private:
    void separate();
    void write_quoted(std::string_view s);
    std::string out_;
    std::vector<bool> first_; // per open container: no element emitted yet
    bool pending_key_ = false;
};

// One flat record per graph; fields left unset serialize as null so the key
// set is stable across subcommands.
struct ReportRecord {
    std::string id;
    int vertices = 0;
    int edges = 0;
    std::string regularity;
    std::optional<double> max_length_deviation;
    std::optional<double> min_separation;
    std::optional<bool> connected;
    std::optional<int> rank;
    std::optional<int> internal_dof;
    std::optional<std::string> classification; // "rigid" | "flexible"
    std::optional<double> degree2_distance;
    std::optional<RefinementTrace> refinement;
};

// "4-regular", "2,4-regular", or "irregular".
std::string regularity_name(const RegularityClass& r);

ReportRecord make_record(const std::string& id, const Graph& g);
void fill_verification(ReportRecord& rec, const VerificationReport& report);
void fill_rigidity(ReportRecord& rec, const RigidityReport& report);

// Serializes the record (all keys, insertion order fixed) into `w`.
void write_record(JsonWriter& w, const ReportRecord& rec);

// Single-record document with trailing newline.
std::string record_json(const ReportRecord& rec);

} // namespace mgk
