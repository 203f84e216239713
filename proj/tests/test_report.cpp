#include "doctest.h"

#include <string>

#include "mgk/report.hpp"
#include "support.hpp"

using namespace mgk;
using namespace mgk::test;

TEST_CASE("JsonWriter emits ordered objects and arrays") {
    JsonWriter w;
    w.begin_object();
    w.key("name").value("x");
    w.key("count").value(3);
    w.key("items").begin_array().value(1).value(2).end_array();
    w.key("flag").value(true);
    w.key("none").null();
    w.end_object();
    CHECK(w.str() ==
          "{\"name\":\"x\",\"count\":3,\"items\":[1,2],\"flag\":true,"
          "\"none\":null}");
}

TEST_CASE("JsonWriter escapes strings") {
    JsonWriter w;
    w.begin_array();
    w.value("a\"b\\c\nd\te");
    w.value(std::string_view("ctrl\x01"));
    w.end_array();
    CHECK(w.str() == "[\"a\\\"b\\\\c\\nd\\te\",\"ctrl\\u0001\"]");
}

TEST_CASE("JsonWriter prints doubles with full precision") {
    JsonWriter w;
    w.begin_array();
    w.value(0.1 + 0.2);
    w.value(1.0);
    w.value(0.25);
    w.end_array();
    CHECK(w.str() == "[0.30000000000000004,1,0.25]");
}

TEST_CASE("JsonWriter writes non-finite doubles as null") {
    JsonWriter w;
    w.begin_array();
    w.value(std::numeric_limits<double>::infinity());
    w.value(std::numeric_limits<double>::quiet_NaN());
    w.end_array();
    CHECK(w.str() == "[null,null]");
}

TEST_CASE("regularity_name covers the three classes") {
    RegularityClass r;
    r.tag = RegularityClass::Tag::FourRegular;
    CHECK(regularity_name(r) == "4-regular");
    r.tag = RegularityClass::Tag::TwoFourRegular;
    CHECK(regularity_name(r) == "2,4-regular");
    r.tag = RegularityClass::Tag::Irregular;
    CHECK(regularity_name(r) == "irregular");
}

TEST_CASE("record_json keeps the full key set with nulls") {
    ReportRecord rec = make_record("t", unit_triangle());
    std::string json = record_json(rec);
    CHECK(json ==
          "{\"id\":\"t\",\"vertices\":3,\"edges\":3,"
          "\"regularity\":\"irregular\",\"max_length_deviation\":null,"
          "\"min_separation\":null,\"connected\":null,\"rank\":null,"
          "\"internal_dof\":null,\"classification\":null,"
          "\"degree2_distance\":null,\"refinement\":null}\n");
}

TEST_CASE("record_json serializes filled sections") {
    ReportRecord rec = make_record("g", unit_rhombus());
    fill_verification(rec, verify_matchstick(unit_rhombus()));
    fill_rigidity(rec, analyze_rigidity(unit_rhombus()));
    RefinementTrace trace;
    trace.iterations = 2;
    trace.final_max_residual = 0.0;
    trace.converged = true;
    rec.refinement = trace;
    std::string json = record_json(rec);
    CHECK(json.find("\"rank\":4") != std::string::npos);
    CHECK(json.find("\"internal_dof\":1") != std::string::npos);
    CHECK(json.find("\"classification\":\"flexible\"") != std::string::npos);
    CHECK(json.find("\"refinement\":{\"iterations\":2,"
                    "\"final_max_residual\":0,"
                    "\"converged\":true}") != std::string::npos);
    CHECK(json.find("\"connected\":true") != std::string::npos);
}

TEST_CASE("record_json is deterministic") {
    const CatalogEntry& entry = corpus_entry("fig02/0");
    ReportRecord rec = make_record(entry.id, entry.graph);
    fill_verification(rec, entry.verification);
    fill_rigidity(rec, entry.rigidity);
    rec.refinement = entry.refinement;
    CHECK(record_json(rec) == record_json(rec));
    ReportRecord again = make_record(entry.id, entry.graph);
    fill_verification(again, entry.verification);
    fill_rigidity(again, entry.rigidity);
    again.refinement = entry.refinement;
    CHECK(record_json(rec) == record_json(again));
}
