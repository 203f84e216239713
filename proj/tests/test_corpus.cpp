#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "mgk/congruence.hpp"
#include "mgk/ingest.hpp"
#include "support.hpp"

using namespace mgk;
using namespace mgk::test;

namespace {

// Reference values for every embedded figure component, frozen from an
// independent implementation of the same pipeline (median normalization,
// damped least squares on squared-length residuals, SVD rank). Counts are
// exact; geometric quantities are matched to 1e-9.
struct CorpusRow {
    const char* id;
    int vertices;
    int edges;
    int rank;
    int internal_dof;
    int iterations;
    double min_separation;
    bool has_d2;
    double d2;
    double raw_scale; // median edge length in figure units
};

const CorpusRow kRows[] = {
    {"fig02/0", 64, 128, 125, 0, 4, 0.15614890136591272, false, -1.0, 43.770331873541934},
    {"fig09/0", 22, 42, 41, 0, 2, 0.179146009899575, true, 5.873363077045638, 43.77033959863685},
    {"fig09/1", 22, 42, 41, 0, 2, 0.2676165673294328, true, 6.209855545722785, 43.7703535969837},
    {"fig10/0", 31, 60, 59, 0, 3, 0.0733598146215547, true, 7.691208106566578, 43.77036203637106},
    {"fig10/1", 30, 58, 57, 0, 2, 0.2580219385615978, true, 7.896939381072232, 43.770338798094755},
    {"fig10/2", 30, 58, 57, 0, 3, 0.258021938561349, true, 8.130937263460373, 43.77039674249028},
    {"fig11/0", 31, 60, 59, 0, 3, 0.08847055743077838, true, 7.491981559661898, 43.77036293863692},
    {"fig13/0", 35, 68, 67, 0, 3, 0.26761656732588207, true, 6.880658315018024, 43.77036414470412},
    {"fig13/1", 35, 68, 67, 0, 3, 0.17914600989730967, true, 8.011159634421618, 43.77036414470417},
    {"fig13/2", 35, 68, 67, 0, 3, 0.1791460098968718, true, 8.73648477690237, 43.77035313554142},
    {"fig15/0", 37, 72, 71, 0, 3, 0.11181200485328714, true, 7.595526678697287, 43.770350430514085},
    {"fig15/1", 37, 72, 71, 0, 2, 0.11181200485311019, true, 8.550960114891932, 43.77035124042301},
    {"fig15/2", 37, 72, 71, 0, 3, 0.1118120048532881, true, 9.091273027346437, 43.77037328056504},
    {"fig16/0", 38, 74, 73, 0, 3, 0.1719260291356359, true, 9.923518380735388, 43.770351461348774},
    {"fig16/1", 38, 74, 73, 0, 3, 0.17192602913563254, true, 10.10021012271181, 43.77036462196764},
};

} // namespace

TEST_CASE("every corpus component matches the frozen reference") {
    const std::vector<CatalogEntry>& entries = corpus_entries();
    REQUIRE(entries.size() == std::size(kRows));
    for (size_t k = 0; k < std::size(kRows); ++k) {
        const CorpusRow& row = kRows[k];
        CAPTURE(row.id);
        const CatalogEntry& entry = entries[k];
        CHECK(entry.id == row.id);
        CHECK(entry.graph.vertex_count() == row.vertices);
        CHECK(entry.graph.edge_count() == row.edges);
        CHECK(entry.rigidity.rank == row.rank);
        CHECK(entry.rigidity.internal_dof == row.internal_dof);
        CHECK(entry.rigidity.rigid);
        CHECK(entry.refinement.iterations == row.iterations);
        CHECK(entry.refinement.converged);
        CHECK(entry.refinement.final_max_residual <= 1e-12);
        CHECK(entry.refinement.max_vertex_displacement <= 2e-4);
        CHECK(std::abs(entry.verification.min_nonadjacent_separation -
                       row.min_separation) <= 1e-9);
        CHECK(entry.degree2_distance.has_value() == row.has_d2);
        if (row.has_d2 && entry.degree2_distance) {
            CHECK(std::abs(*entry.degree2_distance - row.d2) <= 1e-9);
        }
    }
}

TEST_CASE("every corpus component verifies as a matchstick graph") {
    for (const CatalogEntry& entry : corpus_entries()) {
        CAPTURE(entry.id);
        CHECK(entry.verification.pass);
        CHECK(entry.verification.failures.empty());
        CHECK(entry.verification.connected);
        CHECK(entry.verification.max_length_deviation <= 1e-9);
        CHECK(entry.verification.min_nonadjacent_separation >= 1e-6);
    }
}

TEST_CASE("corpus regularity classes split into 4-regular and (2,4)") {
    for (const CatalogEntry& entry : corpus_entries()) {
        CAPTURE(entry.id);
        const RegularityClass& rc = entry.verification.regularity;
        if (entry.id.rfind("fig02/", 0) == 0) {
            CHECK(rc.is_four_regular());
            CHECK(rc.degree_histogram == std::map<int, int>{{4, 64}});
            // 4-regular handshake: e = 2n.
            CHECK(entry.graph.edge_count() == 2 * entry.graph.vertex_count());
        } else {
            CHECK(rc.is_two_four_regular());
            CHECK(rc.degree2_count == 2);
            // (2,4)-regular with two degree-2 vertices: e = 2n - 2.
            CHECK(entry.graph.edge_count() ==
                  2 * entry.graph.vertex_count() - 2);
        }
    }
}

TEST_CASE("raw figure coordinates use one consistent drawing scale") {
    size_t row_index = 0;
    for (const char* stem :
         {"fig02", "fig09", "fig10", "fig11", "fig13", "fig15", "fig16"}) {
        std::string text = read_file(corpus_dir() + "/" + stem + ".tikz");
        Graph whole = unify_endpoints(extract_segments(text));
        for (const Graph& component : connected_components(whole)) {
            REQUIRE(row_index < std::size(kRows));
            const CorpusRow& row = kRows[row_index++];
            CAPTURE(row.id);
            double med = estimate_scale(component);
            CHECK(med == doctest::Approx(row.raw_scale).epsilon(1e-9));
            // Raw drawings are already close to unit scale after division.
            Graph normalized = normalize(component, med);
            LengthCheck lengths = check_unit_lengths(normalized);
            CHECK(lengths.max_deviation <= 1e-3);
        }
    }
    CHECK(row_index == std::size(kRows));
}

TEST_CASE("the two 22-vertex examples are genuinely different") {
    const Graph& a = corpus_entry("fig09/0").graph;
    const Graph& b = corpus_entry("fig09/1").graph;
    CHECK(fingerprint(a) != fingerprint(b));
    CHECK_FALSE(is_congruent(a, b).congruent);
}

TEST_CASE("the 31-vertex examples from fig10 and fig11 differ") {
    const Graph& a = corpus_entry("fig10/0").graph;
    const Graph& b = corpus_entry("fig11/0").graph;
    CHECK_FALSE(is_congruent(a, b).congruent);
}
