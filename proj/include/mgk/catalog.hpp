#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgk/congruence.hpp"
#include "mgk/graph.hpp"
#include "mgk/refine.hpp"
#include "mgk/rigidity.hpp"
#include "mgk/verify.hpp"

namespace mgk {

// One verified, refined graph in the catalog. The id is the source file
// stem plus the component index in discovery order, e.g. "fig09/0". Figure
// drawings are not labeled in the sources, so discovery order may differ
// from any published enumeration of the same examples.
struct CatalogEntry {
    std::string id;
    Graph graph; // normalized and refined
    VerificationReport verification;
    RigidityReport rigidity;
    RefinementTrace refinement;
    std::optional<double> degree2_distance;
};

// What the manifest says a figure should contain.
struct FigureExpectation {
    int examples = 0;
    int vertices = 0;
    std::string regularity;
};

// Per-source-file outcome, including the caption comparison.
struct FigureOutcome {
    std::string stem;
    std::vector<int> component_vertices; // per component, discovery order
    std::optional<FigureExpectation> expected;
    // False when the manifest expectation exists and the component count,
    // any vertex count, or any regularity class contradicts it.
    bool caption_match = true;
    std::vector<std::string> errors; // pipeline failures for this file
};

struct CatalogSummary {
    std::vector<CatalogEntry> entries;
    std::vector<FigureOutcome> figures;
    std::vector<CongruenceClass> classes;
    // regularity name -> vertex count -> number of congruence classes
    std::map<std::string, std::map<int, int>> computed_tallies;
    // Reference tallies of known examples (from the manifest), same shape.
    std::map<std::string, std::map<int, int>> expected_tallies;
    bool any_failure = false; // verification failure or file error
};

// Ingests one figure source: extract segments, unify endpoints, split into
// components, then per component normalize (median edge length), refine,
// verify (length 1e-9, separation 1e-6), analyze rigidity. Throws on
// ingest-level failures; per-component refine/verify outcomes land in the
// entries.
std::vector<CatalogEntry> catalog_figure_text(const std::string& stem,
                                              const std::string& text);

// Runs the pipeline over every figure source (.tikz/.tex/.txt) and MGF file
// in the directory, in filename order, reading expectations from
// manifest.json when present. MGF inputs are assumed normalized and skip
// the scale estimate.
CatalogSummary build_catalog(const std::string& directory);

// Deterministic JSON document for the summary (trailing newline included).
std::string catalog_json(const CatalogSummary& summary);

// Human-readable comparison table: vertex counts as columns, expected vs
// computed tallies, "-" marking counts with no embedded coordinate data,
// "!" marking embedded rows that disagree.
std::string catalog_table(const CatalogSummary& summary);

} // namespace mgk
