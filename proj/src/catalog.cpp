#include "mgk/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mgk/errors.hpp"
#include "mgk/ingest.hpp"
#include "mgk/mgf.hpp"
#include "mgk/report.hpp"

namespace fs = std::filesystem;

namespace mgk {

namespace {

const VerificationPolicy kPostRefinePolicy{1e-9, 1e-6, true};

CatalogEntry analyze_component(const std::string& id, const Graph& refined,
                               const RefinementTrace& trace) {
    CatalogEntry entry;
    entry.id = id;
    entry.graph = refined;
    entry.refinement = trace;
    entry.verification = verify_matchstick(refined, kPostRefinePolicy);
    entry.rigidity = analyze_rigidity(refined);
    if (entry.verification.regularity.tag ==
            RegularityClass::Tag::TwoFourRegular &&
        entry.verification.regularity.degree2_count == 2) {
        entry.degree2_distance = degree2_distance(refined);
    }
    return entry;
}

std::map<std::string, FigureExpectation> read_manifest_figures(
    const nlohmann::json& manifest) {
    std::map<std::string, FigureExpectation> out;
    if (!manifest.contains("figures")) return out;
    for (const auto& [stem, entry] : manifest.at("figures").items()) {
        FigureExpectation exp;
        exp.examples = entry.at("examples").get<int>();
        exp.vertices = entry.at("vertices").get<int>();
        exp.regularity = entry.at("regularity").get<std::string>();
        out[stem] = exp;
    }
    return out;
}

std::map<std::string, std::map<int, int>> read_manifest_tallies(
    const nlohmann::json& manifest) {
    std::map<std::string, std::map<int, int>> out;
    if (!manifest.contains("known_example_tallies")) return out;
    for (const auto& [cls, counts] :
         manifest.at("known_example_tallies").items()) {
        for (const auto& [vertices, tally] : counts.items()) {
            out[cls][std::stoi(vertices)] = tally.get<int>();
        }
    }
    return out;
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>{});
}

} // namespace

std::vector<CatalogEntry> catalog_figure_text(const std::string& stem,
                                              const std::string& text) {
    auto segments = extract_segments(text);
    if (segments.empty()) {
        throw Error("no segments found in " + stem);
    }
    Graph whole = unify_endpoints(segments);
    auto components = connected_components(whole);
    std::vector<CatalogEntry> entries;
    entries.reserve(components.size());
    for (size_t k = 0; k < components.size(); ++k) {
        Graph normalized =
            normalize(components[k], estimate_scale(components[k]));
        auto [refined, trace] = refine(normalized);
        entries.push_back(analyze_component(stem + "/" + std::to_string(k),
                                            refined, trace));
    }
    return entries;
}

CatalogSummary build_catalog(const std::string& directory) {
    CatalogSummary summary;

    std::map<std::string, FigureExpectation> expectations;
    fs::path manifest_path = fs::path(directory) / "manifest.json";
    if (fs::exists(manifest_path)) {
        nlohmann::json manifest =
            nlohmann::json::parse(read_text_file(manifest_path));
        expectations = read_manifest_figures(manifest);
        summary.expected_tallies = read_manifest_tallies(manifest);
    }

    std::vector<fs::path> sources;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".tikz" || ext == ".tex" || ext == ".txt" ||
            ext == ".mgf") {
            sources.push_back(entry.path());
        }
    }
    std::sort(sources.begin(), sources.end());

    for (const fs::path& path : sources) {
        FigureOutcome outcome;
        outcome.stem = path.stem().string();
        if (auto it = expectations.find(outcome.stem); it != expectations.end()) {
            outcome.expected = it->second;
        }
        try {
            std::vector<CatalogEntry> entries;
            if (path.extension() == ".mgf") {
                Graph g = read_mgf_file(path.string());
                auto components = connected_components(g);
                for (size_t k = 0; k < components.size(); ++k) {
                    auto [refined, trace] = refine(components[k]);
                    entries.push_back(analyze_component(
                        outcome.stem + "/" + std::to_string(k), refined,
                        trace));
                }
            } else {
                entries = catalog_figure_text(outcome.stem,
                                              read_text_file(path));
            }
            for (CatalogEntry& entry : entries) {
                outcome.component_vertices.push_back(entry.graph.vertex_count());
                if (!entry.verification.pass) {
                    summary.any_failure = true;
                    for (const std::string& reason :
                         entry.verification.failures) {
                        outcome.errors.push_back(entry.id + ": " + reason);
                    }
                }
                summary.entries.push_back(std::move(entry));
            }
        } catch (const Error& e) {
            outcome.errors.push_back(e.what());
            summary.any_failure = true;
        }
        if (outcome.expected) {
            const FigureExpectation& exp = *outcome.expected;
            outcome.caption_match =
                outcome.errors.empty() &&
                static_cast<int>(outcome.component_vertices.size()) ==
                    exp.examples &&
                std::all_of(outcome.component_vertices.begin(),
                            outcome.component_vertices.end(),
                            [&](int v) { return v == exp.vertices; });
            for (const CatalogEntry& entry : summary.entries) {
                if (entry.id.starts_with(outcome.stem + "/") &&
                    regularity_name(entry.verification.regularity) !=
                        exp.regularity) {
                    outcome.caption_match = false;
                }
            }
        }
        summary.figures.push_back(std::move(outcome));
    }

    // Dedup over all entries, then tally classes by the representative's
    // regularity and vertex count.
    std::vector<std::pair<std::string, const Graph*>> dedup_input;
    dedup_input.reserve(summary.entries.size());
    for (const CatalogEntry& entry : summary.entries) {
        dedup_input.emplace_back(entry.id, &entry.graph);
    }
    summary.classes = dedup(dedup_input);
    for (const CongruenceClass& cls : summary.classes) {
        for (const CatalogEntry& entry : summary.entries) {
            if (entry.id == cls.representative) {
                summary.computed_tallies[regularity_name(
                    entry.verification.regularity)][entry.graph.vertex_count()]++;
                break;
            }
        }
    }
    return summary;
}

std::string catalog_json(const CatalogSummary& summary) {
    JsonWriter w;
    w.begin_object();

    w.key("graphs").begin_array();
    for (const CatalogEntry& entry : summary.entries) {
        ReportRecord rec = make_record(entry.id, entry.graph);
        fill_verification(rec, entry.verification);
        fill_rigidity(rec, entry.rigidity);
        rec.refinement = entry.refinement;
        rec.degree2_distance = entry.degree2_distance;
        write_record(w, rec);
    }
    w.end_array();

    w.key("figures").begin_array();
    for (const FigureOutcome& fig : summary.figures) {
        w.begin_object();
        w.key("id").value(fig.stem);
        w.key("component_vertices").begin_array();
        for (int v : fig.component_vertices) w.value(v);
        w.end_array();
        w.key("expected");
        if (fig.expected) {
            w.begin_object();
            w.key("examples").value(fig.expected->examples);
            w.key("vertices").value(fig.expected->vertices);
            w.key("regularity").value(fig.expected->regularity);
            w.end_object();
        } else {
            w.null();
        }
        w.key("caption_match").value(fig.caption_match);
        w.key("errors").begin_array();
        for (const std::string& err : fig.errors) w.value(err);
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.key("classes").begin_array();
    for (const CongruenceClass& cls : summary.classes) {
        w.begin_object();
        w.key("representative").value(cls.representative);
        w.key("members").begin_array();
        for (const std::string& member : cls.members) w.value(member);
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.key("tallies").begin_object();
    std::set<std::string> class_names;
    for (const auto& [name, _] : summary.expected_tallies)
        class_names.insert(name);
    for (const auto& [name, _] : summary.computed_tallies)
        class_names.insert(name);
    for (const std::string& name : class_names) {
        w.key(name).begin_array();
        std::set<int> vertex_counts;
        if (auto it = summary.expected_tallies.find(name);
            it != summary.expected_tallies.end()) {
            for (const auto& [v, _] : it->second) vertex_counts.insert(v);
        }
        if (auto it = summary.computed_tallies.find(name);
            it != summary.computed_tallies.end()) {
            for (const auto& [v, _] : it->second) vertex_counts.insert(v);
        }
        for (int v : vertex_counts) {
            w.begin_object();
            w.key("vertices").value(v);
            const int* expected = nullptr;
            const int* computed = nullptr;
            if (auto it = summary.expected_tallies.find(name);
                it != summary.expected_tallies.end()) {
                if (auto jt = it->second.find(v); jt != it->second.end()) {
                    expected = &jt->second;
                }
            }
            if (auto it = summary.computed_tallies.find(name);
                it != summary.computed_tallies.end()) {
                if (auto jt = it->second.find(v); jt != it->second.end()) {
                    computed = &jt->second;
                }
            }
            w.key("expected");
            expected ? w.value(*expected) : w.null();
            w.key("embedded").value(computed != nullptr);
            w.key("computed");
            computed ? w.value(*computed) : w.null();
            w.end_object();
        }
        w.end_array();
    }
    w.end_object();

    w.key("any_failure").value(summary.any_failure);
    w.end_object();
    return w.str() + "\n";
}

std::string catalog_table(const CatalogSummary& summary) {
    std::ostringstream out;
    out << "catalog: " << summary.entries.size() << " graphs in "
        << summary.figures.size() << " files, " << summary.classes.size()
        << " congruence classes\n";
    for (const FigureOutcome& fig : summary.figures) {
        out << "  " << fig.stem << ": " << fig.component_vertices.size()
            << " component(s), vertices";
        for (int v : fig.component_vertices) out << " " << v;
        if (fig.expected) {
            out << " | caption: " << fig.expected->examples << " x "
                << fig.expected->vertices << " ("
                << fig.expected->regularity << ") "
                << (fig.caption_match ? "MATCH" : "MISMATCH");
        }
        for (const std::string& err : fig.errors) {
            out << "\n    error: " << err;
        }
        out << "\n";
    }

    std::set<std::string> class_names;
    for (const auto& [name, _] : summary.expected_tallies)
        class_names.insert(name);
    for (const auto& [name, _] : summary.computed_tallies)
        class_names.insert(name);
    for (const std::string& name : class_names) {
        std::set<int> vertex_counts;
        if (auto it = summary.expected_tallies.find(name);
            it != summary.expected_tallies.end()) {
            for (const auto& [v, _] : it->second) vertex_counts.insert(v);
        }
        if (auto it = summary.computed_tallies.find(name);
            it != summary.computed_tallies.end()) {
            for (const auto& [v, _] : it->second) vertex_counts.insert(v);
        }
        if (vertex_counts.empty()) continue;
        out << "\n" << name << " examples by vertex count ('-' = not embedded"
            << ", '!' = differs from expected)\n";
        std::ostringstream vertices_row, expected_row, computed_row;
        vertices_row << "  vertices";
        expected_row << "  expected";
        computed_row << "  computed";
        for (int v : vertex_counts) {
            const int* expected = nullptr;
            const int* computed = nullptr;
            if (auto it = summary.expected_tallies.find(name);
                it != summary.expected_tallies.end()) {
                if (auto jt = it->second.find(v); jt != it->second.end())
                    expected = &jt->second;
            }
            if (auto it = summary.computed_tallies.find(name);
                it != summary.computed_tallies.end()) {
                if (auto jt = it->second.find(v); jt != it->second.end())
                    computed = &jt->second;
            }
            vertices_row << "  " << std::setw(4) << v;
            expected_row << "  " << std::setw(4);
            if (expected) expected_row << *expected; else expected_row << "?";
            computed_row << "  " << std::setw(4);
            if (!computed) {
                computed_row << "-";
            } else if (expected && *expected != *computed) {
                computed_row << (std::to_string(*computed) + "!");
            } else {
                computed_row << *computed;
            }
        }
        out << vertices_row.str() << "\n"
            << expected_row.str() << "\n"
            << computed_row.str() << "\n";
    }
    return out.str();
}

} // namespace mgk
