// mgk: matchstick-graph toolkit. Ingests figure coordinate data, verifies
// the matchstick property, refines coordinates to exact unit lengths,
// analyzes rigidity, dedups congruent copies, renders SVG, and reproduces
// the known-example catalog for an embedded corpus.
//
// Exit codes: 0 success, 1 clean negative result (verification failed,
// refinement did not converge, catalog found failures), 2 operational error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mgk/catalog.hpp"
#include "mgk/congruence.hpp"
#include "mgk/errors.hpp"
#include "mgk/graph.hpp"
#include "mgk/ingest.hpp"
#include "mgk/mgf.hpp"
#include "mgk/refine.hpp"
#include "mgk/render.hpp"
#include "mgk/report.hpp"
#include "mgk/rigidity.hpp"
#include "mgk/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw mgk::Error("cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>{});
}

// Writes to `out_path` when given, else to standard output.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw mgk::Error("cannot open " + out_path + " for writing");
    }
    out << text;
    if (!out) {
        throw mgk::Error("failed writing " + out_path);
    }
}

std::optional<double> two_degree2_distance(const mgk::Graph& g) {
    int deg2 = 0;
    for (int d : mgk::degree_sequence(g)) {
        if (d == 2) ++deg2;
    }
    if (deg2 != 2) return std::nullopt;
    return mgk::degree2_distance(g);
}

int cmd_parse(const std::string& input, const std::string& format,
              const std::string& out_dir, double tol, bool raw) {
    std::vector<mgk::Graph> components;
    bool as_mgf = format == "mgf" ||
                  (format.empty() && fs::path(input).extension() == ".mgf");
    if (as_mgf) {
        components = mgk::connected_components(mgk::read_mgf_file(input));
    } else {
        mgk::IngestOptions opts;
        opts.merge_tolerance = tol;
        auto segments = mgk::extract_segments(read_text_file(input));
        if (segments.empty()) {
            throw mgk::Error("no segments found in " + input);
        }
        components =
            mgk::connected_components(mgk::unify_endpoints(segments, opts));
    }
    std::string stem = fs::path(input).stem().string();
    std::cout << components.size() << " component(s)\n";
    for (size_t k = 0; k < components.size(); ++k) {
        mgk::Graph g = components[k];
        if (!raw && !as_mgf) {
            g = mgk::normalize(g, mgk::estimate_scale(g));
        }
        fs::path out_path =
            fs::path(out_dir) / (stem + "-" + std::to_string(k) + ".mgf");
        mgk::write_mgf_file(g, out_path.string());
        std::cout << out_path.string() << ": " << g.vertex_count()
                  << " vertices, " << g.edge_count() << " edges\n";
    }
    return kExitSuccess;
}

int cmd_verify(const std::string& input, double tol, double delta,
               const std::string& out_path) {
    mgk::Graph g = mgk::read_mgf_file(input);
    mgk::VerificationPolicy policy;
    policy.length_tolerance = tol;
    policy.separation_delta = delta;
    auto report = mgk::verify_matchstick(g, policy);

    mgk::ReportRecord rec =
        mgk::make_record(fs::path(input).stem().string(), g);
    mgk::fill_verification(rec, report);
    rec.degree2_distance = two_degree2_distance(g);
    emit(mgk::record_json(rec), out_path);
    if (!report.pass) {
        for (const std::string& reason : report.failures) {
            std::cerr << "fail: " << reason << "\n";
        }
        return kExitNegative;
    }
    return kExitSuccess;
}

int cmd_refine(const std::string& input, double target,
               const std::string& out_path, const std::string& mgf_out) {
    mgk::Graph g = mgk::read_mgf_file(input);
    std::string stem = fs::path(input).stem().string();
    mgk::RefineOptions opts;
    opts.residual_target = target;

    mgk::ReportRecord rec = mgk::make_record(stem, g);
    mgk::Graph refined;
    bool converged = true;
    try {
        auto [result, trace] = mgk::refine(g, opts);
        refined = std::move(result);
        rec.refinement = trace;
    } catch (const mgk::DidNotConverge& e) {
        std::cerr << "fail: " << e.what() << "\n";
        refined = e.best_graph;
        rec.refinement = e.trace;
        converged = false;
    }
    mgk::fill_verification(rec, mgk::verify_matchstick(refined));
    rec.degree2_distance = two_degree2_distance(refined);
    emit(mgk::record_json(rec), out_path);

    std::string mgf_path = mgf_out.empty()
                               ? (fs::path(input).parent_path() /
                                  (stem + "-refined.mgf"))
                                     .string()
                               : mgf_out;
    mgk::write_mgf_file(refined, mgf_path);
    return converged ? kExitSuccess : kExitNegative;
}

int cmd_rigidity(const std::string& input, const std::string& out_path) {
    mgk::Graph g = mgk::read_mgf_file(input);
    auto report = mgk::analyze_rigidity(g);
    mgk::ReportRecord rec =
        mgk::make_record(fs::path(input).stem().string(), g);
    mgk::fill_rigidity(rec, report);
    emit(mgk::record_json(rec), out_path);
    return kExitSuccess;
}

int cmd_dedup(const std::vector<std::string>& paths, double tol,
              const std::string& out_path) {
    std::vector<mgk::Graph> graphs;
    graphs.reserve(paths.size());
    for (const std::string& path : paths) {
        graphs.push_back(mgk::read_mgf_file(path));
    }
    std::vector<std::pair<std::string, const mgk::Graph*>> entries;
    entries.reserve(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) {
        entries.emplace_back(paths[i], &graphs[i]);
    }
    auto classes = mgk::dedup(entries, tol);

    mgk::JsonWriter w;
    w.begin_object();
    w.key("class_count").value(static_cast<int>(classes.size()));
    w.key("classes").begin_array();
    for (const auto& cls : classes) {
        w.begin_object();
        w.key("representative").value(cls.representative);
        w.key("members").begin_array();
        for (const std::string& member : cls.members) w.value(member);
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(w.str() + "\n", out_path);
    return kExitSuccess;
}

int cmd_render(const std::string& input, std::string out_path, double ppu,
               bool label_degrees) {
    mgk::Graph g = mgk::read_mgf_file(input);
    mgk::RenderOptions opts;
    opts.pixels_per_unit = ppu;
    opts.label_degrees = label_degrees;
    std::string svg = mgk::render_svg(g, opts);
    if (out_path.empty()) {
        out_path = fs::path(input).stem().string() + ".svg";
    }
    emit(svg, out_path);
    return kExitSuccess;
}

int cmd_catalog(std::string directory, const std::string& out_path,
                bool json_to_stdout) {
    if (directory.empty()) {
        if (const char* env = std::getenv("MGK_CORPUS")) {
            directory = env;
        } else {
            throw mgk::Error(
                "no corpus directory given and MGK_CORPUS is not set");
        }
    }
    if (!fs::is_directory(directory)) {
        throw mgk::Error(directory + " is not a directory");
    }
    mgk::CatalogSummary summary = mgk::build_catalog(directory);
    std::string json = mgk::catalog_json(summary);
    if (json_to_stdout) {
        std::cout << json;
    } else {
        std::cout << mgk::catalog_table(summary);
    }
    if (!out_path.empty()) {
        emit(json, out_path);
    }
    return summary.any_failure ? kExitNegative : kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchstick-graph toolkit"};
    app.require_subcommand(1);

    std::string input, out_path, mgf_out, format, directory;
    std::vector<std::string> paths;
    double merge_tol = 0.01, length_tol = 1e-3, delta = 1e-6;
    double residual_target = 1e-12, congruence_tol = 1e-6, ppu = 40.0;
    bool raw = false, label_degrees = false, json_flag = false;

    auto* parse = app.add_subcommand(
        "parse", "extract graphs from a figure source, one MGF per component");
    parse->add_option("input", input, "figure source or MGF file")->required();
    parse->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"tikz", "mgf"}));
    parse->add_option("--out", out_path, "output directory (default .)");
    parse->add_option("--tol", merge_tol,
                      "endpoint merge tolerance, raw units")->capture_default_str();
    parse->add_flag("--raw", raw, "keep raw coordinates (skip normalization)");

    auto* verify = app.add_subcommand("verify", "check the matchstick property");
    verify->add_option("input", input, "MGF file")->required();
    verify->add_option("--tol", length_tol, "unit-length tolerance")->capture_default_str();
    verify->add_option("--delta", delta, "minimum feature separation")->capture_default_str();
    verify->add_option("--out", out_path, "report file (default stdout)");
    verify->add_flag("--json", json_flag, "machine output (always on)");

    auto* refine = app.add_subcommand(
        "refine", "drive edge lengths to exact unit by least squares");
    refine->add_option("input", input, "MGF file")->required();
    refine->add_option("--tol", residual_target,
                       "residual target on max |len^2 - 1|")->capture_default_str();
    refine->add_option("--out", out_path, "report file (default stdout)");
    refine->add_option("--mgf-out", mgf_out,
                       "refined MGF path (default <stem>-refined.mgf)");
    refine->add_flag("--json", json_flag, "machine output (always on)");

    auto* rigidity =
        app.add_subcommand("rigidity", "rank / degrees-of-freedom analysis");
    rigidity->add_option("input", input, "MGF file")->required();
    rigidity->add_option("--out", out_path, "report file (default stdout)");
    rigidity->add_flag("--json", json_flag, "machine output (always on)");

    auto* dedup =
        app.add_subcommand("dedup", "group congruent graphs into classes");
    dedup->add_option("inputs", paths, "MGF files")->required();
    dedup->add_option("--tol", congruence_tol,
                      "max per-vertex alignment error")->capture_default_str();
    dedup->add_option("--out", out_path, "report file (default stdout)");
    dedup->add_flag("--json", json_flag, "machine output (always on)");

    auto* render = app.add_subcommand("render", "render an MGF file as SVG");
    render->add_option("input", input, "MGF file")->required();
    render->add_option("--out", out_path, "SVG path (default <stem>.svg)");
    render->add_option("--ppu", ppu, "pixels per unit")->capture_default_str();
    render->add_flag("--label-degrees", label_degrees,
                     "mark vertices, degree-2 in a distinct color");

    auto* catalog = app.add_subcommand(
        "catalog", "run the full pipeline over a corpus directory");
    catalog->add_option("directory", directory,
                        "corpus directory (default $MGK_CORPUS)");
    catalog->add_option("--out", out_path, "also write the JSON summary here");
    catalog->add_flag("--json", json_flag,
                      "print JSON instead of the text table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse->parsed()) {
            return cmd_parse(input, format,
                             out_path.empty() ? "." : out_path, merge_tol,
                             raw);
        }
        if (verify->parsed()) {
            return cmd_verify(input, length_tol, delta, out_path);
        }
        if (refine->parsed()) {
            return cmd_refine(input, residual_target, out_path, mgf_out);
        }
        if (rigidity->parsed()) {
            return cmd_rigidity(input, out_path);
        }
        if (dedup->parsed()) {
            return cmd_dedup(paths, congruence_tol, out_path);
        }
        if (render->parsed()) {
            return cmd_render(input, out_path, ppu, label_degrees);
        }
        if (catalog->parsed()) {
            return cmd_catalog(directory, out_path, json_flag);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
