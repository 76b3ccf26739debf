// holefill_main.cpp — command line front end.
//
// Subcommands: inspect, fill, eval, punch, bench. stdout carries data
// (reports, JSON, CSV), stderr carries logs. Exit codes: 0 success, 2 bad
// arguments or unreadable input, 3 when some holes could not be filled
// (the partial mesh is still written).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "holefill/config.hpp"
#include "holefill/errors.hpp"
#include "holefill/fill.hpp"
#include "holefill/harness.hpp"
#include "holefill/hole.hpp"
#include "holefill/mesh.hpp"
#include "holefill/mesh_io.hpp"
#include "holefill/metrics.hpp"

using namespace holefill;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Shared option blocks. Each subcommand gets its own instance; CLI11 counts
// per-option occurrences, so explicitly passed flags override the config file.

struct ConfigFlags {
    std::string config_path;
    double small_factor = 0;
    double medium_factor = 0;
    double fracture_cos = 0;
    double merge_factor = 0;
    int smooth_iterations = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    bool open_surface = false;
    bool vertices_only = false;

    CLI::Option* small_opt = nullptr;
    CLI::Option* medium_opt = nullptr;
    CLI::Option* fracture_opt = nullptr;
    CLI::Option* merge_opt = nullptr;
    CLI::Option* smooth_opt = nullptr;
    CLI::Option* samples_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config_path,
                       "key=value config file; explicit flags override it")
            ->check(CLI::ExistingFile);
        small_opt = cmd.add_option("--small-factor", small_factor,
                                   "d_H/ds ceiling for small holes");
        medium_opt = cmd.add_option("--medium-factor", medium_factor,
                                    "d_H/ds ceiling for medium holes");
        fracture_opt = cmd.add_option("--fracture-cos", fracture_cos,
                                      "normal-agreement cosine below which a boundary "
                                      "vertex is a fracture point");
        smooth_opt = cmd.add_option("--smooth-iterations", smooth_iterations,
                                    "umbrella smoothing passes on large-hole patches");
        merge_opt = cmd.add_option("--merge-factor", merge_factor,
                                   "ring merge radius as a fraction of ds");
        cmd.add_flag("--open-surface", open_surface,
                     "treat the longest boundary loop as an intended rim, not a hole");
        samples_opt = cmd.add_option("--samples", samples,
                                     "total surface sample budget for distance reports");
        cmd.add_flag("--vertices-only", vertices_only,
                     "sample mesh vertices only, no interior face samples");
        seed_opt = cmd.add_option("--seed", seed, "seed for surface sampling");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (small_opt->count()) cfg.small_factor = small_factor;
        if (medium_opt->count()) cfg.medium_factor = medium_factor;
        if (fracture_opt->count()) cfg.fracture_cos = fracture_cos;
        if (smooth_opt->count()) cfg.smooth_iterations = smooth_iterations;
        if (merge_opt->count()) cfg.ring_merge_radius_factor = merge_factor;
        if (open_surface) cfg.open_surface = true;
        if (samples_opt->count()) {
            if (samples <= 0) throw ConfigError("--samples must be a positive budget");
            cfg.sampling.total_budget = static_cast<long>(samples);
        }
        if (vertices_only) cfg.sampling.mode = SamplingMode::VerticesOnly;
        if (seed_opt->count()) cfg.seed = seed;
        cfg.validate();
        return cfg;
    }
};

struct ShapeFlags {
    std::string shape = "sphere";
    int faces = 50000;
    double radius = 1.0;
    double major = 2.0;
    double minor = 0.7;
    double width = 4.0;
    double depth = 4.0;
    double curvature = 0.25;
    double dihedral = 120.0;

    CLI::Option* dihedral_opt = nullptr;

    void attach(CLI::App& cmd) {
        cmd.add_option("--shape", shape, "synthetic shape to generate")
            ->check(CLI::IsMember(
                {"sphere", "torus", "plane", "saddle", "crease", "two-crease"}));
        cmd.add_option("--faces", faces, "approximate face budget")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--shape-radius", radius, "sphere radius");
        cmd.add_option("--major-radius", major, "torus center-circle radius");
        cmd.add_option("--minor-radius", minor, "torus tube radius");
        cmd.add_option("--width", width, "sheet extent along x");
        cmd.add_option("--depth", depth, "sheet extent along y");
        cmd.add_option("--saddle-curvature", curvature, "saddle z = c*(x^2 - y^2)");
        dihedral_opt = cmd.add_option("--dihedral", dihedral,
                                      "fold angle in degrees for crease shapes");
    }

    SyntheticShape resolve() const {
        SyntheticShape s;
        if (shape == "sphere") s.kind = ShapeKind::Sphere;
        else if (shape == "torus") s.kind = ShapeKind::Torus;
        else if (shape == "plane") s.kind = ShapeKind::Plane;
        else if (shape == "saddle") s.kind = ShapeKind::Saddle;
        else if (shape == "crease") s.kind = ShapeKind::Crease;
        else if (shape == "two-crease") s.kind = ShapeKind::TwoCrease;
        else throw ConfigError("unknown shape: " + shape);
        s.target_faces = faces;
        s.radius = radius;
        s.major_radius = major;
        s.minor_radius = minor;
        s.width = width;
        s.depth = depth;
        s.saddle_curvature = curvature;
        s.dihedral_deg = dihedral;
        return s;
    }
};

struct PunchFlags {
    std::vector<std::string> centers;
    std::vector<double> radii;
    bool on_crease = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("--center", centers, "punch center as x,y,z (repeatable)");
        cmd.add_option("--radius", radii, "punch radius, one per center (repeatable)");
        cmd.add_flag("--on-crease", on_crease,
                     "preset for crease shapes: one r=0.7 punch on the fold midpoint, "
                     "dihedral defaults to 90");
    }

    // Applies the --on-crease preset. The sharper default fold is what makes
    // the punched rim split at the fold; 120-degree creases read as smooth to
    // the default fracture threshold.
    void apply_preset(ShapeFlags& shape) const {
        if (on_crease && !shape.dihedral_opt->count()) shape.dihedral = 90.0;
    }

    PunchSpec resolve(const SyntheticShape& shape) const {
        PunchSpec spec;
        for (const std::string& text : centers) {
            Vec3 c;
            char tail = 0;
            if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &c.x, &c.y, &c.z, &tail) != 3)
                throw ConfigError("--center expects x,y,z, got '" + text + "'");
            spec.centers.push_back(c);
        }
        spec.radii = radii;
        if (spec.centers.empty()) {
            if (on_crease) {
                spec.centers = {{0, 0, 0}};
                spec.radii = {0.7};
            } else {
                spec = default_punch(shape);
            }
        }
        if (spec.centers.size() > 1) spec.mode = PunchMode::MultiLobe;
        return spec;
    }

    // One shape-appropriate punch for invocations that give no --center:
    // sphere cap at the pole, torus bite on the outer equator, sheet hole
    // at the origin (which sits on the fold for crease shapes).
    static PunchSpec default_punch(const SyntheticShape& shape) {
        PunchSpec spec;
        switch (shape.kind) {
            case ShapeKind::Sphere:
                spec.centers = {{0, 0, shape.radius}};
                spec.radii = {0.25 * shape.radius};
                break;
            case ShapeKind::Torus:
                spec.centers = {{shape.major_radius + shape.minor_radius, 0, 0}};
                spec.radii = {0.55 * shape.minor_radius};
                break;
            default:
                spec.centers = {{0, 0, 0}};
                spec.radii = {0.15 * std::min(shape.width, shape.depth)};
                break;
        }
        return spec;
    }
};

// ---------------------------------------------------------------------------
// Helpers.

// read_mesh with the path folded into the error message; ParseError keeps
// its 1-based line number visible.
TriangleMesh load_mesh(const std::string& path) {
    try {
        return read_mesh(path);
    } catch (const ParseError& e) {
        throw IOError(path + ":" + std::to_string(e.line) + ": " + e.what());
    } catch (const MeshError& e) {
        throw IOError(path + ": " + e.what());
    }
}

// Output format from the extension alone. detect_format probes .ply files
// for their header, which cannot work on a path we are about to create.
MeshFileFormat output_format(const std::string& path, bool ascii) {
    const std::size_t dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == "obj") return MeshFileFormat::Obj;
    if (ext == "ply") return ascii ? MeshFileFormat::PlyAscii : MeshFileFormat::PlyBinaryLE;
    throw ConfigError("unsupported output extension on '" + path + "' (expect .obj or .ply)");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IOError("failed writing '" + path + "'");
}

ordered_json fill_report_json(const FillReport& report) {
    ordered_json doc;
    doc["holes"] = ordered_json::array();
    for (const FillRecord& rec : report.holes) {
        ordered_json h;
        h["hole"] = rec.hole;
        h["class"] = hole_class_name(rec.hole_class);
        h["method"] = rec.method;
        h["sub_holes"] = rec.sub_holes;
        h["new_vertices"] = rec.new_vertices;
        h["new_faces"] = rec.new_faces;
        h["runtime_ms"] = rec.runtime_ms;
        h["ok"] = rec.ok;
        if (!rec.ok) h["error"] = rec.error;
        doc["holes"].push_back(h);
    }
    doc["total_new_vertices"] = report.total_new_vertices;
    doc["total_new_faces"] = report.total_new_faces;
    doc["failures"] = report.failures;
    return doc;
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_inspect(const std::string& input, bool as_json, const RunConfig& cfg) {
    const TriangleMesh mesh = load_mesh(input);
    const std::vector<BoundaryLoop> loops = mesh.boundary_loops();

    ordered_json doc;
    doc["path"] = input;
    doc["vertices"] = mesh.vertex_count();
    doc["faces"] = mesh.face_count();
    doc["hole_count"] = loops.size();
    doc["holes"] = ordered_json::array();

    if (!as_json)
        std::printf("%zu hole%s\n", loops.size(), loops.size() == 1 ? "" : "s");

    for (std::size_t i = 0; i < loops.size(); ++i) {
        const Hole hole = analyze_hole(mesh, loops[i]);
        const HoleClass cls = classify_hole(hole, cfg.small_factor, cfg.medium_factor);
        const std::size_t fractures = detect_fracture_points(hole, cfg.fracture_cos).size();
        if (as_json) {
            ordered_json rec;
            rec["index"] = i;
            rec["boundary_vertices"] = hole.loop.size();
            rec["ds"] = hole.ds;
            rec["d_H"] = hole.d_H;
            rec["ratio"] = hole.d_H / hole.ds;
            rec["class"] = hole_class_name(cls);
            rec["fracture_points"] = fractures;
            doc["holes"].push_back(rec);
        } else {
            std::printf(
                "hole %zu: %zu boundary vertices, ds=%.6g, d_H=%.6g (%.3g ds), "
                "class=%s, fracture points=%zu\n",
                i, loops[i].size(), hole.ds, hole.d_H, hole.d_H / hole.ds,
                hole_class_name(cls), fractures);
        }
    }
    if (as_json) std::printf("%s\n", doc.dump(2).c_str());
    return 0;
}

int cmd_fill(const std::string& input, const std::string& output,
             const std::string& method, const std::string& report_path, bool ascii,
             bool as_json, const RunConfig& cfg) {
    TriangleMesh mesh = load_mesh(input);
    const FillStrategy strategy = method == "baseline" ? FillStrategy::EarClipOnly
                                : method == "centroid" ? FillStrategy::CentroidOnly
                                                       : FillStrategy::Adaptive;

    const FillReport report = fill_all_holes(mesh, cfg, strategy);
    write_mesh(mesh, output, output_format(output, ascii));

    for (const FillRecord& rec : report.holes) {
        if (rec.ok)
            std::fprintf(stderr,
                         "hole %d: %s, method=%s, %d sub-hole%s, +%d vertices, "
                         "+%d faces, %.3f ms\n",
                         rec.hole, hole_class_name(rec.hole_class), rec.method.c_str(),
                         rec.sub_holes, rec.sub_holes == 1 ? "" : "s", rec.new_vertices,
                         rec.new_faces, rec.runtime_ms);
        else
            std::fprintf(stderr, "hole %d: FAILED after %.3f ms: %s\n", rec.hole,
                         rec.runtime_ms, rec.error.c_str());
    }
    std::fprintf(stderr,
                 "filled %zu/%zu holes, +%d vertices, +%d faces, %zu boundary "
                 "loop%s remain, wrote %s\n",
                 report.holes.size() - static_cast<std::size_t>(report.failures),
                 report.holes.size(), report.total_new_vertices, report.total_new_faces,
                 mesh.boundary_loops().size(),
                 mesh.boundary_loops().size() == 1 ? "" : "s", output.c_str());

    if (as_json || !report_path.empty()) {
        ordered_json doc = fill_report_json(report);
        doc["input"] = input;
        doc["output"] = output;
        if (as_json) std::printf("%s\n", doc.dump(2).c_str());
        if (!report_path.empty()) write_text_file(report_path, doc.dump(2) + "\n");
    }
    return report.failures == 0 ? 0 : 3;
}

int cmd_eval(const std::string& path_a, const std::string& path_b, bool as_json,
             const RunConfig& cfg) {
    const TriangleMesh a = load_mesh(path_a);
    const TriangleMesh b = load_mesh(path_b);
    const DistanceReport r = hausdorff_report(a, b, cfg.sampling, cfg.seed);

    if (as_json) {
        ordered_json doc;
        doc["a"] = path_a;
        doc["b"] = path_b;
        doc["delta_max"] = r.delta_max;
        doc["delta_avg"] = r.delta_avg;
        doc["bbox_diagonal"] = r.bbox_diagonal;
        doc["delta_max_normalized"] = r.delta_max_normalized;
        doc["delta_avg_normalized"] = r.delta_avg_normalized;
        doc["forward"] = {{"max", r.forward.max},
                          {"mean", r.forward.mean},
                          {"samples", r.forward.sample_count}};
        doc["backward"] = {{"max", r.backward.max},
                           {"mean", r.backward.mean},
                           {"samples", r.backward.sample_count}};
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        std::printf("delta_max            %.17g\n", r.delta_max);
        std::printf("delta_avg            %.17g\n", r.delta_avg);
        std::printf("bbox_diagonal        %.17g\n", r.bbox_diagonal);
        std::printf("delta_max_normalized %.17g\n", r.delta_max_normalized);
        std::printf("delta_avg_normalized %.17g\n", r.delta_avg_normalized);
        std::printf("forward   max %.17g  mean %.17g  samples %zu\n", r.forward.max,
                    r.forward.mean, r.forward.sample_count);
        std::printf("backward  max %.17g  mean %.17g  samples %zu\n", r.backward.max,
                    r.backward.mean, r.backward.sample_count);
    }
    return 0;
}

int cmd_punch(const ShapeFlags& shape_flags, const PunchFlags& punch_flags,
              const std::string& output, const std::string& save_original, bool ascii,
              bool as_json) {
    const SyntheticShape shape = shape_flags.resolve();
    const PunchSpec spec = punch_flags.resolve(shape);

    const TriangleMesh original = generate(shape);
    const PunchResult result = punch(original, spec);

    write_mesh(result.mesh, output, output_format(output, ascii));
    if (!save_original.empty())
        write_mesh(original, save_original, output_format(save_original, ascii));

    std::fprintf(stderr, "%s with %d faces: punched %zu sphere%s, wrote %s\n",
                 shape_kind_name(shape.kind), original.face_count(), spec.centers.size(),
                 spec.centers.size() == 1 ? "" : "s", output.c_str());

    if (as_json) {
        ordered_json doc;
        doc["shape"] = shape_kind_name(shape.kind);
        doc["faces"] = original.face_count();
        doc["removed_faces"] = result.removed_faces;
        doc["dropped_vertices"] = result.dropped_vertices;
        doc["new_loops"] = result.new_loops;
        doc["output"] = output;
        if (!save_original.empty()) doc["original"] = save_original;
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        std::printf("%d new loop%s, removed %d faces, dropped %d vertices\n",
                    result.new_loops, result.new_loops == 1 ? "" : "s",
                    result.removed_faces, result.dropped_vertices);
    }
    return 0;
}

int cmd_bench(const ShapeFlags& shape_flags, const PunchFlags& punch_flags,
              std::vector<std::string> methods, const std::string& csv_path, bool timing,
              const RunConfig& cfg) {
    const SyntheticShape shape = shape_flags.resolve();
    const PunchSpec spec = punch_flags.resolve(shape);

    if (std::find(methods.begin(), methods.end(), "all") != methods.end())
        methods = {kMethodBaseline, kMethodCentroid, kMethodSegmented};

    const std::vector<BenchmarkRow> rows = run_benchmark(shape, spec, methods, cfg, timing);
    const std::string csv = benchmark_csv(rows);
    std::fputs(csv.c_str(), stdout);
    std::fputs(benchmark_table(rows).c_str(), stderr);
    if (!csv_path.empty()) write_text_file(csv_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mesh hole inspection, filling, and evaluation on synthetic shapes"};
    app.require_subcommand(1);

    // inspect
    CLI::App* inspect = app.add_subcommand("inspect", "list boundary loops of a mesh");
    std::string inspect_input;
    bool inspect_json = false;
    ConfigFlags inspect_cfg;
    inspect->add_option("input", inspect_input, "mesh file (.obj or .ply)")->required();
    inspect->add_flag("--json", inspect_json, "machine-readable report on stdout");
    inspect_cfg.attach(*inspect);

    // fill
    CLI::App* fill = app.add_subcommand("fill", "fill every hole and write the result");
    std::string fill_input, fill_output, fill_method = "adaptive", fill_report;
    bool fill_ascii = false, fill_json = false;
    ConfigFlags fill_cfg;
    fill->add_option("input", fill_input, "mesh file (.obj or .ply)")->required();
    fill->add_option("output", fill_output, "path for the filled mesh")->required();
    fill->add_option("--method", fill_method,
                     "adaptive (default), baseline (ear clip only), or centroid")
        ->check(CLI::IsMember({"adaptive", "baseline", "centroid"}));
    fill->add_option("--report", fill_report, "write the fill report as JSON here");
    fill->add_flag("--ascii", fill_ascii, "write text PLY instead of binary");
    fill->add_flag("--json", fill_json, "print the fill report as JSON on stdout");
    fill_cfg.attach(*fill);

    // eval
    CLI::App* eval = app.add_subcommand("eval", "two-sided surface distance between meshes");
    std::string eval_a, eval_b;
    bool eval_json = false;
    ConfigFlags eval_cfg;
    eval->add_option("a", eval_a, "reference mesh; normalization uses its bbox diagonal")
        ->required();
    eval->add_option("b", eval_b, "mesh to compare")->required();
    eval->add_flag("--json", eval_json, "machine-readable report on stdout");
    eval_cfg.attach(*eval);

    // punch
    CLI::App* punch_cmd = app.add_subcommand("punch", "generate a shape and punch holes");
    ShapeFlags punch_shape;
    PunchFlags punch_punch;
    std::string punch_output, punch_original;
    bool punch_ascii = false, punch_json = false;
    punch_shape.attach(*punch_cmd);
    punch_punch.attach(*punch_cmd);
    punch_cmd->add_option("-o,--output", punch_output, "path for the punched mesh")
        ->required();
    punch_cmd->add_option("--save-original", punch_original,
                          "also write the unpunched shape here");
    punch_cmd->add_flag("--ascii", punch_ascii, "write text PLY instead of binary");
    punch_cmd->add_flag("--json", punch_json, "machine-readable summary on stdout");

    // bench
    CLI::App* bench = app.add_subcommand(
        "bench", "punch a synthetic shape, fill with each method, report distances");
    ShapeFlags bench_shape;
    PunchFlags bench_punch;
    std::vector<std::string> bench_methods = {"all"};
    std::string bench_csv;
    bool bench_timing = false;
    ConfigFlags bench_cfg;
    bench_shape.attach(*bench);
    bench_punch.attach(*bench);
    bench->add_option("--methods", bench_methods,
                      "fill methods to compare, or 'all' (baseline-closehole, "
                      "centroid-only, segmented-ring)")
        ->delimiter(',');
    bench->add_option("--csv", bench_csv, "also write the CSV to this path");
    bench->add_flag("--timing", bench_timing,
                    "record wall-clock fill times (off keeps CSV bytes reproducible)");
    bench_cfg.attach(*bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inspect) return cmd_inspect(inspect_input, inspect_json, inspect_cfg.resolve());
        if (*fill)
            return cmd_fill(fill_input, fill_output, fill_method, fill_report, fill_ascii,
                            fill_json, fill_cfg.resolve());
        if (*eval) return cmd_eval(eval_a, eval_b, eval_json, eval_cfg.resolve());
        if (*punch_cmd) {
            punch_punch.apply_preset(punch_shape);
            return cmd_punch(punch_shape, punch_punch, punch_output, punch_original,
                             punch_ascii, punch_json);
        }
        if (*bench) {
            bench_punch.apply_preset(bench_shape);
            return cmd_bench(bench_shape, bench_punch, bench_methods, bench_csv,
                             bench_timing, bench_cfg.resolve());
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
