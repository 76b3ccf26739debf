// harness.cpp — synthetic shapes, hole punching, and the punch-fill-measure
// benchmark. Resolution pickers scan for the face count nearest the target
// with the squarest cells, so requested sizes are hit deterministically.

#include "holefill/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <tuple>
#include <utility>

#include "holefill/errors.hpp"
#include "holefill/fill.hpp"
#include "holefill/metrics.hpp"

namespace holefill {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Picks `n` from [lo, hi] minimizing keys(n) lexicographically.
template <typename Keys>
int best_count(int lo, int hi, Keys&& keys) {
    int best = lo;
    auto best_key = keys(lo);
    for (int n = lo + 1; n <= hi; ++n) {
        auto key = keys(n);
        if (key < best_key) {
            best_key = key;
            best = n;
        }
    }
    return best;
}

TriangleMesh make_sphere(double radius, int target_faces) {
    // faces = 2*segs*(rings-1); cells squarest near segs = 2*rings.
    const int root = std::max(3, static_cast<int>(std::lround(std::sqrt(target_faces))));
    const int segs = best_count(
        std::max(3, root / 2), 2 * root, [&](int s) {
            const int r1 = std::max(2, static_cast<int>(std::lround(target_faces / (2.0 * s))));
            return std::make_tuple(std::abs(2 * s * r1 - target_faces), std::abs(s - 2 * r1), s);
        });
    const int rings = std::max(2, static_cast<int>(std::lround(target_faces / (2.0 * segs)))) + 1;

    std::vector<Vec3> v;
    v.push_back({0, 0, radius});
    for (int r = 1; r < rings; ++r) {
        const double th = kPi * r / rings;
        for (int s = 0; s < segs; ++s) {
            const double ph = 2.0 * kPi * s / segs;
            v.push_back({radius * std::sin(th) * std::cos(ph),
                         radius * std::sin(th) * std::sin(ph), radius * std::cos(th)});
        }
    }
    v.push_back({0, 0, -radius});
    const int south = static_cast<int>(v.size()) - 1;
    const auto at = [&](int r, int s) { return 1 + (r - 1) * segs + (s % segs); };

    std::vector<Face> f;
    for (int s = 0; s < segs; ++s) f.push_back({0, at(1, s), at(1, s + 1)});
    for (int r = 1; r + 1 < rings; ++r)
        for (int s = 0; s < segs; ++s) {
            f.push_back({at(r, s), at(r + 1, s), at(r + 1, s + 1)});
            f.push_back({at(r, s), at(r + 1, s + 1), at(r, s + 1)});
        }
    for (int s = 0; s < segs; ++s) f.push_back({south, at(rings - 1, s + 1), at(rings - 1, s)});
    return TriangleMesh::build(std::move(v), std::move(f));
}

TriangleMesh make_torus(double major, double minor, int target_faces) {
    // faces = 2*nu*nv; cells squarest when major/nu = minor/nv.
    const double ideal_nu = std::sqrt(target_faces * major / (2.0 * minor));
    const int lo = std::max(3, static_cast<int>(std::lround(ideal_nu / 2)));
    const int hi = std::max(lo + 1, static_cast<int>(std::lround(ideal_nu * 2)));
    const int nu = best_count(lo, hi, [&](int u) {
        const int v = std::max(3, static_cast<int>(std::lround(target_faces / (2.0 * u))));
        return std::make_tuple(std::abs(2 * u * v - target_faces),
                               std::fabs(major * v - minor * u), u);
    });
    const int nv = std::max(3, static_cast<int>(std::lround(target_faces / (2.0 * nu))));

    std::vector<Vec3> v;
    for (int i = 0; i < nu; ++i) {
        const double a = 2.0 * kPi * i / nu;
        for (int j = 0; j < nv; ++j) {
            const double b = 2.0 * kPi * j / nv;
            const double ring = major + minor * std::cos(b);
            v.push_back({ring * std::cos(a), ring * std::sin(a), minor * std::sin(b)});
        }
    }
    const auto at = [&](int i, int j) { return (i % nu) * nv + (j % nv); };
    std::vector<Face> f;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            f.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            f.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
        }
    return TriangleMesh::build(std::move(v), std::move(f));
}

// Sheet over [-w/2, w/2] x [-d/2, d/2]. force_odd_x/y make the vertex count
// odd along that axis so a column sits exactly on the fold line.
TriangleMesh make_sheet(double w, double d, int target_faces, bool force_odd_x, bool force_odd_y,
                        const std::function<double(double, double)>& height) {
    const auto snap = [](int n, bool odd) {
        n = std::max(2, n);
        if (odd && n % 2 == 0) ++n;
        return n;
    };
    // faces = 2*(nx-1)*(ny-1); cells squarest when w/(nx-1) = d/(ny-1).
    const double ideal_nx = std::sqrt(target_faces * w / (2.0 * d)) + 1;
    const int lo = std::max(2, static_cast<int>(std::lround(ideal_nx / 2)));
    const int hi = std::max(lo + 1, static_cast<int>(std::lround(ideal_nx * 2)));
    const int nx = best_count(lo, hi, [&](int x) {
        const int sx = snap(x, force_odd_x);
        const int sy =
            snap(1 + static_cast<int>(std::lround(target_faces / (2.0 * (sx - 1)))), force_odd_y);
        return std::make_tuple(std::abs(2 * (sx - 1) * (sy - 1) - target_faces),
                               std::fabs(w * (sy - 1) - d * (sx - 1)), sx);
    });
    const int sx = snap(nx, force_odd_x);
    const int sy =
        snap(1 + static_cast<int>(std::lround(target_faces / (2.0 * (sx - 1)))), force_odd_y);

    std::vector<Vec3> v;
    for (int j = 0; j < sy; ++j)
        for (int i = 0; i < sx; ++i) {
            const double x = -w / 2 + w * i / (sx - 1);
            const double y = -d / 2 + d * j / (sy - 1);
            v.push_back({x, y, height(x, y)});
        }
    const auto at = [&](int i, int j) { return j * sx + i; };
    std::vector<Face> f;
    for (int j = 0; j + 1 < sy; ++j)
        for (int i = 0; i + 1 < sx; ++i) {
            f.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            f.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
        }
    return TriangleMesh::build(std::move(v), std::move(f));
}

FillStrategy method_strategy(const std::string& method) {
    if (method == kMethodBaseline) return FillStrategy::EarClipOnly;
    if (method == kMethodCentroid) return FillStrategy::CentroidOnly;
    if (method == kMethodSegmented) return FillStrategy::Adaptive;
    throw ConfigError("unknown benchmark method: " + method);
}

bool is_sheet(ShapeKind kind) {
    return kind == ShapeKind::Plane || kind == ShapeKind::Saddle ||
           kind == ShapeKind::Crease || kind == ShapeKind::TwoCrease;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

}  // namespace

const char* shape_kind_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Sphere: return "sphere";
        case ShapeKind::Torus: return "torus";
        case ShapeKind::Plane: return "plane";
        case ShapeKind::Saddle: return "saddle";
        case ShapeKind::Crease: return "crease";
        case ShapeKind::TwoCrease: return "two-crease";
    }
    return "unknown";
}

double crease_slope(double dihedral_deg) {
    if (!(dihedral_deg > 0) || !(dihedral_deg <= 180))
        throw ConfigError("dihedral angle must be in (0, 180] degrees");
    return std::tan((180.0 - dihedral_deg) * kPi / 360.0);
}

TriangleMesh generate(const SyntheticShape& shape) {
    if (shape.target_faces < 4) throw ConfigError("target_faces must be at least 4");
    switch (shape.kind) {
        case ShapeKind::Sphere:
            if (!(shape.radius > 0)) throw ConfigError("sphere radius must be positive");
            return make_sphere(shape.radius, shape.target_faces);
        case ShapeKind::Torus:
            if (!(shape.minor_radius > 0) || !(shape.major_radius > shape.minor_radius))
                throw ConfigError("torus needs 0 < minor_radius < major_radius");
            return make_torus(shape.major_radius, shape.minor_radius, shape.target_faces);
        case ShapeKind::Plane:
        case ShapeKind::Saddle:
        case ShapeKind::Crease:
        case ShapeKind::TwoCrease:
            break;
    }
    if (!(shape.width > 0) || !(shape.depth > 0))
        throw ConfigError("sheet extent must be positive");
    const double c = shape.saddle_curvature;
    const double slope =
        (shape.kind == ShapeKind::Crease || shape.kind == ShapeKind::TwoCrease)
            ? crease_slope(shape.dihedral_deg)
            : 0.0;
    switch (shape.kind) {
        case ShapeKind::Plane:
            return make_sheet(shape.width, shape.depth, shape.target_faces, false, false,
                              [](double, double) { return 0.0; });
        case ShapeKind::Saddle:
            return make_sheet(shape.width, shape.depth, shape.target_faces, false, false,
                              [c](double x, double y) { return c * (x * x - y * y); });
        case ShapeKind::Crease:
            return make_sheet(shape.width, shape.depth, shape.target_faces, true, false,
                              [slope](double x, double) { return slope * std::fabs(x); });
        default:
            return make_sheet(shape.width, shape.depth, shape.target_faces, true, true,
                              [slope](double x, double y) {
                                  return slope * (std::fabs(x) + std::fabs(y));
                              });
    }
}

double analytic_deviation(const SyntheticShape& shape, const Vec3& p) {
    switch (shape.kind) {
        case ShapeKind::Sphere:
            return std::fabs(norm(p) - shape.radius);
        case ShapeKind::Torus: {
            const double ring = std::hypot(p.x, p.y) - shape.major_radius;
            return std::fabs(std::hypot(ring, p.z) - shape.minor_radius);
        }
        case ShapeKind::Plane:
            return std::fabs(p.z);
        case ShapeKind::Saddle:
            return std::fabs(p.z - shape.saddle_curvature * (p.x * p.x - p.y * p.y));
        case ShapeKind::Crease:
            return std::fabs(p.z - crease_slope(shape.dihedral_deg) * std::fabs(p.x));
        case ShapeKind::TwoCrease:
            return std::fabs(p.z - crease_slope(shape.dihedral_deg) *
                                       (std::fabs(p.x) + std::fabs(p.y)));
    }
    return 0;
}

PunchResult punch(const TriangleMesh& mesh, const PunchSpec& spec) {
    if (spec.centers.empty()) throw ConfigError("punch needs at least one sphere");
    if (spec.centers.size() != spec.radii.size())
        throw ConfigError("punch centers and radii must pair up");
    for (double r : spec.radii)
        if (!(r > 0)) throw ConfigError("punch radii must be positive");

    const auto inside = [&](const Vec3& p) {
        for (std::size_t k = 0; k < spec.centers.size(); ++k)
            if (distance(p, spec.centers[k]) < spec.radii[k]) return true;
        return false;
    };

    std::vector<Face> kept;
    kept.reserve(mesh.faces.size());
    for (int f = 0; f < mesh.face_count(); ++f)
        if (!inside(mesh.face_centroid(f))) kept.push_back(mesh.faces[f]);
    if (kept.empty()) throw EmptyMesh("punch removed every face");

    PunchResult result;
    result.removed_faces = mesh.face_count() - static_cast<int>(kept.size());

    std::vector<int> map(mesh.vertex_count(), -1);
    std::vector<Vec3> verts;
    verts.reserve(mesh.vertices.size());
    for (Face& fc : kept)
        for (int& c : fc) {
            if (map[c] < 0) {
                map[c] = static_cast<int>(verts.size());
                verts.push_back(mesh.vertices[c]);
            }
            c = map[c];
        }
    result.dropped_vertices = mesh.vertex_count() - static_cast<int>(verts.size());
    result.mesh = TriangleMesh::build(std::move(verts), std::move(kept));

    // A rim vertex on more than two boundary edges cannot be traced into
    // loops; surface-crossing or rim-touching punches cause this.
    std::vector<int> rim_edges(result.mesh.vertex_count(), 0);
    for (const EdgeKey& e : result.mesh.boundary_edges()) {
        ++rim_edges[e.a];
        ++rim_edges[e.b];
    }
    for (int count : rim_edges)
        if (count > 2) throw PunchBreaksManifold("punch left an untraceable boundary");

    result.new_loops = static_cast<int>(result.mesh.boundary_loops().size()) -
                       static_cast<int>(mesh.boundary_loops().size());
    return result;
}

std::vector<BenchmarkRow> run_benchmark(const SyntheticShape& shape, const PunchSpec& spec,
                                        const std::vector<std::string>& methods,
                                        const RunConfig& config, bool timing) {
    std::vector<FillStrategy> strategies;
    strategies.reserve(methods.size());
    for (const std::string& m : methods) strategies.push_back(method_strategy(m));

    const TriangleMesh original = generate(shape);
    const PunchResult punched = punch(original, spec);

    RunConfig fill_config = config;
    if (is_sheet(shape.kind)) fill_config.open_surface = true;

    std::vector<BenchmarkRow> rows;
    rows.reserve(methods.size());
    for (std::size_t m = 0; m < methods.size(); ++m) {
        BenchmarkRow row;
        row.shape = shape_kind_name(shape.kind);
        row.faces = original.face_count();
        row.holes = punched.new_loops;
        row.method = methods[m];
        row.seed = config.seed;

        TriangleMesh filled = punched.mesh;
        try {
            const auto start = std::chrono::steady_clock::now();
            const FillReport report = fill_all_holes(filled, fill_config, strategies[m]);
            if (timing) {
                const auto elapsed = std::chrono::steady_clock::now() - start;
                row.runtime_ms =
                    std::chrono::duration<double, std::milli>(elapsed).count();
            }
            row.new_vertices = report.total_new_vertices;
            row.new_faces = report.total_new_faces;
            if (report.failures == 0)
                row.status = "ok";
            else
                row.status = "partial(" + std::to_string(report.failures) + "/" +
                             std::to_string(report.holes.size()) + ")";
            const DistanceReport dist =
                hausdorff_report(filled, original, config.sampling, config.seed);
            row.delta_max = dist.delta_max;
            row.delta_max_normalized = dist.delta_max_normalized;
            row.delta_avg = dist.delta_avg;
            row.delta_avg_normalized = dist.delta_avg_normalized;
        } catch (const Error& e) {
            row.status = e.what();
            row.delta_max = std::numeric_limits<double>::quiet_NaN();
            row.delta_max_normalized = row.delta_max;
            row.delta_avg = row.delta_max;
            row.delta_avg_normalized = row.delta_max;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
    std::string out =
        "shape,faces,holes,method,delta_max,delta_max_normalized,delta_avg,"
        "delta_avg_normalized,new_vertices,new_faces,runtime_ms,seed\n";
    for (const BenchmarkRow& r : rows) {
        out += r.shape + ',' + std::to_string(r.faces) + ',' + std::to_string(r.holes) + ',' +
               r.method + ',' + format_double(r.delta_max) + ',' +
               format_double(r.delta_max_normalized) + ',' + format_double(r.delta_avg) + ',' +
               format_double(r.delta_avg_normalized) + ',' + std::to_string(r.new_vertices) +
               ',' + std::to_string(r.new_faces) + ',' + format_double(r.runtime_ms) + ',' +
               std::to_string(r.seed) + '\n';
    }
    return out;
}

std::string benchmark_table(const std::vector<BenchmarkRow>& rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %8s %5s %-18s %12s %12s %10s %8s %9s  %s\n",
                  "shape", "faces", "holes", "method", "delta_max", "delta_avg", "new_verts",
                  "new_fcs", "time_ms", "status");
    std::string out = line;
    for (const BenchmarkRow& r : rows) {
        std::snprintf(line, sizeof line,
                      "%-10s %8d %5d %-18s %12.6g %12.6g %10d %8d %9.3g  %s\n", r.shape.c_str(),
                      r.faces, r.holes, r.method.c_str(), r.delta_max, r.delta_avg,
                      r.new_vertices, r.new_faces, r.runtime_ms, r.status.c_str());
        out += line;
    }
    return out;
}

}  // namespace holefill
