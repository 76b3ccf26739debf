#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holefill/config.hpp"
#include "holefill/geom.hpp"
#include "holefill/mesh.hpp"

namespace holefill {

// Synthetic ground-truth shapes. Every generated mesh has an analytic
// counterpart (see analytic_deviation), so repaired patches can be measured
// against the true surface instead of another mesh.
enum class ShapeKind { Sphere, Torus, Plane, Saddle, Crease, TwoCrease };

struct SyntheticShape {
    ShapeKind kind = ShapeKind::Sphere;
    int target_faces = 50000;

    double radius = 1.0;  // Sphere
    double major_radius = 2.0;
    double minor_radius = 0.7;  // Torus tube

    // Sheet extent for the open shapes, centered on the origin.
    double width = 4.0;
    double depth = 4.0;
    double saddle_curvature = 0.25;  // Saddle: z = c*(x^2 - y^2)

    // Crease/TwoCrease: dihedral angle between the meeting planes, degrees.
    // 180 would be flat; smaller is sharper. The fold lines run along x = 0
    // (and y = 0 for TwoCrease).
    double dihedral_deg = 120.0;
};

const char* shape_kind_name(ShapeKind kind);

// Builds the mesh for a shape, within 5% of target_faces. Sphere and Torus
// close (0 boundary edges); the sheet shapes keep exactly one outer rim.
// Grids for Crease/TwoCrease place a vertex column exactly on each fold
// line, so the crease is a sharp polyline of mesh edges.
TriangleMesh generate(const SyntheticShape& shape);

// Residual between a point and the shape's analytic surface: true distance
// for Sphere/Torus, vertical height error for the sheet shapes.
double analytic_deviation(const SyntheticShape& shape, const Vec3& p);

// Slope of z = slope*|x| matching the requested dihedral angle.
double crease_slope(double dihedral_deg);

enum class PunchMode { SingleLobe, MultiLobe };

struct PunchSpec {
    std::vector<Vec3> centers;
    std::vector<double> radii;  // parallel to centers
    PunchMode mode = PunchMode::SingleLobe;
};

struct PunchResult {
    TriangleMesh mesh;
    int removed_faces = 0;
    int dropped_vertices = 0;  // vertices that lost every face
    int new_loops = 0;         // boundary loops added relative to the input
};

// Removes every face whose centroid lies strictly inside any punch sphere
// and drops vertices left without faces. Surviving vertices keep their
// exact coordinates. Throws PunchBreaksManifold when the removal leaves a
// vertex on more than two boundary edges (untraceable rim), ConfigError for
// empty or non-positive punch input, EmptyMesh when nothing survives.
PunchResult punch(const TriangleMesh& mesh, const PunchSpec& spec);

// One benchmark method run: punch-fill-measure against the unpunched
// original. Failures keep the row with status text and NaN deltas.
struct BenchmarkRow {
    std::string shape;
    int faces = 0;  // original mesh face count
    int holes = 0;  // boundary loops the punch opened
    std::string method;
    double delta_max = 0;
    double delta_max_normalized = 0;
    double delta_avg = 0;
    double delta_avg_normalized = 0;
    int new_vertices = 0;
    int new_faces = 0;
    double runtime_ms = 0;  // 0 unless timing was requested
    std::uint64_t seed = 0;
    std::string status;  // "ok", "partial(k/n)", or an error message
};

// Method names accepted by run_benchmark.
inline constexpr const char* kMethodBaseline = "baseline-closehole";
inline constexpr const char* kMethodCentroid = "centroid-only";
inline constexpr const char* kMethodSegmented = "segmented-ring";

// Fills a fresh copy of the punched mesh per method and reports Hausdorff
// distances to the original. Sheet shapes are filled under the open-surface
// policy so the outer rim never counts as a hole. runtime_ms stays 0 unless
// `timing` is set, keeping default output byte-stable for a fixed seed.
// Throws ConfigError for an unknown method name.
std::vector<BenchmarkRow> run_benchmark(const SyntheticShape& shape, const PunchSpec& spec,
                                        const std::vector<std::string>& methods,
                                        const RunConfig& config, bool timing = false);

// CSV with header; columns are fixed:
// shape,faces,holes,method,delta_max,delta_max_normalized,delta_avg,
// delta_avg_normalized,new_vertices,new_faces,runtime_ms,seed
std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

// Aligned human-readable table, one line per row plus status column.
std::string benchmark_table(const std::vector<BenchmarkRow>& rows);

}  // namespace holefill
