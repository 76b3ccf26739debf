#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "holefill/config.hpp"
#include "holefill/geom.hpp"
#include "holefill/mesh.hpp"

namespace holefill {

// Exact minimum Euclidean distance from p to the closed triangle (a,b,c).
// Degenerate triangles fall back to the nearest edge or corner.
double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);
double point_triangle_distance2(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Axis-aligned bounding volume tree over a mesh's triangles. Queries return
// the exact minimum (identical to an exhaustive scan): box bounds are shaved
// by a relative 1e-12 before pruning so rounding in the bound can never
// discard the true minimizer. The tree is immutable after construction and
// queries are safe to run concurrently.
class TriangleDistanceIndex {
public:
    // Snapshots triangle corners; throws EmptyMesh for a mesh with no faces.
    explicit TriangleDistanceIndex(const TriangleMesh& mesh);

    double distance(const Vec3& p) const;
    double distance2(const Vec3& p) const;

private:
    struct Node {
        Vec3 lo, hi;
        int left = -1, right = -1;  // leaf when left < 0
        int begin = 0, end = 0;
    };
    std::vector<Node> nodes_;
    std::vector<std::array<Vec3, 3>> tris_;

    int build(std::vector<Vec3>& centroids, std::vector<int>& order, int begin, int end);
};

// A point on the surface plus the share of surface area it stands in for.
struct SurfaceSample {
    Vec3 pos;
    double weight;
};

// Every vertex becomes a sample weighted by a third of its incident face
// area. In face-sampling mode each face draws points uniformly over its
// area, budgeted by spec (total_budget face samples when set, otherwise
// samples_per_avg_area per average triangle area), each weighted by an
// equal split of the face's area. Face draws come from a per-face stream
// mixed from (seed, face index), so growing the budget only appends to the
// samples a smaller budget produced. Vertex samples are always kept; face
// samples only fill what remains of spec.max_samples.
std::vector<SurfaceSample> sample_surface(const TriangleMesh& mesh, const SamplingSpec& spec,
                                          std::uint64_t seed);

struct OneSidedResult {
    double max = 0;
    double mean = 0;          // area-weighted; 0 when no sample carries weight
    double total_weight = 0;  // summed area shares
    std::size_t sample_count = 0;
};

// Samples `from` and measures each sample against `to`, accelerated by the
// triangle index and parallelized across samples. Distances are written to
// per-sample slots and reduced serially, so results do not depend on the
// thread count. Throws EmptyMesh when either mesh has no faces.
OneSidedResult one_sided_distance(const TriangleMesh& from, const TriangleMesh& to,
                                  const SamplingSpec& spec, std::uint64_t seed = 1);

// Serial exhaustive-scan twin of one_sided_distance, kept as the reference
// its results are checked against. Produces bit-identical output.
OneSidedResult one_sided_distance_reference(const TriangleMesh& from, const TriangleMesh& to,
                                            const SamplingSpec& spec, std::uint64_t seed = 1);

struct DistanceReport {
    OneSidedResult forward;   // s -> s2
    OneSidedResult backward;  // s2 -> s
    double delta_max = 0;     // max of the two one-sided maxima
    double delta_avg = 0;     // area-weighted mean over both sample sets
    double bbox_diagonal = 0; // of s, the normalization reference
    double delta_max_normalized = 0;
    double delta_avg_normalized = 0;
};

// Two-sided distance report. Normalized values divide by s's bounding box
// diagonal and are zero when that diagonal is zero.
DistanceReport hausdorff_report(const TriangleMesh& s, const TriangleMesh& s2,
                                const SamplingSpec& spec, std::uint64_t seed = 1);

}  // namespace holefill
