// hole.hpp — boundary loops promoted to holes: derived scalars, size
// classification, fracture-margin detection, and segmentation into sub-holes.
#pragma once

#include <utility>
#include <vector>

#include "holefill/geom.hpp"
#include "holefill/mesh.hpp"

namespace holefill {

struct Hole {
    BoundaryLoop loop;
    std::vector<Vec3> positions;         // loop vertex positions, snapshot at analysis
    double ds = 0;                       // mean boundary edge length
    double d_H = 0;                      // max pairwise vertex distance
    std::vector<Vec3> boundary_normals;  // unit, one per loop vertex
    // origin = loop centroid; n = best-fit plane normal, oriented to agree
    // with the average boundary normal.
    Frame local_frame;
};

enum class HoleClass { Small, Medium, Large };

// One chord between two fracture points, with the points inserted along it.
// endpoints index into the parent loop (positions, not mesh vertices).
struct SegmentationLine {
    std::array<int, 2> endpoints;
    std::vector<Vec3> inserted_points;  // ordered endpoints[0] -> endpoints[1]
};

// Ring entry of a sub-hole: an original mesh vertex, or a segmentation-line
// point that is not in the mesh yet (mesh_vertex = -1; line/line_k identify
// it so adjacent sub-holes can share one materialized vertex).
struct RingVertex {
    Vec3 pos;
    int mesh_vertex = -1;
    int line = -1;
    int line_k = -1;
};

struct SubHole {
    std::vector<RingVertex> ring;  // closed; keeps the parent loop's winding
    std::vector<bool> seg_edge;    // seg_edge[i]: edge ring[i]->ring[i+1] lies on a line
    double ds = 0;
    double d_H = 0;
    Frame frame;  // best fit over the ring, oriented to agree with the parent
};

struct Segmentation {
    std::vector<SubHole> sub_holes;
    std::vector<SegmentationLine> lines;
};

// ds = mean loop edge length, d_H = max pairwise distance (O(n^2)),
// boundary_normals from the mesh, frame from the least-squares plane.
Hole analyze_hole(const TriangleMesh& mesh, const BoundaryLoop& loop);

// Small: d_H < small_factor*ds. Medium: up to medium_factor*ds, both ends
// inclusive. Large: beyond.
HoleClass classify_hole(const Hole& hole, double small_factor = 1.5, double medium_factor = 2.5);

const char* hole_class_name(HoleClass c);

// dot(a,b)/(|a||b|), clamped to [-1, 1]. Throws ZeroVector.
double normal_angle_cos(const Vec3& a, const Vec3& b);

// Loop positions whose normal deviates from an adjacent boundary normal by
// more than the threshold (cos below it). Runs of consecutive flagged
// positions collapse to the sharpest member. Sorted ascending.
std::vector<int> detect_fracture_points(const Hole& hole, double cos_threshold = 0.7);

// Greedy nearest-first pairing of fracture points. A pair is accepted when
// its chord stays inside the loop's 2D projection and crosses no accepted
// chord; leftovers are dropped.
std::vector<std::pair<int, int>> pair_fracture_points(const Hole& hole,
                                                      const std::vector<int>& fracture_points);

// Splits the loop along each pair's chord, inserting ceil(L/ds)-1 uniformly
// spaced points whose normal-axis coordinate is the mean of the two endpoint
// values. Sub-holes re-derive ds/d_H; their non-segmentation edges cover the
// original boundary exactly once. Throws InvalidChord for adjacent endpoints
// or a chord leaving the polygon.
Segmentation segment_hole(const Hole& hole, const std::vector<std::pair<int, int>>& pairs);

}  // namespace holefill
