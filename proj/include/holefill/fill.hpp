// fill.hpp — hole filling: direct ear connection, centroid fan, segmented
// ring advance with height smoothing, plus the batch dispatcher and the
// quality-blind ear-clip baseline the adaptive path is measured against.
#pragma once

#include <string>
#include <vector>

#include "holefill/config.hpp"
#include "holefill/hole.hpp"
#include "holefill/mesh.hpp"

namespace holefill {

// Shrinking boundary ring of a patch under construction. Generation 0 is a
// sub-hole's boundary loop; each advance moves the ring one spacing inward.
// The ring is cyclic, follows the parent loop's winding, and stays simple
// in the frame's 2D projection.
struct FrontRing {
    std::vector<int> vertices;  // mesh vertex ids
    Frame frame;                // inherited from the originating sub-hole
    int generation = 0;
};

struct FillRecord {
    int hole = -1;  // position in the processing order
    HoleClass hole_class = HoleClass::Small;
    std::string method;  // "direct", "centroid", "segmented-ring", "closehole"
    int sub_holes = 1;
    int new_vertices = 0;
    int new_faces = 0;
    double runtime_ms = 0;  // wall time of this hole's fill, set by the batch
    bool ok = true;
    std::string error;  // set when ok is false
};

struct FillReport {
    std::vector<FillRecord> holes;
    int total_new_vertices = 0;
    int total_new_faces = 0;
    int failures = 0;

    void add(FillRecord record);
};

// Triangulates the hole with no new vertices, n-2 faces for an n-vertex
// loop. Ears are clipped in the local-frame projection, at each step the
// ear whose triangle makes the smallest worst dihedral angle against its
// existing neighbor faces (ties to the lowest vertex id). Throws
// EarClipFailure when the projection leaves no valid ear.
FillRecord fill_small(TriangleMesh& mesh, const Hole& hole);

// Fans the hole around one new vertex at the arithmetic mean of the
// boundary points: 1 new vertex, n new faces. Never fails on a loop that
// came out of boundary_loops.
FillRecord fill_medium(TriangleMesh& mesh, const Hole& hole);

// Segments the hole at fracture points, then fills each sub-hole: small
// and medium sub-holes close directly, larger ones shrink by repeated ring
// advances until the front is closable. A FrontCollapse ends the advance
// early and the remaining front closes. Heights of every vertex the fill
// created are smoothed at the end. Throws only when a sub-hole's final
// close fails (EarClipFailure), leaving a partial fill behind.
FillRecord fill_large(TriangleMesh& mesh, const Hole& hole, const RunConfig& config);

// One inward step of the advancing front: each point moves spacing ds along
// its inward bisector in the frame plane (height carried), consecutive new
// points closer than merge_radius_factor*ds merge, and the old ring is
// stitched to the new one with at least one triangle per old edge. Throws
// FrontCollapse, before touching the mesh, when fewer than 3 points remain
// or the new ring would not be simple or not be smaller; callers respond by
// closing the current front.
FrontRing advance_ring(TriangleMesh& mesh, const FrontRing& front, double ds,
                       double merge_radius_factor = 0.5);

// Umbrella smoothing of the frame-normal component of the given vertices:
// per iteration each one moves to the mean height of its 1-ring neighbors.
// Tangential components and every vertex not in the set stay fixed, so
// patch boundaries never move. Cached mesh bounds are not refreshed; the
// moves stay inside them.
void smooth_patch_heights(TriangleMesh& mesh, const std::vector<int>& new_vertices,
                          const Frame& frame, int iterations = 3);

// Ear-clips the hole whatever its size, first valid ear each round, no new
// vertices. This mirrors the common mesh-tool "close hole" and serves as
// the comparison baseline. Returns the number of faces added.
int fill_baseline_closehole(TriangleMesh& mesh, const Hole& hole);

enum class FillStrategy {
    Adaptive,      // dispatch per hole class (the method under study)
    EarClipOnly,   // fill_baseline_closehole on every hole
    CentroidOnly,  // centroid fan on every hole above Small; Small closes directly
};

// Fills every boundary loop (minus the longest one when config.open_surface
// is set) in canonical loop order. Per-hole failures are recorded in the
// report and processing continues.
FillReport fill_all_holes(TriangleMesh& mesh, const RunConfig& config,
                          FillStrategy strategy = FillStrategy::Adaptive);

}  // namespace holefill
