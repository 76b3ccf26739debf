// fill.cpp — see fill.hpp for the per-method contracts. The geometric work
// runs in each hole's local frame, where loops project to simple 2D polygons,
// so ear validity, inward directions, and front simplicity are plain 2D tests.

#include "holefill/fill.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "holefill/errors.hpp"

namespace holefill {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Vec2> project_ring(const TriangleMesh& mesh, const std::vector<int>& ring,
                               const Frame& frame) {
    std::vector<Vec2> proj;
    proj.reserve(ring.size());
    for (int v : ring) proj.push_back(frame.to_plane(mesh.vertices[v]));
    return proj;
}

// +1 when the projected ring runs counterclockwise, -1 clockwise. Interior
// holes project clockwise in their own frame (the surface sits on the left of
// boundary travel), outer rims counterclockwise; the 2D tests below carry
// this sign so both cases work unchanged.
double ring_sign(const std::vector<Vec2>& proj) {
    return polygon_signed_area(proj) >= 0 ? 1.0 : -1.0;
}

// Unit normal of edge q -> r pointing into the ring's interior.
Vec2 inward_edge_normal(const Vec2& q, const Vec2& r, double sign) {
    Vec2 e = r - q;
    double len = norm(e);
    if (len <= 0) return {0, 0};
    return Vec2{-e.y, e.x} * (sign / len);
}

double ring_diameter(const TriangleMesh& mesh, const std::vector<int>& ring) {
    double best = 0;
    for (std::size_t i = 0; i < ring.size(); ++i)
        for (std::size_t j = i + 1; j < ring.size(); ++j)
            best = std::max(best, distance(mesh.vertices[ring[i]], mesh.vertices[ring[j]]));
    return best;
}

// Unit face normal, or zero for degenerate faces (which then drop out of the
// ear quality instead of throwing).
Vec3 face_unit_normal_or_zero(const TriangleMesh& mesh, int face) {
    const Face& f = mesh.faces[face];
    Vec3 n = cross(mesh.vertices[f[1]] - mesh.vertices[f[0]],
                   mesh.vertices[f[2]] - mesh.vertices[f[0]]);
    double len = norm(n);
    if (!(len > 0) || !std::isfinite(len)) return {0, 0, 0};
    return n / len;
}

// Worst normal deviation (radians) of candidate triangle (a, b, c) against
// the faces already sitting on its three edges. Degenerate candidates rank
// worst so ear selection avoids them whenever it has a choice.
double ear_quality(const TriangleMesh& mesh, int a, int b, int c) {
    Vec3 n = cross(mesh.vertices[b] - mesh.vertices[a], mesh.vertices[c] - mesh.vertices[a]);
    double len = norm(n);
    if (!(len > 0) || !std::isfinite(len)) return kPi;
    n = n / len;
    double worst = 0;
    const int edges[3][2] = {{a, b}, {b, c}, {c, a}};
    for (const auto& e : edges) {
        for (int f : mesh.edge_faces(e[0], e[1])) {
            if (f < 0) continue;
            Vec3 fn = face_unit_normal_or_zero(mesh, f);
            if (norm2(fn) == 0) continue;
            worst = std::max(worst, std::acos(std::clamp(dot(n, fn), -1.0, 1.0)));
        }
    }
    return worst;
}

// Clips the ring down to nothing, one face per ear, reversed against the loop
// direction so windings stay consistent with the surrounding mesh. An ear is
// valid when it is convex in the projection, contains no other ring vertex,
// and none of its edges already carries two faces. pick_smoothest selects the
// lowest worst-dihedral ear each round (ties to the lowest vertex id); the
// baseline takes the first valid ear instead.
int ear_clip_fill(TriangleMesh& mesh, std::vector<int> work, const Frame& frame,
                  bool pick_smoothest) {
    if (work.size() < 3) throw EarClipFailure("loop has fewer than 3 vertices");
    std::vector<Vec2> proj = project_ring(mesh, work, frame);
    const double sign = ring_sign(proj);

    int added = 0;
    while (work.size() > 3) {
        const int n = static_cast<int>(work.size());
        int best = -1;
        double best_quality = 0;
        for (int i = 0; i < n; ++i) {
            const int ip = (i + n - 1) % n;
            const int in = (i + 1) % n;
            if (sign * orient2d(proj[ip], proj[i], proj[in]) <= 0) continue;
            bool blocked = false;
            for (int j = 0; j < n && !blocked; ++j) {
                if (j == ip || j == i || j == in) continue;
                blocked = point_in_triangle(proj[j], proj[ip], proj[i], proj[in]);
            }
            if (blocked) continue;
            if (mesh.edge_face_count(work[ip], work[i]) >= 2 ||
                mesh.edge_face_count(work[i], work[in]) >= 2 ||
                mesh.edge_face_count(work[in], work[ip]) >= 2)
                continue;
            if (!pick_smoothest) {
                best = i;
                break;
            }
            const double q = ear_quality(mesh, work[in], work[i], work[ip]);
            if (best < 0 || q < best_quality || (q == best_quality && work[i] < work[best])) {
                best = i;
                best_quality = q;
            }
        }
        if (best < 0) throw EarClipFailure("no valid ear: the projected loop self-intersects");
        const int ip = (best + n - 1) % n;
        const int in = (best + 1) % n;
        mesh.add_face(work[in], work[best], work[ip]);
        ++added;
        work.erase(work.begin() + best);
        proj.erase(proj.begin() + best);
    }

    if (mesh.edge_face_count(work[0], work[1]) >= 2 ||
        mesh.edge_face_count(work[1], work[2]) >= 2 ||
        mesh.edge_face_count(work[2], work[0]) >= 2)
        throw EarClipFailure("closing triangle would put a third face on an edge");
    mesh.add_face(work[2], work[1], work[0]);
    return added + 1;
}

// One vertex at the boundary mean, one fan triangle per boundary edge. The
// fan cannot overfill an edge: ring edges carry one face and every spoke is
// fresh, so this never throws on a ring that came from boundary_loops.
std::pair<int, int> centroid_fan_fill(TriangleMesh& mesh, const std::vector<int>& ring) {
    Vec3 center{0, 0, 0};
    for (int v : ring) center += mesh.vertices[v];
    center = center / static_cast<double>(ring.size());
    const int cid = mesh.add_vertex(center);
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) mesh.add_face(ring[(i + 1) % n], ring[i], cid);
    return {cid, n};
}

}  // namespace

void FillReport::add(FillRecord record) {
    total_new_vertices += record.new_vertices;
    total_new_faces += record.new_faces;
    if (!record.ok) ++failures;
    holes.push_back(std::move(record));
}

FrontRing advance_ring(TriangleMesh& mesh, const FrontRing& front, double ds,
                       double merge_radius_factor) {
    const int n = static_cast<int>(front.vertices.size());
    if (n < 3) throw FrontCollapse("front has fewer than 3 points");
    if (!(ds > 0)) throw ConfigError("ring advance needs a positive spacing");

    std::vector<Vec2> proj = project_ring(mesh, front.vertices, front.frame);
    std::vector<double> height(n);
    for (int i = 0; i < n; ++i) height[i] = front.frame.height(mesh.vertices[front.vertices[i]]);
    const double sign = ring_sign(proj);

    Vec2 centroid{0, 0};
    for (const Vec2& q : proj) centroid = centroid + q;
    centroid = centroid * (1.0 / n);

    // Step each point one spacing inward along the bisector of its two edge
    // normals; when the edges fold back and the bisector vanishes, aim at the
    // ring centroid instead.
    std::vector<Vec2> stepped(n);
    for (int i = 0; i < n; ++i) {
        const Vec2& prev = proj[(i + n - 1) % n];
        const Vec2& next = proj[(i + 1) % n];
        Vec2 dir =
            inward_edge_normal(prev, proj[i], sign) + inward_edge_normal(proj[i], next, sign);
        double len = norm(dir);
        if (len < 1e-9) {
            dir = centroid - proj[i];
            len = norm(dir);
        }
        if (len < 1e-12) throw FrontCollapse("inward direction undefined");
        stepped[i] = proj[i] + dir * (ds / len);
    }

    // Merge runs of consecutive stepped points closer than the merge radius,
    // cyclically: the wrap gap can fold the last run into the first. Cluster
    // indices stay monotone around the ring, so the stitch below meets each
    // cluster transition exactly once.
    const double merge_r = merge_radius_factor * ds;
    const auto stepped_gap = [&](int i, int j) {
        return std::hypot(norm(stepped[i] - stepped[j]), height[i] - height[j]);
    };
    std::vector<int> cluster_of(n, 0);
    int clusters = 1;
    for (int i = 1; i < n; ++i) {
        if (stepped_gap(i, i - 1) < merge_r)
            cluster_of[i] = clusters - 1;
        else
            cluster_of[i] = clusters++;
    }
    if (clusters > 1 && stepped_gap(n - 1, 0) < merge_r) {
        for (int i = n - 1; i >= 0 && cluster_of[i] == clusters - 1; --i) cluster_of[i] = 0;
        --clusters;
    }
    if (clusters < 3) throw FrontCollapse("merge left fewer than 3 points");

    std::vector<Vec2> center2(clusters, Vec2{0, 0});
    std::vector<double> center_h(clusters, 0.0);
    std::vector<int> members(clusters, 0);
    for (int i = 0; i < n; ++i) {
        const int k = cluster_of[i];
        center2[k] = center2[k] + stepped[i];
        center_h[k] += height[i];
        ++members[k];
    }
    for (int k = 0; k < clusters; ++k) {
        center2[k] = center2[k] * (1.0 / members[k]);
        center_h[k] /= members[k];
    }

    // One pass at the base radius is not always enough on jagged fronts: the
    // stepped teeth of a staircase rim can still cross. Keep folding the
    // closest adjacent pair of centers together until the ring is simple.
    // Coarsening the cluster map preserves its cyclic monotonicity.
    while (clusters > 3 && !polygon_is_simple(center2)) {
        int best = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (int a = 0; a < clusters; ++a) {
            const int b = (a + 1) % clusters;
            const double gap =
                std::hypot(norm(center2[b] - center2[a]), center_h[b] - center_h[a]);
            if (gap < best_gap) {
                best_gap = gap;
                best = a;
            }
        }
        const int b = (best + 1) % clusters;
        const double wa = members[best], wb = members[b];
        center2[best] = (center2[best] * wa + center2[b] * wb) * (1.0 / (wa + wb));
        center_h[best] = (center_h[best] * wa + center_h[b] * wb) / (wa + wb);
        members[best] += members[b];
        center2.erase(center2.begin() + b);
        center_h.erase(center_h.begin() + b);
        members.erase(members.begin() + b);
        for (int& c : cluster_of) {
            if (c == b) c = best;
            if (c > b) --c;
        }
        --clusters;
    }

    // Reject the advance before touching the mesh, so a collapse leaves the
    // caller free to close the old front as it stands.
    if (!polygon_is_simple(center2)) throw FrontCollapse("advanced ring self-intersects");
    std::vector<Vec3> center3(clusters);
    for (int k = 0; k < clusters; ++k)
        center3[k] = front.frame.from_plane(center2[k], center_h[k]);
    double new_diameter = 0;
    for (int i = 0; i < clusters; ++i)
        for (int j = i + 1; j < clusters; ++j)
            new_diameter = std::max(new_diameter, distance(center3[i], center3[j]));
    if (!(new_diameter < ring_diameter(mesh, front.vertices)))
        throw FrontCollapse("advanced ring did not shrink");

    FrontRing next;
    next.frame = front.frame;
    next.generation = front.generation + 1;
    next.vertices.resize(clusters);
    for (int k = 0; k < clusters; ++k) next.vertices[k] = mesh.add_vertex(center3[k]);

    // Stitch: every old edge gets its second face, every spoke ends up shared
    // by exactly two new triangles, and each new ring edge stays single-sided
    // for the next generation.
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const int a = cluster_of[i];
        const int b = cluster_of[j];
        mesh.add_face(front.vertices[j], front.vertices[i], next.vertices[a]);
        if (b != a) mesh.add_face(front.vertices[j], next.vertices[a], next.vertices[b]);
    }
    return next;
}

void smooth_patch_heights(TriangleMesh& mesh, const std::vector<int>& new_vertices,
                          const Frame& frame, int iterations) {
    if (iterations <= 0 || new_vertices.empty()) return;
    const std::unordered_set<int> movable(new_vertices.begin(), new_vertices.end());

    // 1-ring neighborhoods of the movable vertices. Fixed neighbors enter the
    // height table but are never rewritten, which pins the patch boundary.
    std::unordered_map<int, std::vector<int>> links;
    std::unordered_map<int, double> height;
    for (int v : movable) {
        std::vector<int> nb;
        for (int f : mesh.vertex_faces(v))
            for (int c : mesh.faces[f])
                if (c != v) nb.push_back(c);
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        height.emplace(v, frame.height(mesh.vertices[v]));
        for (int w : nb) height.emplace(w, frame.height(mesh.vertices[w]));
        links.emplace(v, std::move(nb));
    }
    const std::unordered_map<int, double> initial = height;

    // Sequential sweeps in ascending vertex order: each update sees its
    // already-relaxed predecessors, which settles alternating rim heights
    // without the parity oscillation a simultaneous update would keep.
    std::vector<int> order(new_vertices.begin(), new_vertices.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (int it = 0; it < iterations; ++it) {
        for (int v : order) {
            const std::vector<int>& nb = links.at(v);
            if (nb.empty()) continue;
            double sum = 0;
            for (int w : nb) sum += height.at(w);
            height[v] = sum / static_cast<double>(nb.size());
        }
    }

    // Apply along the frame normal only; tangential coordinates never change.
    // The moves stay inside the prior height range, so cached mesh bounds
    // remain valid without a refresh.
    for (const auto& [v, nb] : links) {
        (void)nb;
        const double dh = height.at(v) - initial.at(v);
        if (dh != 0) mesh.vertices[v] += frame.n * dh;
    }
}

FillRecord fill_small(TriangleMesh& mesh, const Hole& hole) {
    FillRecord rec;
    rec.hole_class = HoleClass::Small;
    rec.method = "direct";
    rec.new_faces = ear_clip_fill(mesh, hole.loop.vertex_indices, hole.local_frame, true);
    return rec;
}

FillRecord fill_medium(TriangleMesh& mesh, const Hole& hole) {
    FillRecord rec;
    rec.hole_class = HoleClass::Medium;
    rec.method = "centroid";
    rec.new_vertices = 1;
    rec.new_faces = centroid_fan_fill(mesh, hole.loop.vertex_indices).second;
    return rec;
}

FillRecord fill_large(TriangleMesh& mesh, const Hole& hole, const RunConfig& config) {
    FillRecord rec;
    rec.hole_class = HoleClass::Large;
    rec.method = "segmented-ring";
    const int vertices_before = mesh.vertex_count();
    const int faces_before = mesh.face_count();

    const std::vector<int> fracture = detect_fracture_points(hole, config.fracture_cos);
    const Segmentation seg = segment_hole(hole, pair_fracture_points(hole, fracture));
    rec.sub_holes = static_cast<int>(seg.sub_holes.size());

    // Materialize every segmentation-line point exactly once; adjacent
    // sub-holes then share the mesh vertex, keeping the chord edges interior
    // after both sides close.
    std::vector<std::vector<int>> line_ids(seg.lines.size());
    for (std::size_t l = 0; l < seg.lines.size(); ++l) {
        line_ids[l].reserve(seg.lines[l].inserted_points.size());
        for (const Vec3& p : seg.lines[l].inserted_points)
            line_ids[l].push_back(mesh.add_vertex(p));
    }

    for (const SubHole& sub : seg.sub_holes) {
        std::vector<int> ring;
        ring.reserve(sub.ring.size());
        for (const RingVertex& rv : sub.ring)
            ring.push_back(rv.mesh_vertex >= 0 ? rv.mesh_vertex : line_ids[rv.line][rv.line_k]);

        if (sub.d_H < config.small_factor * sub.ds) {
            ear_clip_fill(mesh, ring, sub.frame, true);
            continue;
        }
        if (sub.d_H <= config.medium_factor * sub.ds) {
            centroid_fan_fill(mesh, ring);
            continue;
        }

        // Shrink the front until it is closable. A collapse is not an error:
        // it means the front cannot advance and must close as it stands.
        FrontRing front{ring, sub.frame, 0};
        const int max_generations = static_cast<int>(std::ceil(sub.d_H / (2.0 * sub.ds))) + 2;
        while (front.generation < max_generations &&
               ring_diameter(mesh, front.vertices) > config.medium_factor * sub.ds) {
            try {
                front = advance_ring(mesh, front, sub.ds, config.ring_merge_radius_factor);
            } catch (const FrontCollapse&) {
                break;
            }
        }
        if (ring_diameter(mesh, front.vertices) < config.small_factor * sub.ds)
            ear_clip_fill(mesh, front.vertices, front.frame, true);
        else
            centroid_fan_fill(mesh, front.vertices);
    }

    // Every vertex this fill created sits in one contiguous id range: the
    // line points, the advancing-front rings, and any fan centers.
    std::vector<int> created(mesh.vertex_count() - vertices_before);
    std::iota(created.begin(), created.end(), vertices_before);
    smooth_patch_heights(mesh, created, hole.local_frame, config.smooth_iterations);

    rec.new_vertices = mesh.vertex_count() - vertices_before;
    rec.new_faces = mesh.face_count() - faces_before;
    return rec;
}

int fill_baseline_closehole(TriangleMesh& mesh, const Hole& hole) {
    return ear_clip_fill(mesh, hole.loop.vertex_indices, hole.local_frame, false);
}

FillReport fill_all_holes(TriangleMesh& mesh, const RunConfig& config, FillStrategy strategy) {
    config.validate();
    const std::vector<BoundaryLoop> loops = mesh.boundary_loops();

    // The longest loop of an open surface is its outer rim, not a hole.
    std::size_t skip = loops.size();
    if (config.open_surface && !loops.empty()) {
        skip = 0;
        for (std::size_t i = 1; i < loops.size(); ++i)
            if (loops[i].size() > loops[skip].size()) skip = i;
    }

    FillReport report;
    int index = 0;
    for (std::size_t li = 0; li < loops.size(); ++li) {
        if (li == skip) continue;
        FillRecord rec;
        HoleClass cls = HoleClass::Small;
        bool classified = false;
        const int vertices_before = mesh.vertex_count();
        const int faces_before = mesh.face_count();
        const auto start = std::chrono::steady_clock::now();
        try {
            const Hole hole = analyze_hole(mesh, loops[li]);
            cls = classify_hole(hole, config.small_factor, config.medium_factor);
            classified = true;
            switch (strategy) {
                case FillStrategy::Adaptive:
                    if (cls == HoleClass::Small)
                        rec = fill_small(mesh, hole);
                    else if (cls == HoleClass::Medium)
                        rec = fill_medium(mesh, hole);
                    else
                        rec = fill_large(mesh, hole, config);
                    break;
                case FillStrategy::EarClipOnly:
                    rec.method = "closehole";
                    rec.new_faces = fill_baseline_closehole(mesh, hole);
                    break;
                case FillStrategy::CentroidOnly:
                    // Ablation of the Large path only: Small holes still
                    // close directly, everything bigger gets the fan.
                    rec = cls == HoleClass::Small ? fill_small(mesh, hole)
                                                  : fill_medium(mesh, hole);
                    break;
            }
        } catch (const Error& e) {
            // A failed hole may have left a partial fill behind; account for
            // that geometry and move on to the next loop.
            rec.ok = false;
            rec.error = e.what();
            rec.method.clear();
            rec.new_vertices = mesh.vertex_count() - vertices_before;
            rec.new_faces = mesh.face_count() - faces_before;
        }
        rec.hole = index;
        if (classified) rec.hole_class = cls;
        rec.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        report.add(rec);
        ++index;
    }
    return report;
}

}  // namespace holefill
