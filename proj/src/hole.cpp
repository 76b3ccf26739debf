#include "holefill/hole.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "holefill/errors.hpp"

namespace holefill {

namespace {

double mean_edge_length(const std::vector<Vec3>& p) {
    const std::size_t n = p.size();
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += distance(p[i], p[(i + 1) % n]);
    return sum / static_cast<double>(n);
}

double max_pairwise_distance(const std::vector<Vec3>& p) {
    double best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            best = std::max(best, distance(p[i], p[j]));
        }
    }
    return best;
}

Vec3 centroid_of(const std::vector<Vec3>& p) {
    Vec3 c{0, 0, 0};
    for (const Vec3& q : p) c += q;
    return c / static_cast<double>(p.size());
}

}  // namespace

Hole analyze_hole(const TriangleMesh& mesh, const BoundaryLoop& loop) {
    Hole h;
    h.loop = loop;
    h.positions.reserve(loop.size());
    for (int v : loop.vertex_indices) h.positions.push_back(mesh.vertices[v]);
    h.ds = mean_edge_length(h.positions);
    h.d_H = max_pairwise_distance(h.positions);
    h.boundary_normals.reserve(loop.size());
    for (int v : loop.vertex_indices) h.boundary_normals.push_back(mesh.vertex_normal(v));

    Vec3 n = best_fit_plane_normal(h.positions);
    Vec3 avg{0, 0, 0};
    for (const Vec3& bn : h.boundary_normals) avg += bn;
    if (dot(n, avg) < 0) n = -n;
    h.local_frame = make_frame(centroid_of(h.positions), n);
    return h;
}

HoleClass classify_hole(const Hole& hole, double small_factor, double medium_factor) {
    if (hole.d_H < small_factor * hole.ds) return HoleClass::Small;
    if (hole.d_H <= medium_factor * hole.ds) return HoleClass::Medium;
    return HoleClass::Large;
}

const char* hole_class_name(HoleClass c) {
    switch (c) {
        case HoleClass::Small: return "small";
        case HoleClass::Medium: return "medium";
        case HoleClass::Large: return "large";
    }
    return "?";
}

double normal_angle_cos(const Vec3& a, const Vec3& b) {
    double na = norm(a), nb = norm(b);
    if (na < 1e-300 || nb < 1e-300) throw ZeroVector("normal_angle_cos on a zero vector");
    return std::clamp(dot(a, b) / (na * nb), -1.0, 1.0);
}

std::vector<int> detect_fracture_points(const Hole& hole, double cos_threshold) {
    const int n = static_cast<int>(hole.loop.size());
    if (n < 3) return {};

    // Per position: cos against each loop neighbor; a vertex is flagged when
    // the worse of the two falls below the threshold.
    std::vector<double> min_cos(n), max_cos(n);
    std::vector<char> flagged(n);
    for (int i = 0; i < n; ++i) {
        double cp = normal_angle_cos(hole.boundary_normals[i],
                                     hole.boundary_normals[(i + n - 1) % n]);
        double cn = normal_angle_cos(hole.boundary_normals[i],
                                     hole.boundary_normals[(i + 1) % n]);
        min_cos[i] = std::min(cp, cn);
        max_cos[i] = std::max(cp, cn);
        flagged[i] = min_cos[i] < cos_threshold;
    }

    auto sharper = [&](int a, int b) {
        return std::tie(min_cos[a], max_cos[a], a) < std::tie(min_cos[b], max_cos[b], b);
    };
    std::vector<int> out;
    int start = 0;
    while (start < n && flagged[start]) ++start;
    if (start == n) {
        // Everything flagged: one run, keep the single sharpest vertex.
        int best = 0;
        for (int i = 1; i < n; ++i) {
            if (sharper(i, best)) best = i;
        }
        return {best};
    }
    // Scan once around the loop from an unflagged position so no run wraps.
    for (int k = 0; k < n; ++k) {
        int i = (start + k) % n;
        if (!flagged[i]) continue;
        int best = i;
        while (k + 1 < n && flagged[(start + k + 1) % n]) {
            ++k;
            int j = (start + k) % n;
            if (sharper(j, best)) best = j;
        }
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool loop_adjacent(int a, int b, int n) {
    int d = std::abs(a - b);
    return d == 1 || d == n - 1;
}

std::vector<Vec2> project_loop(const Hole& hole) {
    std::vector<Vec2> poly;
    poly.reserve(hole.positions.size());
    for (const Vec3& p : hole.positions) poly.push_back(hole.local_frame.to_plane(p));
    return poly;
}

}  // namespace

std::vector<std::pair<int, int>> pair_fracture_points(const Hole& hole,
                                                      const std::vector<int>& fracture_points) {
    std::vector<std::pair<int, int>> result;
    if (fracture_points.size() < 2) return result;
    const int n = static_cast<int>(hole.loop.size());
    std::vector<Vec2> poly = project_loop(hole);

    struct Candidate {
        double dist;
        int a, b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t x = 0; x < fracture_points.size(); ++x) {
        for (std::size_t y = x + 1; y < fracture_points.size(); ++y) {
            int a = fracture_points[x], b = fracture_points[y];
            if (loop_adjacent(a, b, n)) continue;
            candidates.push_back({distance(hole.positions[a], hole.positions[b]), a, b});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
        return std::tie(l.dist, l.a, l.b) < std::tie(r.dist, r.a, r.b);
    });

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const Candidate& c : candidates) {
        if (used[c.a] || used[c.b]) continue;
        if (!chord_inside_polygon(poly, static_cast<std::size_t>(c.a),
                                  static_cast<std::size_t>(c.b))) {
            continue;
        }
        bool crosses = false;
        for (const auto& [pa, pb] : result) {
            if (segments_properly_intersect(poly[c.a], poly[c.b], poly[pa], poly[pb])) {
                crosses = true;
                break;
            }
        }
        if (crosses) continue;
        used[c.a] = used[c.b] = 1;
        result.emplace_back(c.a, c.b);
    }
    return result;
}

namespace {

// Ring entry during splitting: original loop position, or an inserted point.
struct SplitEntry {
    Vec3 pos;
    int orig = -1;  // loop position for original vertices
    int line = -1;
    int line_k = -1;
};

struct SplitRing {
    std::vector<SplitEntry> entries;
    std::vector<char> seg_edge;  // edge i: entries[i] -> entries[i+1]
};

int find_entry(const SplitRing& r, int orig) {
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (r.entries[i].orig == orig) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

Segmentation segment_hole(const Hole& hole, const std::vector<std::pair<int, int>>& pairs) {
    const int n = static_cast<int>(hole.loop.size());
    Segmentation s;

    SplitRing whole;
    whole.entries.reserve(n);
    for (int i = 0; i < n; ++i) {
        whole.entries.push_back({hole.positions[i], i, -1, -1});
    }
    whole.seg_edge.assign(n, 0);
    std::vector<SplitRing> rings{std::move(whole)};

    std::vector<Vec2> poly = project_loop(hole);
    const Frame& f = hole.local_frame;

    for (std::size_t li = 0; li < pairs.size(); ++li) {
        auto [a, b] = pairs[li];
        if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
            throw InvalidChord("segmentation endpoints out of range");
        }
        if (loop_adjacent(a, b, n)) {
            throw InvalidChord("segmentation endpoints are adjacent on the loop");
        }
        if (!chord_inside_polygon(poly, static_cast<std::size_t>(a),
                                  static_cast<std::size_t>(b))) {
            throw InvalidChord("segmentation chord leaves the hole polygon");
        }

        // Inserted points: uniform along the chord, height = mean of the two
        // endpoint heights.
        const Vec3& pa = hole.positions[a];
        const Vec3& pb = hole.positions[b];
        double L = distance(pa, pb);
        int m = static_cast<int>(std::ceil(L / hole.ds)) - 1;
        if (m < 0) m = 0;
        Vec2 qa = f.to_plane(pa), qb = f.to_plane(pb);
        double h_avg = 0.5 * (f.height(pa) + f.height(pb));
        SegmentationLine line;
        line.endpoints = {a, b};
        for (int k = 1; k <= m; ++k) {
            double t = static_cast<double>(k) / static_cast<double>(m + 1);
            Vec2 q{qa.x + (qb.x - qa.x) * t, qa.y + (qb.y - qa.y) * t};
            line.inserted_points.push_back(f.from_plane(q, h_avg));
        }

        // Locate the ring holding both endpoints; non-crossing chords keep
        // them together.
        int target = -1, ia = -1, ib = -1;
        for (std::size_t r = 0; r < rings.size(); ++r) {
            int xa = find_entry(rings[r], a);
            int xb = find_entry(rings[r], b);
            if (xa >= 0 && xb >= 0) {
                target = static_cast<int>(r);
                ia = xa;
                ib = xb;
                break;
            }
        }
        if (target < 0) {
            throw InvalidChord("segmentation chords cross: endpoints ended up in different parts");
        }

        const SplitRing old = std::move(rings[static_cast<std::size_t>(target)]);
        const int sz = static_cast<int>(old.entries.size());
        const int lid = static_cast<int>(li);

        auto build_side = [&](int from, int to, bool forward_line) {
            SplitRing r;
            for (int i = from;; i = (i + 1) % sz) {
                r.entries.push_back(old.entries[i]);
                if (i == to) break;
                r.seg_edge.push_back(old.seg_edge[i]);
            }
            // Close the arc with the line points; every closing edge is a
            // segmentation edge.
            if (forward_line) {
                for (int k = 1; k <= static_cast<int>(line.inserted_points.size()); ++k) {
                    r.seg_edge.push_back(1);
                    r.entries.push_back({line.inserted_points[k - 1], -1, lid, k - 1});
                }
            } else {
                for (int k = static_cast<int>(line.inserted_points.size()); k >= 1; --k) {
                    r.seg_edge.push_back(1);
                    r.entries.push_back({line.inserted_points[k - 1], -1, lid, k - 1});
                }
            }
            r.seg_edge.push_back(1);  // closing edge back to entries[0]
            return r;
        };

        // Side A runs the arc a..b then back along the line; side B the rest.
        rings[static_cast<std::size_t>(target)] = build_side(ia, ib, false);
        rings.push_back(build_side(ib, ia, true));
        s.lines.push_back(std::move(line));
    }

    // Materialize sub-holes.
    for (SplitRing& r : rings) {
        SubHole sh;
        const std::size_t sz = r.entries.size();
        std::vector<Vec3> pts;
        pts.reserve(sz);
        for (const SplitEntry& e : r.entries) {
            RingVertex rv;
            rv.pos = e.pos;
            rv.mesh_vertex = e.orig >= 0 ? hole.loop.vertex_indices[e.orig] : -1;
            rv.line = e.line;
            rv.line_k = e.line_k;
            sh.ring.push_back(rv);
            pts.push_back(e.pos);
        }
        sh.seg_edge.assign(r.seg_edge.begin(), r.seg_edge.end());
        sh.ds = mean_edge_length(pts);
        sh.d_H = max_pairwise_distance(pts);
        Vec3 nfit = best_fit_plane_normal(pts);
        if (dot(nfit, f.n) < 0) nfit = -nfit;
        sh.frame = make_frame(centroid_of(pts), nfit);
        s.sub_holes.push_back(std::move(sh));
    }
    return s;
}

}  // namespace holefill
