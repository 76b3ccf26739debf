#include "holefill/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "holefill/errors.hpp"

namespace holefill {

namespace {

double point_segment_distance2(const Vec3& p, const Vec3& a, const Vec3& b) {
    Vec3 ab = b - a;
    double len2 = norm2(ab);
    if (len2 == 0.0) return distance2(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance2(p, a + ab * t);
}

double edges_min_distance2(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    return std::min({point_segment_distance2(p, a, b), point_segment_distance2(p, b, c),
                     point_segment_distance2(p, c, a)});
}

}  // namespace

double point_triangle_distance2(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    // Voronoi-region walk over the triangle's features.
    Vec3 ab = b - a, ac = c - a, ap = p - a;
    double d1 = dot(ab, ap), d2 = dot(ac, ap);
    if (d1 <= 0 && d2 <= 0) return distance2(p, a);

    Vec3 bp = p - b;
    double d3 = dot(ab, bp), d4 = dot(ac, bp);
    if (d3 >= 0 && d4 <= d3) return distance2(p, b);

    double vc = d1 * d4 - d3 * d2;
    if (vc <= 0 && d1 >= 0 && d3 <= 0) {
        double v = d1 / (d1 - d3);
        return distance2(p, a + ab * v);
    }

    Vec3 cp = p - c;
    double d5 = dot(ab, cp), d6 = dot(ac, cp);
    if (d6 >= 0 && d5 <= d6) return distance2(p, c);

    double vb = d5 * d2 - d1 * d6;
    if (vb <= 0 && d2 >= 0 && d6 <= 0) {
        double w = d2 / (d2 - d6);
        return distance2(p, a + ac * w);
    }

    double va = d3 * d6 - d5 * d4;
    if (va <= 0 && d4 - d3 >= 0 && d5 - d6 >= 0) {
        double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return distance2(p, b + (c - b) * w);
    }

    double denom = va + vb + vc;
    if (!(denom > 0)) {
        // Degenerate triangle: the interior region does not exist, the
        // minimum sits on an edge or corner.
        return edges_min_distance2(p, a, b, c);
    }
    double v = vb / denom, w = vc / denom;
    return distance2(p, a + ab * v + ac * w);
}

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    return std::sqrt(point_triangle_distance2(p, a, b, c));
}

namespace {

// Squared distance from p to the box, zero inside. Rounding can only
// overshoot by a few ulp; callers shave the bound before pruning on it.
double box_distance2(const Vec3& p, const Vec3& lo, const Vec3& hi) {
    double d2 = 0;
    for (int k = 0; k < 3; ++k) {
        double d = std::max({lo[k] - p[k], 0.0, p[k] - hi[k]});
        d2 += d * d;
    }
    return d2;
}

constexpr int kLeafSize = 8;
constexpr double kBoundShave = 1.0 - 1e-12;

}  // namespace

TriangleDistanceIndex::TriangleDistanceIndex(const TriangleMesh& mesh) {
    const int n = mesh.face_count();
    if (n == 0) throw EmptyMesh("distance index needs at least one triangle");
    std::vector<std::array<Vec3, 3>> tris(n);
    std::vector<Vec3> centroids(n);
    std::vector<int> order(n);
    for (int f = 0; f < n; ++f) {
        const Face& face = mesh.faces[f];
        tris[f] = {mesh.vertices[face[0]], mesh.vertices[face[1]], mesh.vertices[face[2]]};
        centroids[f] = (tris[f][0] + tris[f][1] + tris[f][2]) / 3.0;
        order[f] = f;
    }
    nodes_.reserve(2 * n);
    tris_ = std::move(tris);
    build(centroids, order, 0, n);
    // Leaves index contiguous runs of the reordered triangle array.
    std::vector<std::array<Vec3, 3>> reordered(n);
    for (int i = 0; i < n; ++i) reordered[i] = tris_[order[i]];
    tris_ = std::move(reordered);
}

int TriangleDistanceIndex::build(std::vector<Vec3>& centroids, std::vector<int>& order,
                                 int begin, int end) {
    Node node;
    node.lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity()};
    node.hi = -node.lo;
    for (int i = begin; i < end; ++i) {
        for (const Vec3& corner : tris_[order[i]]) {
            for (int k = 0; k < 3; ++k) {
                node.lo[k] = std::min(node.lo[k], corner[k]);
                node.hi[k] = std::max(node.hi[k], corner[k]);
            }
        }
    }
    int index = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    if (end - begin <= kLeafSize) {
        nodes_[index].begin = begin;
        nodes_[index].end = end;
        return index;
    }
    Vec3 extent = node.hi - node.lo;
    int axis = 0;
    if (extent.y > extent[axis]) axis = 1;
    if (extent.z > extent[axis]) axis = 2;
    int mid = begin + (end - begin) / 2;
    std::nth_element(order.begin() + begin, order.begin() + mid, order.begin() + end,
                     [&](int fa, int fb) {
                         double ca = centroids[fa][axis], cb = centroids[fb][axis];
                         return ca < cb || (ca == cb && fa < fb);
                     });
    int left = build(centroids, order, begin, mid);
    int right = build(centroids, order, mid, end);
    nodes_[index].left = left;
    nodes_[index].right = right;
    return index;
}

double TriangleDistanceIndex::distance2(const Vec3& p) const {
    double best = std::numeric_limits<double>::infinity();
    int stack[64];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (box_distance2(p, node.lo, node.hi) * kBoundShave > best) continue;
        if (node.left < 0) {
            for (int i = node.begin; i < node.end; ++i) {
                const auto& t = tris_[i];
                best = std::min(best, point_triangle_distance2(p, t[0], t[1], t[2]));
            }
            continue;
        }
        // Nearer child on top of the stack so it is searched first.
        double dl = box_distance2(p, nodes_[node.left].lo, nodes_[node.left].hi);
        double dr = box_distance2(p, nodes_[node.right].lo, nodes_[node.right].hi);
        int near = node.left, far = node.right;
        if (dr < dl) std::swap(near, far);
        stack[top++] = far;
        stack[top++] = near;
    }
    return best;
}

double TriangleDistanceIndex::distance(const Vec3& p) const { return std::sqrt(distance2(p)); }

namespace {

// Distinct per-face streams derived from one seed, so each face's draws do
// not depend on how many samples other faces received.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t face) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (face + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<SurfaceSample> sample_surface(const TriangleMesh& mesh, const SamplingSpec& spec,
                                          std::uint64_t seed) {
    if (spec.max_samples <= 0) throw ConfigError("sample_surface: max_samples must be positive");
    const int nv = mesh.vertex_count();
    const int nf = mesh.face_count();

    std::vector<double> vertex_weight(nv, 0.0);
    std::vector<double> face_area(nf, 0.0);
    double total_area = 0;
    for (int f = 0; f < nf; ++f) {
        double a = mesh.face_area(f);
        face_area[f] = a;
        total_area += a;
        for (int corner : mesh.faces[f]) vertex_weight[corner] += a / 3.0;
    }

    std::vector<SurfaceSample> samples;
    samples.reserve(nv);
    for (int v = 0; v < nv; ++v) samples.push_back({mesh.vertices[v], vertex_weight[v]});

    if (spec.mode != SamplingMode::VerticesPlusFaceSamples || nf == 0 || total_area <= 0) {
        return samples;
    }
    if (spec.total_budget <= 0 && spec.samples_per_avg_area <= 0) {
        throw ConfigError("sample_surface: face sampling needs a positive budget or density");
    }

    double target = spec.total_budget > 0
                        ? static_cast<double>(spec.total_budget)
                        : spec.samples_per_avg_area * static_cast<double>(nf);
    long long left = static_cast<long long>(spec.max_samples) - nv;
    if (left <= 0) return samples;
    double scale = target > static_cast<double>(left) ? static_cast<double>(left) / target : 1.0;

    for (int f = 0; f < nf && left > 0; ++f) {
        double quota = target * scale * face_area[f] / total_area;
        long long k = std::min(std::llround(quota), left);
        if (k <= 0) continue;
        left -= k;
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(f)));
        const Face& face = mesh.faces[f];
        Vec3 a = mesh.vertices[face[0]];
        Vec3 ab = mesh.vertices[face[1]] - a;
        Vec3 ac = mesh.vertices[face[2]] - a;
        double w = face_area[f] / static_cast<double>(k);
        for (long long i = 0; i < k; ++i) {
            double u = uniform01(rng), v = uniform01(rng);
            if (u + v > 1.0) {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            samples.push_back({a + ab * u + ac * v, w});
        }
    }
    return samples;
}

namespace {

// Shared serial reduction: both the accelerated and the reference path fold
// their per-sample distances with this exact loop, keeping them bit-equal.
OneSidedResult reduce_samples(const std::vector<SurfaceSample>& samples,
                              const std::vector<double>& dist) {
    OneSidedResult r;
    r.sample_count = samples.size();
    double weighted_sum = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        r.max = std::max(r.max, dist[i]);
        weighted_sum += samples[i].weight * dist[i];
        r.total_weight += samples[i].weight;
    }
    r.mean = r.total_weight > 0 ? weighted_sum / r.total_weight : 0.0;
    return r;
}

void require_faces(const TriangleMesh& from, const TriangleMesh& to) {
    if (from.face_count() == 0) throw EmptyMesh("one_sided_distance: source mesh has no faces");
    if (to.face_count() == 0) throw EmptyMesh("one_sided_distance: target mesh has no faces");
}

}  // namespace

OneSidedResult one_sided_distance(const TriangleMesh& from, const TriangleMesh& to,
                                  const SamplingSpec& spec, std::uint64_t seed) {
    require_faces(from, to);
    std::vector<SurfaceSample> samples = sample_surface(from, spec, seed);
    TriangleDistanceIndex index(to);
    std::vector<double> dist(samples.size());
    const std::int64_t n = static_cast<std::int64_t>(samples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        dist[static_cast<std::size_t>(i)] = index.distance(samples[static_cast<std::size_t>(i)].pos);
    }
    return reduce_samples(samples, dist);
}

OneSidedResult one_sided_distance_reference(const TriangleMesh& from, const TriangleMesh& to,
                                            const SamplingSpec& spec, std::uint64_t seed) {
    require_faces(from, to);
    std::vector<SurfaceSample> samples = sample_surface(from, spec, seed);
    std::vector<double> dist(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const Face& face : to.faces) {
            best = std::min(best, point_triangle_distance2(samples[i].pos, to.vertices[face[0]],
                                                           to.vertices[face[1]],
                                                           to.vertices[face[2]]));
        }
        dist[i] = std::sqrt(best);
    }
    return reduce_samples(samples, dist);
}

DistanceReport hausdorff_report(const TriangleMesh& s, const TriangleMesh& s2,
                                const SamplingSpec& spec, std::uint64_t seed) {
    DistanceReport report;
    report.forward = one_sided_distance(s, s2, spec, seed);
    report.backward = one_sided_distance(s2, s, spec, seed);
    report.delta_max = std::max(report.forward.max, report.backward.max);
    double weight = report.forward.total_weight + report.backward.total_weight;
    report.delta_avg = weight > 0
                           ? (report.forward.mean * report.forward.total_weight +
                              report.backward.mean * report.backward.total_weight) /
                                 weight
                           : 0.0;
    report.bbox_diagonal = s.bbox_diagonal();
    if (report.bbox_diagonal > 0) {
        report.delta_max_normalized = report.delta_max / report.bbox_diagonal;
        report.delta_avg_normalized = report.delta_avg / report.bbox_diagonal;
    }
    return report;
}

}  // namespace holefill
