#include "holefill/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "holefill/errors.hpp"

namespace holefill {

std::vector<EdgeKey> BoundaryLoop::edge_list() const {
    std::vector<EdgeKey> edges;
    const std::size_t n = vertex_indices.size();
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(vertex_indices[i], vertex_indices[(i + 1) % n]);
    }
    return edges;
}

void TriangleMesh::register_face_edges(int face_index) {
    const Face& f = faces[face_index];
    for (int k = 0; k < 3; ++k) {
        EdgeKey e(f[k], f[(k + 1) % 3]);
        auto [it, fresh] = edge_faces_.try_emplace(e, std::array<int, 2>{face_index, -1});
        if (!fresh) {
            if (it->second[1] != -1) {
                throw NonManifoldEdge(e.a, e.b, 3,
                                      "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                          ") would have 3 incident faces");
            }
            it->second[1] = face_index;
        }
    }
    for (int k = 0; k < 3; ++k) vertex_faces_[f[k]].push_back(face_index);
}

void TriangleMesh::recompute_bbox() {
    if (vertices.empty()) {
        bbox_lo_ = bbox_hi_ = Vec3{0, 0, 0};
        bbox_diag_ = 0;
        return;
    }
    bbox_lo_ = bbox_hi_ = vertices[0];
    for (const auto& p : vertices) {
        bbox_lo_.x = std::min(bbox_lo_.x, p.x);
        bbox_lo_.y = std::min(bbox_lo_.y, p.y);
        bbox_lo_.z = std::min(bbox_lo_.z, p.z);
        bbox_hi_.x = std::max(bbox_hi_.x, p.x);
        bbox_hi_.y = std::max(bbox_hi_.y, p.y);
        bbox_hi_.z = std::max(bbox_hi_.z, p.z);
    }
    bbox_diag_ = norm(bbox_hi_ - bbox_lo_);
}

TriangleMesh TriangleMesh::build(std::vector<Vec3> vertices, std::vector<Face> faces,
                                 const BuildOptions& opts) {
    TriangleMesh m;
    const int nv = static_cast<int>(vertices.size());
    for (int v = 0; v < nv; ++v) {
        if (!is_finite(vertices[v])) {
            throw MeshError("vertex " + std::to_string(v) + " has a non-finite coordinate");
        }
    }
    m.vertices = std::move(vertices);
    m.faces = std::move(faces);
    m.vertex_faces_.resize(m.vertices.size());
    m.recompute_bbox();

    std::set<std::array<int, 3>> seen;
    for (int fi = 0; fi < m.face_count(); ++fi) {
        const Face& f = m.faces[fi];
        for (int k = 0; k < 3; ++k) {
            if (f[k] < 0 || f[k] >= nv) {
                throw IndexOutOfRange(fi, "face " + std::to_string(fi) + " references vertex " +
                                              std::to_string(f[k]) + " outside [0," +
                                              std::to_string(nv) + ")");
            }
        }
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
            throw InvalidFace(fi, "face " + std::to_string(fi) + " repeats a vertex");
        }
        if (!opts.allow_duplicate_faces) {
            std::array<int, 3> key{f[0], f[1], f[2]};
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) {
                throw DuplicateFace(fi, "face " + std::to_string(fi) +
                                            " duplicates an earlier face on the same vertices");
            }
        }
        m.register_face_edges(fi);
    }

    const double area_eps = 1e-15 * m.bbox_diag_ * m.bbox_diag_;
    for (int fi = 0; fi < m.face_count(); ++fi) {
        const Face& f = m.faces[fi];
        Vec3 c = cross(m.vertices[f[1]] - m.vertices[f[0]], m.vertices[f[2]] - m.vertices[f[0]]);
        if (norm(c) <= area_eps) m.degenerate_faces.push_back(fi);
    }
    return m;
}

int TriangleMesh::add_vertex(const Vec3& p) {
    if (!is_finite(p)) throw MeshError("added vertex has a non-finite coordinate");
    vertices.push_back(p);
    vertex_faces_.emplace_back();
    if (vertices.size() == 1) {
        bbox_lo_ = bbox_hi_ = p;
    } else {
        bbox_lo_.x = std::min(bbox_lo_.x, p.x);
        bbox_lo_.y = std::min(bbox_lo_.y, p.y);
        bbox_lo_.z = std::min(bbox_lo_.z, p.z);
        bbox_hi_.x = std::max(bbox_hi_.x, p.x);
        bbox_hi_.y = std::max(bbox_hi_.y, p.y);
        bbox_hi_.z = std::max(bbox_hi_.z, p.z);
    }
    bbox_diag_ = norm(bbox_hi_ - bbox_lo_);
    return vertex_count() - 1;
}

int TriangleMesh::add_face(int a, int b, int c) {
    const int nv = vertex_count();
    if (a < 0 || a >= nv || b < 0 || b >= nv || c < 0 || c >= nv) {
        throw IndexOutOfRange(face_count(), "added face references a vertex outside the mesh");
    }
    if (a == b || b == c || a == c) {
        throw InvalidFace(face_count(), "added face repeats a vertex");
    }
    faces.push_back({a, b, c});
    try {
        register_face_edges(face_count() - 1);
    } catch (...) {
        faces.pop_back();
        throw;
    }
    return face_count() - 1;
}

std::array<int, 2> TriangleMesh::edge_faces(int u, int v) const {
    auto it = edge_faces_.find(EdgeKey(u, v));
    if (it == edge_faces_.end()) return {-1, -1};
    return it->second;
}

int TriangleMesh::edge_face_count(int u, int v) const {
    auto f = edge_faces(u, v);
    return (f[0] >= 0 ? 1 : 0) + (f[1] >= 0 ? 1 : 0);
}

std::vector<EdgeKey> TriangleMesh::boundary_edges() const {
    std::vector<EdgeKey> out;
    for (const auto& [e, inc] : edge_faces_) {
        if (inc[1] == -1) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BoundaryLoop> TriangleMesh::boundary_loops() const {
    // Directed boundary half-edges follow their face's winding: face (a,b,c)
    // with one-face edge (a,b) contributes a->b. Each loop is the cycle of
    // these directed edges.
    std::map<int, int> next;  // start vertex -> end vertex
    for (int fi = 0; fi < face_count(); ++fi) {
        const Face& f = faces[fi];
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            auto inc = edge_faces(a, b);
            if (inc[1] == -1) {
                if (!next.try_emplace(a, b).second) {
                    throw DegenerateBoundary(
                        a, "boundary vertex " + std::to_string(a) +
                               " has more than two incident boundary edges");
                }
            }
        }
    }
    // A well-formed boundary has equal in/out degree 1 everywhere; a missing
    // outgoing edge for some loop vertex shows up as an untraceable cycle.
    std::vector<BoundaryLoop> loops;
    std::set<int> visited;
    for (const auto& [start, unused] : next) {
        if (visited.count(start)) continue;
        BoundaryLoop loop;
        int v = start;
        while (true) {
            loop.vertex_indices.push_back(v);
            visited.insert(v);
            auto it = next.find(v);
            if (it == next.end()) {
                throw DegenerateBoundary(v, "boundary chain breaks at vertex " +
                                                std::to_string(v));
            }
            v = it->second;
            if (v == start) break;
            if (visited.count(v)) {
                throw DegenerateBoundary(v, "boundary loops touch at vertex " +
                                                std::to_string(v));
            }
        }
        loops.push_back(std::move(loop));
    }
    // Canonical order: each loop starts at its smallest vertex; loops sorted by it.
    for (auto& loop : loops) {
        auto& vi = loop.vertex_indices;
        auto mn = std::min_element(vi.begin(), vi.end());
        std::rotate(vi.begin(), mn, vi.end());
    }
    std::sort(loops.begin(), loops.end(), [](const BoundaryLoop& a, const BoundaryLoop& b) {
        return a.vertex_indices[0] < b.vertex_indices[0];
    });
    return loops;
}

Vec3 TriangleMesh::face_normal(int face) const {
    const Face& f = faces[face];
    Vec3 c = cross(vertices[f[1]] - vertices[f[0]], vertices[f[2]] - vertices[f[0]]);
    if (norm(c) <= 1e-15 * bbox_diag_ * bbox_diag_) {
        throw DegenerateFace(face, "face " + std::to_string(face) + " has zero area");
    }
    return c / norm(c);
}

Vec3 TriangleMesh::vertex_normal(int vertex) const {
    const auto& incident = vertex_faces_[vertex];
    if (incident.empty()) {
        throw MeshError("vertex " + std::to_string(vertex) + " has no incident face");
    }
    // The cross product carries twice the face area, so summing raw cross
    // products is the area weighting.
    Vec3 sum{0, 0, 0};
    const double area_eps = 1e-15 * bbox_diag_ * bbox_diag_;
    for (int fi : incident) {
        const Face& f = faces[fi];
        Vec3 c = cross(vertices[f[1]] - vertices[f[0]], vertices[f[2]] - vertices[f[0]]);
        if (norm(c) <= area_eps) continue;
        sum += c;
    }
    double n = norm(sum);
    if (n < 1e-300) {
        throw MeshError("vertex " + std::to_string(vertex) +
                        " has no non-degenerate incident face");
    }
    return sum / n;
}

bool TriangleMesh::orientation_consistent() const {
    std::unordered_map<EdgeKey, int, EdgeKeyHash> balance;
    for (const Face& f : faces) {
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            balance[EdgeKey(a, b)] += (a < b) ? 1 : -1;
        }
    }
    for (const auto& [e, bal] : balance) {
        int count = edge_face_count(e.a, e.b);
        if (count == 2 && bal != 0) return false;
        if (count == 1 && std::abs(bal) != 1) return false;
    }
    return true;
}

double TriangleMesh::face_area(int face) const {
    const Face& f = faces[face];
    return 0.5 * norm(cross(vertices[f[1]] - vertices[f[0]], vertices[f[2]] - vertices[f[0]]));
}

Vec3 TriangleMesh::face_centroid(int face) const {
    const Face& f = faces[face];
    return (vertices[f[0]] + vertices[f[1]] + vertices[f[2]]) / 3.0;
}

}  // namespace holefill
