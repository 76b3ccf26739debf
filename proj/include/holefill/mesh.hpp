// mesh.hpp — indexed triangle mesh with edge adjacency, manifold-with-boundary
// enforced at construction. Indices are 0-based ints throughout.
#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "holefill/geom.hpp"

namespace holefill {

using Face = std::array<int, 3>;

// Undirected edge key, endpoints sorted.
struct EdgeKey {
    int a = -1, b = -1;
    EdgeKey() = default;
    EdgeKey(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
    bool operator<(const EdgeKey& o) const { return a < o.a || (a == o.a && b < o.b); }
};

struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& e) const {
        return std::hash<std::uint64_t>()(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.a)) << 32) |
            static_cast<std::uint32_t>(e.b));
    }
};

struct BuildOptions {
    bool allow_duplicate_faces = false;
};

// Closed, simple ring of boundary vertices. Consecutive entries are joined by
// one-face edges; traversal follows the incident faces' own winding, so a fill
// creates faces running the opposite way along each boundary edge.
struct BoundaryLoop {
    std::vector<int> vertex_indices;

    std::size_t size() const { return vertex_indices.size(); }
    std::vector<EdgeKey> edge_list() const;
};

class TriangleMesh {
  public:
    std::vector<Vec3> vertices;
    std::vector<Face> faces;

    // Faces flagged as zero-area at build time; kept in the face list.
    std::vector<int> degenerate_faces;

    // Validates indices, rejects duplicate faces (unless allowed) and edges
    // with three or more incident faces, then derives adjacency.
    static TriangleMesh build(std::vector<Vec3> vertices, std::vector<Face> faces,
                              const BuildOptions& opts = {});

    TriangleMesh() = default;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return static_cast<int>(edge_faces_.size()); }

    // Incremental growth used by the fill algorithms. add_face keeps the
    // adjacency maps current and rejects a third face on any edge.
    int add_vertex(const Vec3& p);
    int add_face(int a, int b, int c);

    // Faces incident to an edge; {-1,-1} when the edge does not exist.
    std::array<int, 2> edge_faces(int u, int v) const;
    int edge_face_count(int u, int v) const;

    const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }
    const std::unordered_map<EdgeKey, std::array<int, 2>, EdgeKeyHash>& edge_map() const {
        return edge_faces_;
    }

    // Edges with exactly one incident face, sorted for determinism.
    std::vector<EdgeKey> boundary_edges() const;

    // Traces every boundary edge into closed simple loops. Throws
    // DegenerateBoundary when a vertex carries more than two boundary edges.
    std::vector<BoundaryLoop> boundary_loops() const;

    // Unit normal of a face; throws DegenerateFace below the area threshold.
    Vec3 face_normal(int face) const;

    // Area-weighted average of incident face normals, normalized. Degenerate
    // faces contribute nothing; throws if no usable face remains.
    Vec3 vertex_normal(int vertex) const;

    int euler_characteristic() const {
        return vertex_count() - edge_count() + face_count();
    }

    double bbox_diagonal() const { return bbox_diag_; }

    // True when every interior edge is traversed once in each direction by its
    // two faces — i.e. windings agree across the whole mesh.
    bool orientation_consistent() const;

    double face_area(int face) const;
    Vec3 face_centroid(int face) const;

  private:
    std::unordered_map<EdgeKey, std::array<int, 2>, EdgeKeyHash> edge_faces_;
    std::vector<std::vector<int>> vertex_faces_;
    Vec3 bbox_lo_{0, 0, 0};
    Vec3 bbox_hi_{0, 0, 0};
    double bbox_diag_ = 0;

    void register_face_edges(int face_index);
    void recompute_bbox();
};

}  // namespace holefill
