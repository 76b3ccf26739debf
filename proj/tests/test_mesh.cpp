#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "holefill/errors.hpp"
#include "holefill/mesh.hpp"

using namespace holefill;

namespace {

TriangleMesh tetrahedron() {
    std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    // Outward-facing windings.
    std::vector<Face> f{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
    return TriangleMesh::build(v, f);
}

TriangleMesh octahedron() {
    std::vector<Vec3> v{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<Face> f{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                        {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
    return TriangleMesh::build(v, f);
}

// (n+1)x(n+1) vertex grid in the xy-plane, 2*n*n upward-facing triangles.
TriangleMesh grid(int n) {
    std::vector<Vec3> v;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) v.push_back({double(i), double(j), 0});
    auto id = [n](int i, int j) { return j * (n + 1) + i; };
    std::vector<Face> f;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            f.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return TriangleMesh::build(v, f);
}

// Same grid with all faces touching vertex (ci,cj) removed, leaving a hole.
TriangleMesh grid_with_hole(int n, int ci, int cj) {
    TriangleMesh full = grid(n);
    int center = cj * (n + 1) + ci;
    std::vector<Face> kept;
    for (const Face& f : full.faces) {
        if (f[0] != center && f[1] != center && f[2] != center) kept.push_back(f);
    }
    return TriangleMesh::build(full.vertices, kept);
}

}  // namespace

TEST_CASE("single triangle") {
    TriangleMesh m = TriangleMesh::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
    CHECK(m.vertex_count() == 3);
    CHECK(m.face_count() == 1);
    CHECK(m.edge_count() == 3);
    CHECK(m.boundary_edges().size() == 3);
    CHECK(m.euler_characteristic() == 1);
    auto loops = m.boundary_loops();
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].vertex_indices == std::vector<int>{0, 1, 2});
    CHECK(m.face_normal(0) == Vec3{0, 0, 1});
    CHECK(m.face_area(0) == doctest::Approx(0.5));
    CHECK(m.face_centroid(0) == Vec3{1.0 / 3, 1.0 / 3, 0});
    CHECK(m.orientation_consistent());
}

TEST_CASE("two-triangle quad") {
    TriangleMesh m = TriangleMesh::build({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}},
                                         {{0, 1, 2}, {0, 2, 3}});
    CHECK(m.edge_count() == 5);
    CHECK(m.boundary_edges().size() == 4);
    CHECK(m.euler_characteristic() == 1);
    auto diag = m.edge_faces(0, 2);
    CHECK(diag[0] != -1);
    CHECK(diag[1] != -1);
    CHECK(m.edge_face_count(0, 2) == 2);
    CHECK(m.edge_face_count(0, 1) == 1);
    CHECK(m.edge_face_count(1, 3) == 0);
    auto loops = m.boundary_loops();
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].vertex_indices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("closed meshes have no boundary and euler 2") {
    for (const TriangleMesh& m : {tetrahedron(), octahedron()}) {
        CHECK(m.boundary_edges().empty());
        CHECK(m.boundary_loops().empty());
        CHECK(m.euler_characteristic() == 2);
        CHECK(m.orientation_consistent());
        CHECK(m.degenerate_faces.empty());
    }
}

TEST_CASE("build rejects malformed input") {
    std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(TriangleMesh::build(v, {{0, 1, 7}}), IndexOutOfRange);
    CHECK_THROWS_AS(TriangleMesh::build(v, {{0, 1, -1}}), IndexOutOfRange);
    CHECK_THROWS_AS(TriangleMesh::build(v, {{0, 1, 1}}), InvalidFace);
    CHECK_THROWS_AS(TriangleMesh::build(v, {{0, 1, 2}, {0, 1, 2}}), DuplicateFace);
    // A duplicate with different winding still covers the same vertices.
    CHECK_THROWS_AS(TriangleMesh::build(v, {{0, 1, 2}, {0, 2, 1}}), DuplicateFace);
    // Three faces on edge (0,1).
    std::vector<Vec3> v5 = v;
    v5.push_back({1, 1, 1});
    CHECK_THROWS_AS(TriangleMesh::build(v5, {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}}), NonManifoldEdge);

    BuildOptions allow;
    allow.allow_duplicate_faces = true;
    TriangleMesh dup = TriangleMesh::build(v, {{0, 1, 2}, {0, 2, 1}}, allow);
    CHECK(dup.face_count() == 2);
}

TEST_CASE("degenerate faces are flagged but kept") {
    TriangleMesh m = TriangleMesh::build({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}},
                                         {{0, 1, 3}, {0, 1, 2}});
    CHECK(m.face_count() == 2);
    REQUIRE(m.degenerate_faces == std::vector<int>{1});
    CHECK_THROWS_AS(m.face_normal(1), DegenerateFace);
    CHECK(m.face_normal(0) == Vec3{0, 0, 1});
}

TEST_CASE("grid with a hole exposes two loops and exact edge classification") {
    const int n = 8;
    TriangleMesh m = grid_with_hole(n, 4, 4);

    // Oracle: incidence counts recomputed by scanning every face per edge.
    std::map<EdgeKey, int> expected;
    for (const Face& f : m.faces) {
        for (int k = 0; k < 3; ++k) expected[EdgeKey(f[k], f[(k + 1) % 3])]++;
    }
    CHECK(m.edge_count() == static_cast<int>(expected.size()));
    for (const auto& [e, count] : expected) {
        CHECK(m.edge_face_count(e.a, e.b) == count);
        auto inc = m.edge_faces(e.a, e.b);
        for (int fi : inc) {
            if (fi == -1) continue;
            const Face& f = m.faces[fi];
            bool has_a = f[0] == e.a || f[1] == e.a || f[2] == e.a;
            bool has_b = f[0] == e.b || f[1] == e.b || f[2] == e.b;
            CHECK(has_a);
            CHECK(has_b);
        }
    }

    auto boundary = m.boundary_edges();
    std::set<EdgeKey> boundary_set(boundary.begin(), boundary.end());
    for (const auto& [e, count] : expected) {
        CHECK(boundary_set.count(e) == (count == 1 ? 1u : 0u));
    }
    CHECK(std::is_sorted(boundary.begin(), boundary.end()));

    auto loops = m.boundary_loops();
    REQUIRE(loops.size() == 2);
    CHECK(loops[0].size() + loops[1].size() == boundary.size());

    // Loops partition the boundary edges.
    std::set<EdgeKey> from_loops;
    for (const auto& loop : loops) {
        for (const EdgeKey& e : loop.edge_list()) {
            CHECK(from_loops.insert(e).second);
        }
    }
    CHECK(from_loops == boundary_set);

    // Hole loop: the 6 neighbors of the removed center vertex.
    const auto& hole = loops[0].size() < loops[1].size() ? loops[0] : loops[1];
    CHECK(hole.size() == 6);

    // Canonical start and ordering.
    for (const auto& loop : loops) {
        CHECK(*std::min_element(loop.vertex_indices.begin(), loop.vertex_indices.end()) ==
              loop.vertex_indices[0]);
    }
    CHECK(loops[0].vertex_indices[0] < loops[1].vertex_indices[0]);
}

TEST_CASE("boundary loops follow face winding") {
    const int n = 6;
    TriangleMesh m = grid_with_hole(n, 3, 3);
    for (const auto& loop : m.boundary_loops()) {
        const auto& vi = loop.vertex_indices;
        for (std::size_t i = 0; i < vi.size(); ++i) {
            int u = vi[i], v = vi[(i + 1) % vi.size()];
            // Directed edge (u, v) must appear in exactly one face.
            int appearances = 0;
            for (const Face& f : m.faces) {
                for (int k = 0; k < 3; ++k) {
                    if (f[k] == u && f[(k + 1) % 3] == v) ++appearances;
                }
            }
            CHECK(appearances == 1);
        }
    }
}

TEST_CASE("boundary loop tracing rejects pinched boundaries") {
    // Two triangles sharing only vertex 2: four boundary edges meet there.
    TriangleMesh m = TriangleMesh::build(
        {{0, 0, 0}, {1, 0, 0}, {0.5, 0.5, 0}, {0, 1, 0}, {1, 1, 0}},
        {{0, 1, 2}, {2, 4, 3}});
    CHECK(m.boundary_edges().size() == 6);
    CHECK_THROWS_AS(m.boundary_loops(), DegenerateBoundary);
}

TEST_CASE("vertex normals are area-weighted") {
    // Two coplanar faces: normal matches the plane.
    TriangleMesh flat = TriangleMesh::build({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}},
                                            {{0, 1, 2}, {0, 2, 3}});
    CHECK(norm(flat.vertex_normal(0) - Vec3{0, 0, 1}) == doctest::Approx(0.0));

    // Ridge: equal-area faces tilted +-45 degrees average to straight up.
    TriangleMesh ridge = TriangleMesh::build(
        {{0, 0, 0}, {0, 2, 0}, {1, 0, 1}, {1, 2, 1}, {-1, 0, 1}, {-1, 2, 1}},
        {{0, 2, 3}, {0, 3, 1}, {0, 1, 5}, {0, 5, 4}});
    Vec3 nr = ridge.vertex_normal(0);
    CHECK(nr.x == doctest::Approx(0.0));
    CHECK(nr.z == doctest::Approx(1.0).epsilon(1e-9));

    // Doubling one side's area tilts the normal toward it.
    TriangleMesh skew = TriangleMesh::build(
        {{0, 0, 0}, {0, 2, 0}, {2, 0, 2}, {2, 2, 2}, {-1, 0, 1}, {-1, 2, 1}},
        {{0, 2, 3}, {0, 3, 1}, {0, 1, 5}, {0, 5, 4}});
    Vec3 ns = skew.vertex_normal(0);
    CHECK(ns.x < -1e-3);

    // Isolated vertices have no usable normal.
    TriangleMesh lonely = TriangleMesh::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 5, 5}},
                                              {{0, 1, 2}});
    CHECK_THROWS_AS(lonely.vertex_normal(3), MeshError);
}

TEST_CASE("incremental growth keeps adjacency current") {
    TriangleMesh m;
    int a = m.add_vertex({0, 0, 0});
    int b = m.add_vertex({1, 0, 0});
    int c = m.add_vertex({0, 1, 0});
    CHECK(m.add_face(a, b, c) == 0);
    CHECK(m.edge_count() == 3);
    CHECK(m.edge_face_count(a, b) == 1);

    int d = m.add_vertex({1, 1, 0});
    m.add_face(b, d, c);
    CHECK(m.edge_face_count(b, c) == 2);
    CHECK(m.boundary_edges().size() == 4);
    CHECK(m.vertex_faces(b).size() == 2);
    CHECK(m.bbox_diagonal() == doctest::Approx(std::sqrt(2.0)));

    // A third face on (b, c) is rejected and leaves the mesh unchanged.
    int e = m.add_vertex({2, 2, 0});
    CHECK_THROWS_AS(m.add_face(b, c, e), NonManifoldEdge);
    CHECK(m.face_count() == 2);
    CHECK(m.edge_face_count(b, c) == 2);
    CHECK_THROWS_AS(m.add_face(a, a, b), InvalidFace);
    CHECK_THROWS_AS(m.add_face(a, b, 99), IndexOutOfRange);
    CHECK(m.orientation_consistent());
}

TEST_CASE("orientation consistency detects a flipped face") {
    TriangleMesh good = tetrahedron();
    CHECK(good.orientation_consistent());

    std::vector<Vec3> v{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<Face> f{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {2, 1, 3}};  // last face flipped
    TriangleMesh bad = TriangleMesh::build(v, f);
    CHECK(!bad.orientation_consistent());
}

TEST_CASE("incidence sums match three per face") {
    TriangleMesh m = grid_with_hole(8, 3, 5);
    std::size_t total = 0;
    for (const auto& [e, inc] : m.edge_map()) {
        (void)e;
        total += (inc[0] >= 0) + (inc[1] >= 0);
    }
    CHECK(total == 3 * m.faces.size());

    std::size_t vertex_incidences = 0;
    for (int v = 0; v < m.vertex_count(); ++v) vertex_incidences += m.vertex_faces(v).size();
    CHECK(vertex_incidences == 3 * m.faces.size());
}

TEST_CASE("bounding box diagonal") {
    TriangleMesh m = TriangleMesh::build({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}, {0, 0, 6}},
                                         {{0, 1, 2}});
    CHECK(m.bbox_diagonal() == doctest::Approx(7.0));
}
