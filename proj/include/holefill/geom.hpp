// geom.hpp — small vector types and planar predicates used everywhere else.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace holefill {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline double distance2(const Vec3& a, const Vec3& b) { return norm2(a - b); }
inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Throws ZeroVector on a (near-)zero input.
Vec3 normalized(const Vec3& v);

struct Vec2 {
    double x = 0, y = 0;
    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

// Orthonormal right-handed frame; n is the plane normal.
struct Frame {
    Vec3 origin;
    Vec3 u, v, n;

    Vec2 to_plane(const Vec3& p) const {
        Vec3 d = p - origin;
        return {dot(d, u), dot(d, v)};
    }
    double height(const Vec3& p) const { return dot(p - origin, n); }
    Vec3 from_plane(const Vec2& q, double h) const {
        return origin + u * q.x + v * q.y + n * h;
    }
};

// Builds a frame with the given normal (normalized internally); u, v span the plane.
Frame make_frame(const Vec3& origin, const Vec3& normal);

// Unit normal of the least-squares plane through the points. Orientation is
// arbitrary; callers flip it to match a reference direction.
Vec3 best_fit_plane_normal(const std::vector<Vec3>& points);

// RMS distance of the points from their least-squares plane.
double plane_fit_residual(const std::vector<Vec3>& points);

// Smallest-eigenvalue eigenvector of a symmetric 3x3 matrix (rows a, b, c),
// via cyclic Jacobi sweeps.
Vec3 symmetric3_min_eigenvector(const std::array<double, 6>& upper);  // xx,xy,xz,yy,yz,zz

// ---- planar predicates ----

// Twice the signed area of triangle (a,b,c); >0 when counter-clockwise.
inline double orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double polygon_signed_area(const std::vector<Vec2>& poly);

// True when p is strictly inside or on triangle (a,b,c), any orientation.
bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c);

// Crossing-number test; points on the boundary may report either side.
bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly);

// Proper crossing of open segments (a,b) and (c,d): a single interior
// intersection point. Shared endpoints and collinear touching do not count.
bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// True when the closed polyline has no self-intersection and no repeated vertex.
bool polygon_is_simple(const std::vector<Vec2>& poly);

// Whether chord (poly[i], poly[j]) lies inside the polygon: it must not cross
// any non-incident polygon edge and its interior samples must be inside.
bool chord_inside_polygon(const std::vector<Vec2>& poly, std::size_t i, std::size_t j);

// ---- deterministic sampling ----

// Uniform double in [0, 1) from the top 53 bits of the generator.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace holefill
