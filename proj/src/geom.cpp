#include "holefill/geom.hpp"

#include <algorithm>
#include <cmath>

#include "holefill/errors.hpp"

namespace holefill {

Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    if (n < 1e-300) throw ZeroVector("cannot normalize a zero vector");
    return v / n;
}

Frame make_frame(const Vec3& origin, const Vec3& normal) {
    Frame f;
    f.origin = origin;
    f.n = normalized(normal);
    // Pick the axis least aligned with n to seed u.
    Vec3 seed = std::abs(f.n.x) <= std::abs(f.n.y) && std::abs(f.n.x) <= std::abs(f.n.z)
                    ? Vec3{1, 0, 0}
                    : (std::abs(f.n.y) <= std::abs(f.n.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    f.u = normalized(cross(seed, f.n));
    f.v = cross(f.n, f.u);
    return f;
}

Vec3 symmetric3_min_eigenvector(const std::array<double, 6>& upper) {
    // a = [[xx, xy, xz], [xy, yy, yz], [xz, yz, zz]]
    double a[3][3] = {{upper[0], upper[1], upper[2]},
                      {upper[1], upper[3], upper[4]},
                      {upper[2], upper[4], upper[5]}};
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off < 1e-30) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    int mi = 0;
    if (a[1][1] < a[mi][mi]) mi = 1;
    if (a[2][2] < a[mi][mi]) mi = 2;
    return normalized(Vec3{v[0][mi], v[1][mi], v[2][mi]});
}

static std::array<double, 6> covariance(const std::vector<Vec3>& points, Vec3& centroid) {
    centroid = {0, 0, 0};
    for (const auto& p : points) centroid += p;
    centroid = centroid / static_cast<double>(points.size());
    std::array<double, 6> c{};  // xx,xy,xz,yy,yz,zz
    for (const auto& p : points) {
        Vec3 d = p - centroid;
        c[0] += d.x * d.x;
        c[1] += d.x * d.y;
        c[2] += d.x * d.z;
        c[3] += d.y * d.y;
        c[4] += d.y * d.z;
        c[5] += d.z * d.z;
    }
    return c;
}

Vec3 best_fit_plane_normal(const std::vector<Vec3>& points) {
    if (points.size() < 3) throw DomainError("plane fit needs at least 3 points");
    Vec3 centroid;
    auto c = covariance(points, centroid);
    return symmetric3_min_eigenvector(c);
}

double plane_fit_residual(const std::vector<Vec3>& points) {
    Vec3 n = best_fit_plane_normal(points);
    Vec3 centroid{0, 0, 0};
    for (const auto& p : points) centroid += p;
    centroid = centroid / static_cast<double>(points.size());
    double ss = 0;
    for (const auto& p : points) {
        double h = dot(p - centroid, n);
        ss += h * h;
    }
    return std::sqrt(ss / static_cast<double>(points.size()));
}

double polygon_signed_area(const std::vector<Vec2>& poly) {
    double a = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    double d1 = orient2d(a, b, p);
    double d2 = orient2d(b, c, p);
    double d3 = orient2d(c, a, p);
    bool has_neg = (d1 < 0) || (d2 < 0) || (d3 < 0);
    bool has_pos = (d1 > 0) || (d2 > 0) || (d3 > 0);
    return !(has_neg && has_pos);
}

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    double d1 = orient2d(c, d, a);
    double d2 = orient2d(c, d, b);
    double d3 = orient2d(a, b, c);
    double d4 = orient2d(a, b, d);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool polygon_is_simple(const std::vector<Vec2>& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (poly[i].x == poly[j].x && poly[i].y == poly[j].y) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share an endpoint).
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            const Vec2& c = poly[j];
            const Vec2& d = poly[(j + 1) % n];
            if (segments_properly_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

bool chord_inside_polygon(const std::vector<Vec2>& poly, std::size_t i, std::size_t j) {
    const std::size_t n = poly.size();
    if (i == j) return false;
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t k1 = (k + 1) % n;
        if (k == i || k == j || k1 == i || k1 == j) continue;
        if (segments_properly_intersect(a, b, poly[k], poly[k1])) return false;
    }
    // Interior samples keep chords that skim along the outside from passing.
    for (double t : {0.25, 0.5, 0.75}) {
        Vec2 s{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
        if (!point_in_polygon(s, poly)) return false;
    }
    return true;
}

}  // namespace holefill
