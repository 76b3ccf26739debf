#include "holefill/bezier.hpp"

#include <cmath>
#include <cstddef>

#include "holefill/errors.hpp"

namespace holefill {

double bernstein(int n, int i, double t) {
    if (n < 0 || i < 0 || i > n) {
        throw IndexOutOfRange(i, "bernstein: index outside [0, n]");
    }
    // C(n,i) as a running product of (n-k+j)/j; intermediate values stay
    // near the final magnitude instead of visiting n!.
    int k = i < n - i ? i : n - i;
    double binom = 1.0;
    for (int j = 1; j <= k; ++j) {
        binom *= static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return binom * std::pow(t, i) * std::pow(1.0 - t, n - i);
}

Vec3 curve_eval(const BezierCurve& curve, double t) {
    if (curve.control_points.size() < 2) {
        throw DomainError("curve_eval: curve needs at least 2 control points");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("curve_eval: parameter outside [0, 1]");
    }
    std::vector<Vec3> p = curve.control_points;
    for (std::size_t r = p.size() - 1; r > 0; --r) {
        for (std::size_t j = 0; j < r; ++j) {
            p[j] = p[j] * (1.0 - t) + p[j + 1] * t;
        }
    }
    return p[0];
}

Vec3 surface_eval(const BezierSurface& surface, double u, double w) {
    const auto& net = surface.control_net;
    if (net.size() < 2) {
        throw DomainError("surface_eval: control net needs at least 2 rows");
    }
    const std::size_t cols = net[0].size();
    for (const auto& row : net) {
        if (row.size() != cols) {
            throw DomainError("surface_eval: control net rows differ in length");
        }
    }
    if (cols < 2) {
        throw DomainError("surface_eval: control net needs at least 2 columns");
    }
    if (!(u >= 0.0 && u <= 1.0) || !(w >= 0.0 && w <= 1.0)) {
        throw DomainError("surface_eval: parameter outside the unit square");
    }
    // Collapse the w direction within each row, then the u direction.
    BezierCurve spine;
    spine.control_points.reserve(net.size());
    for (const auto& row : net) {
        spine.control_points.push_back(curve_eval(BezierCurve{row}, w));
    }
    return curve_eval(spine, u);
}

}  // namespace holefill
