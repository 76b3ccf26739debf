#pragma once

#include <vector>

#include "holefill/geom.hpp"

namespace holefill {

// Polynomial curve in Bernstein form; degree = control_points.size() - 1.
// Evaluation requires at least 2 control points.
struct BezierCurve {
    std::vector<Vec3> control_points;
};

// Tensor-product patch. control_net[i][j]: i varies along u, j along w.
// Rows must have equal length and both dimensions need at least 2 entries.
// The u = 0/1 boundary curves run through the first/last row, the
// w = 0/1 boundary curves through the first/last column.
struct BezierSurface {
    std::vector<std::vector<Vec3>> control_net;
};

// Bernstein basis value C(n,i) t^i (1-t)^(n-i). The binomial coefficient
// is built multiplicatively, so degrees up to 60 evaluate without passing
// through n!. Throws IndexOutOfRange unless 0 <= i <= n.
double bernstein(int n, int i, double t);

// de Casteljau evaluation at t. Throws DomainError for t outside [0,1]
// or a curve with fewer than 2 control points.
Vec3 curve_eval(const BezierCurve& curve, double t);

// Tensor-product evaluation at (u,w) in [0,1]^2. Throws DomainError for
// parameters outside the unit square or a malformed control net.
Vec3 surface_eval(const BezierSurface& surface, double u, double w);

}  // namespace holefill
