#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "complex_matrix.hpp"
#include "hermitian_eigen.hpp"
#include "planar.hpp"
#include "regions.hpp"

namespace sectoria {

/// Certified two-sided polygonal approximation of the numerical range
/// W(A) = {(Au, u) : |u| = 1}. W(A) is convex, so
///   conv{support_points} <= W(A) <= outer polygon,
/// and `gap` bounds the Hausdorff distance between the two polygons (hence
/// between the outer polygon and W(A)).
struct RangeHull {
    std::vector<double> angles;         // theta_k = 2 pi k / m
    std::vector<double> support_values; // h(theta_k) = max Re(e^{-i theta} W(A))
    std::vector<cplx> support_points;   // boundary points of W(A)
    std::vector<cplx> outer_vertices;   // consecutive support-line intersections
    double gap = 0.0;

    std::vector<cplx> inner_hull() const {
        std::vector<planar::point> pts(support_points.begin(), support_points.end());
        return planar::convex_hull(pts);
    }
};

/// Support function and a witness boundary point of W(A) in direction theta:
/// h = lambda_max(Re(e^{-i theta} A)) and p = (Av, v) for a top unit
/// eigenvector v, so Re(e^{-i theta} p) = h and p lies in W(A).
inline std::pair<double, cplx> support_point(const CMatrix& a, double theta) {
    const auto [re, im] = cartesian_parts(a * std::polar(1.0, -theta));
    (void)im;
    const HermEigen eig = herm_eigen(re);
    const int n = a.dim();
    CVector v(n);
    for (int i = 0; i < n; ++i) v[i] = eig.vectors(i, n - 1);
    const double nrm = vec_norm(v);
    for (cplx& x : v) x /= nrm;
    return {eig.values.back(), quadratic_form(a, v)};
}

inline RangeHull compute_hull(const CMatrix& a, int m) {
    if (m < 16) throw std::invalid_argument("compute_hull: need at least 16 angles");
    constexpr double two_pi = 2.0 * std::numbers::pi;

    RangeHull hull;
    hull.angles.reserve(m);
    hull.support_values.reserve(m);
    hull.support_points.reserve(m);
    for (int k = 0; k < m; ++k) {
        const double theta = two_pi * k / m;
        auto [h, p] = support_point(a, theta);
        hull.angles.push_back(theta);
        hull.support_values.push_back(h);
        hull.support_points.push_back(p);
    }

    // Outer vertex k solves Re(e^{-i theta_k} z) = h_k for consecutive k.
    // The 2x2 system has determinant sin(2 pi / m), bounded away from 0.
    const double det = std::sin(two_pi / m);
    hull.outer_vertices.reserve(m);
    for (int k = 0; k < m; ++k) {
        const int j = (k + 1) % m;
        const double ck = std::cos(hull.angles[k]), sk = std::sin(hull.angles[k]);
        const double cj = std::cos(hull.angles[j]), sj = std::sin(hull.angles[j]);
        const double hk = hull.support_values[k], hj = hull.support_values[j];
        hull.outer_vertices.push_back(
            cplx((hk * sj - hj * sk) / det, (hj * ck - hk * cj) / det));
    }

    const std::vector<cplx> inner = hull.inner_hull();
    for (const cplx v : hull.outer_vertices)
        hull.gap = std::max(hull.gap, planar::distance_to_polygon(v, inner));
    return hull;
}

struct HullContainmentReport {
    bool pass = false;
    double worst_dist = 0.0;
    cplx witness{};
    double allowance = 0.0; // tol + hull.gap actually applied
};

/// Soundness-first containment: pass iff every OUTER vertex is within
/// tol + gap of the region. Since W(A) is inside the outer polygon and the
/// region is convex, pass implies W(A) is inside the (tol+gap)-inflation of
/// the region; discretization can cause false failures but never false passes.
inline HullContainmentReport hull_in_region(const RangeHull& hull, const RegionSpec& spec,
                                            double tol) {
    HullContainmentReport rep;
    rep.allowance = tol + hull.gap;
    std::vector<cplx> cache;
    for (const cplx v : hull.outer_vertices) {
        if (margin(spec, v) >= 0.0) continue;
        if (cache.empty()) cache = boundary_samples(spec, 1024).points;
        const double d = dist_to_region(spec, v, cache);
        if (d > rep.worst_dist) {
            rep.worst_dist = d;
            rep.witness = v;
        }
    }
    rep.pass = rep.worst_dist <= rep.allowance;
    return rep;
}

} // namespace sectoria
