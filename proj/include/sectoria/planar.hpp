#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace sectoria {

namespace planar {

using point = std::complex<double>;

inline double cross(point o, point a, point b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
/// Degenerate inputs collapse to a 1- or 2-point "hull".
inline std::vector<point> convex_hull(std::vector<point> pts) {
    std::sort(pts.begin(), pts.end(), [](point a, point b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) { // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double point_segment_distance(point p, point a, point b) {
    const point ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

/// Signed slack of p against a ccw convex polygon: the minimum over edges of
/// the perpendicular distance to the edge line, positive inside. For
/// degenerate hulls (size < 3) this is minus the distance to the point/segment.
inline double polygon_signed_margin(point p, const std::vector<point>& hull) {
    if (hull.empty()) return -std::numeric_limits<double>::infinity();
    if (hull.size() == 1) return -std::abs(p - hull[0]);
    if (hull.size() == 2) return -point_segment_distance(p, hull[0], hull[1]);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const point a = hull[i];
        const point b = hull[(i + 1) % hull.size()];
        const double len = std::abs(b - a);
        if (len == 0.0) continue;
        worst = std::min(worst, cross(a, b, p) / len);
    }
    return worst;
}

/// Euclidean distance from p to a ccw convex polygon (0 inside).
inline double distance_to_polygon(point p, const std::vector<point>& hull) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    if (hull.size() == 1) return std::abs(p - hull[0]);
    if (hull.size() == 2) return point_segment_distance(p, hull[0], hull[1]);
    if (polygon_signed_margin(p, hull) >= 0.0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i)
        best = std::min(best, point_segment_distance(p, hull[i], hull[(i + 1) % hull.size()]));
    return best;
}

/// Hausdorff distance between two convex polygons; for convex sets the
/// maximum deviation is attained at a vertex, so vertices suffice.
inline double hausdorff_convex(const std::vector<point>& a, const std::vector<point>& b) {
    double d = 0.0;
    for (const point p : a) d = std::max(d, distance_to_polygon(p, b));
    for (const point q : b) d = std::max(d, distance_to_polygon(q, a));
    return d;
}

/// Twice the signed area; positive for counterclockwise loops.
inline double signed_area2(const std::vector<point>& loop) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < loop.size(); ++i)
        s += loop[i].real() * loop[i + 1].imag() - loop[i + 1].real() * loop[i].imag();
    return s;
}

} // namespace planar

} // namespace sectoria
