#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "errors.hpp"
#include "planar.hpp"
#include "rng.hpp"

namespace sectoria {

/// The closed convex regions of the complex plane this library reasons about.
/// All are parameterized by one opening half-angle alpha in [0, pi/2):
///
///   Sector    |arg z| <= alpha
///   Cset      |z sin(a) +- i cos(a)| <= 1, a lens with corners +-1
///   Omega     square image {z^2 : z in Cset}, boundary a single closed curve
///   Qset      Cset cut by -2 Re z <= (1-|z|^2) tan(a), three disk constraints
///   Lset      |(z-1/2) sin(a) +- i cos(a)/2| <= 1/2, a lens with corners 0,1
///   Dset      {|z| <= sin(a)} union {|arg(1-z)| <= a, |z-1| <= cos(a)}
///   Bset      {z in Cset : iz in Cset}, a curvilinear square around 0
///   UnitDisk  |z| <= 1 (alpha ignored)
///
/// At alpha = 0 the bounded families collapse to real segments:
/// Cset -> [-1,1]; Omega, Qset, Lset, Dset -> [0,1]; Sector -> [0,inf);
/// Bset -> {0}. Membership then means distance-to-segment <= tol, which the
/// margin encodes by returning minus that distance.
enum class RegionFamily { Sector, Cset, Omega, Qset, Lset, Dset, Bset, UnitDisk };

inline const char* family_name(RegionFamily f) {
    switch (f) {
        case RegionFamily::Sector: return "Sector";
        case RegionFamily::Cset: return "C";
        case RegionFamily::Omega: return "Omega";
        case RegionFamily::Qset: return "Q";
        case RegionFamily::Lset: return "L";
        case RegionFamily::Dset: return "D";
        case RegionFamily::Bset: return "B";
        case RegionFamily::UnitDisk: return "Disk";
    }
    return "?";
}

/// Opening half-angle, restricted to [0, pi/2). The right endpoint is
/// excluded: every family degenerates or becomes unbounded there.
class Angle {
public:
    explicit Angle(double radians) : a_(radians) {
        if (!(radians >= 0.0 && radians < std::numbers::pi / 2.0))
            throw std::invalid_argument("Angle: alpha must lie in [0, pi/2)");
    }
    double radians() const { return a_; }
    bool degenerate() const { return a_ == 0.0; }

private:
    double a_;
};

struct RegionSpec {
    RegionFamily family;
    Angle angle;

    RegionSpec(RegionFamily f, Angle a) : family(f), angle(a) {}
    static RegionSpec unit_disk() { return {RegionFamily::UnitDisk, Angle(0.0)}; }
};

namespace detail {

inline double dist_point_segment(cplx z, cplx a, cplx b) {
    return planar::point_segment_distance(z, a, b);
}

// Distance to the ray [0, +inf) on the real axis.
inline double dist_nonneg_ray(cplx z) {
    if (z.real() >= 0.0) return std::abs(z.imag());
    return std::abs(z);
}

} // namespace detail

/// Signed slack of z against the region: the minimum over the region's
/// defining constraints, >= 0 inside, < 0 outside. This is a slack, not a
/// Euclidean distance (see dist_to_region for that), except in the alpha = 0
/// segment cases where it equals minus the distance to the segment.
inline double margin(const RegionSpec& spec, cplx z) {
    const double al = spec.angle.radians();
    switch (spec.family) {
        case RegionFamily::UnitDisk:
            return 1.0 - std::abs(z);
        case RegionFamily::Sector: {
            if (al == 0.0) return -detail::dist_nonneg_ray(z);
            // arg(0) = 0 by the atan2 convention, so the apex is inside.
            return al - std::abs(std::arg(z));
        }
        case RegionFamily::Cset: {
            if (al == 0.0) return -detail::dist_point_segment(z, -1.0, 1.0);
            const double sa = std::sin(al), ca = std::cos(al);
            const double up = std::abs(z * sa + cplx(0.0, ca));
            const double dn = std::abs(z * sa - cplx(0.0, ca));
            return 1.0 - std::max(up, dn);
        }
        case RegionFamily::Omega: {
            if (al == 0.0) return -detail::dist_point_segment(z, 0.0, 1.0);
            // Principal square root (Re >= 0); |Im sqrt(z)| is branch-safe.
            const cplx r = std::sqrt(z);
            return (1.0 - std::abs(z)) * std::tan(al) - 2.0 * std::abs(r.imag());
        }
        case RegionFamily::Qset: {
            if (al == 0.0) return -detail::dist_point_segment(z, 0.0, 1.0);
            const double ta = std::tan(al);
            const double n2 = std::norm(z);
            const double lens = (1.0 - n2) * ta - 2.0 * std::abs(z.imag());
            const double left = (1.0 - n2) * ta + 2.0 * z.real();
            return std::min(lens, left);
        }
        case RegionFamily::Lset: {
            if (al == 0.0) return -detail::dist_point_segment(z, 0.0, 1.0);
            const double sa = std::sin(al), ca = std::cos(al);
            const cplx w = (z - 0.5) * sa;
            const double up = std::abs(w + cplx(0.0, 0.5 * ca));
            const double dn = std::abs(w - cplx(0.0, 0.5 * ca));
            return 0.5 - std::max(up, dn);
        }
        case RegionFamily::Dset: {
            if (al == 0.0) return -detail::dist_point_segment(z, 0.0, 1.0);
            // The cap cone |arg(1-z)| <= al is the meet of two half-planes
            // through 1; their signed line distances stay well-behaved at the
            // apex, where the angular slack itself is discontinuous.
            const cplx w = 1.0 - z;
            const double edge = std::min(-std::imag(w * std::polar(1.0, -al)),
                                         std::imag(w * std::polar(1.0, al)));
            const double cap = std::min(std::cos(al) - std::abs(w), edge);
            return std::max(std::sin(al) - std::abs(z), cap);
        }
        case RegionFamily::Bset: {
            const RegionSpec c{RegionFamily::Cset, spec.angle};
            return std::min(margin(c, z), margin(c, z * cplx(0.0, 1.0)));
        }
    }
    return -std::numeric_limits<double>::infinity();
}

inline bool contains(const RegionSpec& spec, cplx z, double tol) {
    return margin(spec, z) >= -tol;
}

/// Boundary point of Omega(alpha): zeta(t) = ((e^{it} - i cos a)/sin a)^2 for
/// t in [pi/2 - a, pi/2 + a]. t sweeps the closed boundary loop exactly once,
/// counterclockwise, from 1 back to 1.
inline cplx omega_boundary_point(Angle angle, double t) {
    const double al = angle.radians();
    if (al == 0.0) throw DegenerateAngle("omega_boundary_point: alpha must be positive");
    const cplx w = (std::polar(1.0, t) - cplx(0.0, std::cos(al))) / std::sin(al);
    return w * w;
}

/// Ordered samples tracing a region boundary counterclockwise. For the
/// bounded families the loop is closed: points.front() == points.back().
/// params are cumulative traversal fractions in [0,1].
struct BoundarySamples {
    std::vector<double> params;
    std::vector<cplx> points;
};

namespace detail {

struct Disk {
    cplx c;
    double r;
};

struct Arc {
    cplx c;
    double r;
    double a0, a1; // ccw, a1 > a0
    double length() const { return (a1 - a0) * r; }
    cplx at(double frac) const { return c + std::polar(r, a0 + frac * (a1 - a0)); }
};

inline bool point_in_all(const std::vector<Disk>& disks, cplx p) {
    for (const Disk& d : disks)
        if (std::abs(p - d.c) > d.r * (1.0 + 1e-12) + 1e-12) return false;
    return true;
}

inline void circle_circle(const Disk& a, const Disk& b, std::vector<cplx>& out) {
    const cplx ab = b.c - a.c;
    const double d = std::abs(ab);
    if (d == 0.0 || d > a.r + b.r || d < std::abs(a.r - b.r)) return;
    const double x = (a.r * a.r - b.r * b.r + d * d) / (2.0 * d);
    const double h2 = a.r * a.r - x * x;
    if (h2 < 0.0) return;
    const double h = std::sqrt(h2);
    const cplx u = ab / d;
    const cplx base = a.c + x * u;
    const cplx off = cplx(0.0, 1.0) * u * h;
    out.push_back(base + off);
    out.push_back(base - off);
}

/// Boundary arcs of an intersection of disks, ordered counterclockwise.
/// Assumes the intersection has nonempty interior (true for every family
/// configuration this library produces).
inline std::vector<Arc> intersection_boundary(const std::vector<Disk>& disks) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        const Disk& di = disks[i];
        std::vector<double> cuts;
        for (std::size_t j = 0; j < disks.size(); ++j) {
            if (j == i) continue;
            std::vector<cplx> pts;
            circle_circle(di, disks[j], pts);
            for (const cplx p : pts)
                if (point_in_all(disks, p)) {
                    double a = std::arg(p - di.c);
                    if (a < 0.0) a += two_pi;
                    cuts.push_back(a);
                }
        }
        if (cuts.empty()) {
            // Either this circle is entirely on the boundary (single-disk
            // case) or entirely interior/exterior to the intersection.
            if (disks.size() == 1 || point_in_all(disks, di.c + di.r))
                arcs.push_back({di.c, di.r, 0.0, two_pi});
            continue;
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                   cuts.end());
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            const double a0 = cuts[k];
            const double a1 = (k + 1 < cuts.size()) ? cuts[k + 1] : cuts.front() + two_pi;
            if (a1 - a0 < 1e-12) continue;
            const cplx mid = di.c + std::polar(di.r, 0.5 * (a0 + a1));
            if (point_in_all(disks, mid)) arcs.push_back({di.c, di.r, a0, a1});
        }
    }
    // Order the arcs counterclockwise around the region.
    cplx anchor = 0.0;
    for (const Arc& a : arcs) anchor += a.at(0.5);
    anchor /= static_cast<double>(arcs.size());
    std::sort(arcs.begin(), arcs.end(), [anchor](const Arc& x, const Arc& y) {
        return std::arg(x.at(0.5) - anchor) < std::arg(y.at(0.5) - anchor);
    });
    return arcs;
}

/// One traced piece of a boundary: a circular arc or a straight segment.
struct Piece {
    bool is_arc = false;
    Arc arc{};
    cplx seg_a{}, seg_b{};
    double length() const { return is_arc ? arc.length() : std::abs(seg_b - seg_a); }
    cplx at(double frac) const { return is_arc ? arc.at(frac) : seg_a + frac * (seg_b - seg_a); }
};

inline Piece arc_piece(const Arc& a) {
    Piece p;
    p.is_arc = true;
    p.arc = a;
    return p;
}

inline Piece seg_piece(cplx a, cplx b) {
    Piece p;
    p.seg_a = a;
    p.seg_b = b;
    return p;
}

/// Sample m points along the pieces (each piece half-open [start, end)),
/// proportionally to length, then close the loop if requested.
inline BoundarySamples sample_pieces(const std::vector<Piece>& pieces, int m, bool close) {
    double total = 0.0;
    for (const Piece& p : pieces) total += p.length();
    if (total <= 0.0) {
        // Point region: every sample is the single point.
        BoundarySamples out;
        for (int k = 0; k < m; ++k) {
            out.points.push_back(pieces.front().at(0.0));
            out.params.push_back(static_cast<double>(k) / m);
        }
        if (close && !out.points.empty()) {
            out.points.push_back(out.points.front());
            out.params.push_back(1.0);
        }
        return out;
    }
    std::vector<int> counts(pieces.size(), 1);
    int used = static_cast<int>(pieces.size());
    // Largest-remainder allocation of the leftover samples.
    std::vector<std::pair<double, std::size_t>> frac;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const double want = m * pieces[i].length() / total;
        const int extra = std::max(0, static_cast<int>(want) - 1);
        counts[i] += extra;
        used += extra;
        frac.push_back({want - std::floor(want), i});
    }
    std::sort(frac.begin(), frac.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; used < m && k < frac.size(); ++k, ++used) ++counts[frac[k].second];
    while (used > m) { // can only happen when m < #pieces; shrink largest
        auto it = std::max_element(counts.begin(), counts.end());
        if (*it <= 1) break;
        --*it;
        --used;
    }

    BoundarySamples out;
    double walked = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const double len = pieces[i].length();
        for (int k = 0; k < counts[i]; ++k) {
            const double frac_k = static_cast<double>(k) / counts[i];
            out.points.push_back(pieces[i].at(frac_k));
            out.params.push_back((walked + frac_k * len) / total);
        }
        walked += len;
    }
    if (close && !out.points.empty()) {
        out.points.push_back(out.points.front());
        out.params.push_back(1.0);
    }
    return out;
}

inline std::vector<Disk> family_disks(RegionFamily f, double al) {
    const double sa = std::sin(al), ca = std::cos(al);
    const double r = 1.0 / sa;
    const cplx ict = cplx(0.0, ca / sa);
    switch (f) {
        case RegionFamily::UnitDisk:
            return {{0.0, 1.0}};
        case RegionFamily::Cset:
            return {{-ict, r}, {ict, r}};
        case RegionFamily::Lset:
            // Half-scale translate of Cset: centers 1/2 -+ i cot(a)/2.
            return {{0.5 - ict * 0.5, 0.5 * r}, {0.5 + ict * 0.5, 0.5 * r}};
        case RegionFamily::Qset:
            return {{-ict, r}, {ict, r}, {cplx(ca / sa, 0.0), r}};
        case RegionFamily::Bset:
            return {{-ict, r}, {ict, r}, {cplx(ca / sa, 0.0), r}, {cplx(-ca / sa, 0.0), r}};
        default:
            return {};
    }
}

} // namespace detail

/// Trace the boundary of a region with m samples (counterclockwise; closed
/// loop for the bounded families). The Sector boundary is unbounded, so its
/// two edge rays are emitted truncated at radius 2 and the trace is not
/// closed; every emitted point still lies exactly on the true boundary.
inline BoundarySamples boundary_samples(const RegionSpec& spec, int m) {
    const double al = spec.angle.radians();
    constexpr double half_pi = std::numbers::pi / 2.0;

    // Degenerate segment families: trace out and back so the loop closes.
    auto segment_loop = [m](cplx a, cplx b) {
        std::vector<detail::Piece> pieces{detail::seg_piece(a, b), detail::seg_piece(b, a)};
        return detail::sample_pieces(pieces, m, true);
    };

    switch (spec.family) {
        case RegionFamily::UnitDisk: {
            BoundarySamples out;
            for (int k = 0; k <= m; ++k) {
                const double th = 2.0 * std::numbers::pi * k / m;
                out.points.push_back(k == m ? out.points.front() : std::polar(1.0, th));
                out.params.push_back(static_cast<double>(k) / m);
            }
            return out;
        }
        case RegionFamily::Sector: {
            if (al == 0.0) return segment_loop(0.0, 2.0);
            std::vector<detail::Piece> pieces{
                detail::seg_piece(std::polar(2.0, al), 0.0),
                detail::seg_piece(0.0, std::polar(2.0, -al))};
            BoundarySamples out = detail::sample_pieces(pieces, m, false);
            out.points.push_back(std::polar(2.0, -al));
            out.params.push_back(1.0);
            return out;
        }
        case RegionFamily::Omega: {
            if (al == 0.0) return segment_loop(0.0, 1.0);
            BoundarySamples out;
            const double t0 = half_pi - al;
            for (int k = 0; k < m; ++k) {
                const double t = t0 + 2.0 * al * k / m;
                out.points.push_back(omega_boundary_point(spec.angle, t));
                out.params.push_back(static_cast<double>(k) / m);
            }
            out.points.push_back(out.points.front());
            out.params.push_back(1.0);
            return out;
        }
        case RegionFamily::Dset: {
            if (al == 0.0) return segment_loop(0.0, 1.0);
            const double sa = std::sin(al);
            // Corners where the cap edges meet the central circle.
            const cplx p_up = std::polar(sa, half_pi - al);
            const cplx p_dn = std::conj(p_up);
            std::vector<detail::Piece> pieces;
            detail::Arc big{0.0, sa, half_pi - al, 3.0 * half_pi + al};
            pieces.push_back(detail::arc_piece(big));
            pieces.push_back(detail::seg_piece(p_dn, 1.0));
            pieces.push_back(detail::seg_piece(1.0, p_up));
            return detail::sample_pieces(pieces, m, true);
        }
        case RegionFamily::Cset:
        case RegionFamily::Lset:
        case RegionFamily::Qset:
        case RegionFamily::Bset: {
            if (al == 0.0) {
                if (spec.family == RegionFamily::Cset) return segment_loop(-1.0, 1.0);
                if (spec.family == RegionFamily::Bset) return segment_loop(0.0, 0.0);
                return segment_loop(0.0, 1.0);
            }
            const auto disks = detail::family_disks(spec.family, al);
            std::vector<detail::Piece> pieces;
            for (const detail::Arc& a : detail::intersection_boundary(disks))
                pieces.push_back(detail::arc_piece(a));
            return detail::sample_pieces(pieces, m, true);
        }
    }
    return {};
}

/// Curvature and shape diagnostics of the Omega boundary on an m-point
/// parameter grid. Verifies:
///   - the curvature numerator -Im(zeta' conj(zeta'')) is strictly positive,
///   - d2y/dx2 changes sign exactly at the parameter midpoint (negative
///     before, positive after; the vertical-tangent point itself is skipped),
///   - Re zeta(t) never drops below -tan^2(alpha/2).
struct OmegaConvexityReport {
    double min_curvature = 0.0;
    int sign_violations = 0;
    double min_re = 0.0;
    double re_lower_bound = 0.0;
    bool pass = false;
};

inline OmegaConvexityReport omega_convexity_check(Angle angle, int m) {
    const double al = angle.radians();
    if (al == 0.0) throw DegenerateAngle("omega_convexity_check: alpha must be positive");
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double s2 = std::sin(al) * std::sin(al);
    const double ca = std::cos(al);

    OmegaConvexityReport rep;
    rep.min_curvature = std::numeric_limits<double>::infinity();
    rep.min_re = std::numeric_limits<double>::infinity();
    const double th2 = std::tan(al / 2.0);
    rep.re_lower_bound = -th2 * th2;

    for (int k = 0; k < m; ++k) {
        const double t = (half_pi - al) + 2.0 * al * k / (m - 1);
        const cplx e = std::polar(1.0, t);
        const cplx d1 = 2.0 * cplx(0.0, 1.0) * e * (e - cplx(0.0, ca)) / s2;
        const cplx d2 = 2.0 * cplx(0.0, 1.0) * e * (2.0 * cplx(0.0, 1.0) * e + ca) / s2;
        const double curv = -std::imag(d1 * std::conj(d2));
        rep.min_curvature = std::min(rep.min_curvature, curv);

        const cplx zeta = omega_boundary_point(angle, t);
        rep.min_re = std::min(rep.min_re, zeta.real());

        if (std::abs(t - half_pi) > 1e-9) {
            const double re_d1 = d1.real();
            const double d2ydx2 = curv / (re_d1 * re_d1 * re_d1);
            const bool want_negative = t < half_pi;
            if (want_negative ? (d2ydx2 >= 0.0) : (d2ydx2 <= 0.0)) ++rep.sign_violations;
        }
    }
    rep.pass = rep.min_curvature > 0.0 && rep.sign_violations == 0 &&
               rep.min_re >= rep.re_lower_bound - 1e-12;
    return rep;
}

/// Height of Omega(alpha): max Im over the region, attained on the boundary
/// at the parameter gamma with sin(gamma) = (cos a + sqrt(cos^2 a + 8))/4.
/// Evaluates y(gamma) = (sin 2g - 2 cos(a) cos(g)) / sin^2(a).
///
/// Note the cos(g) factor: it comes from differentiating the boundary height
/// y(t) = (sin 2t - 2 cos(a) cos t)/sin^2(a) and is cross-validated against a
/// dense boundary grid in the test suite. Printed closed forms for this
/// quantity sometimes carry sin(g) in the second term, which is inconsistent
/// with y(t) itself (off by ~6x at alpha = pi/3).
inline double omega_max_im(Angle angle) {
    const double al = angle.radians();
    if (al == 0.0) return 0.0;
    const double ca = std::cos(al);
    const double sg = std::min(1.0, (ca + std::sqrt(ca * ca + 8.0)) / 4.0);
    const double g = std::asin(sg);
    return (std::sin(2.0 * g) - 2.0 * ca * std::cos(g)) / (std::sin(al) * std::sin(al));
}

struct ContainmentReport {
    bool pass = false;        // every inner boundary sample has margin >= -tol
    double worst_margin = 0.0;
    cplx witness{};           // sample attaining the worst margin
    double worst_dist = 0.0;  // Euclidean violation depth (0 when contained)
    int samples = 0;
};

inline double dist_to_region(const RegionSpec& spec, cplx z);
inline double dist_to_region(const RegionSpec& spec, cplx z,
                             const std::vector<cplx>& boundary_cache);

/// Check that every boundary sample of `inner` lies in `outer`: pass iff the
/// worst outer-margin over the samples is >= -tol. Also reports the largest
/// Euclidean distance from a sample to the outer region, for callers that
/// budget tolerances in length units rather than margin units.
inline ContainmentReport containment_check(const RegionSpec& inner, const RegionSpec& outer,
                                           int m, double tol) {
    if (inner.family != RegionFamily::UnitDisk && outer.family != RegionFamily::UnitDisk &&
        inner.angle.radians() != outer.angle.radians())
        throw std::invalid_argument("containment_check: mismatched angles");

    const BoundarySamples samples = boundary_samples(inner, m);

    ContainmentReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    rep.samples = static_cast<int>(samples.points.size());
    std::vector<cplx> cache; // outer boundary, built on first violation
    for (const cplx z : samples.points) {
        const double mg = margin(outer, z);
        if (mg < rep.worst_margin) {
            rep.worst_margin = mg;
            rep.witness = z;
        }
        if (mg < 0.0) {
            if (cache.empty()) cache = boundary_samples(outer, 1024).points;
            rep.worst_dist = std::max(rep.worst_dist, dist_to_region(outer, z, cache));
        }
    }
    rep.pass = rep.worst_margin >= -tol;
    return rep;
}

struct ClosureReport {
    int trials = 0;
    int violations = 0;
    double worst_margin = 0.0;
    cplx witness{};
};

/// Draw `trials` pairs (z in A, xi in B) by rejection sampling from the
/// square [-1,1]^2 and check the product z*xi stays in A (margin >= -1e-12).
/// Plain multiplicative closure is A == B; the ideal variant takes A = Bset,
/// B = Cset. Per-trial substreams make the result schedule-independent.
inline ClosureReport closure_check(const RegionSpec& a, const RegionSpec& b, int trials,
                                   std::uint64_t seed) {
    const Rng root(seed);
    ClosureReport rep;
    rep.trials = trials;
    rep.worst_margin = std::numeric_limits<double>::infinity();

    auto draw = [](const RegionSpec& s, Rng& rng) -> cplx {
        if (s.angle.degenerate() && s.family != RegionFamily::UnitDisk) {
            // Zero-area segment regions: sample the segment directly.
            cplx lo = 0.0, hi = 1.0;
            if (s.family == RegionFamily::Cset) lo = -1.0;
            if (s.family == RegionFamily::Bset) hi = 0.0;
            return lo + (hi - lo) * rng.uniform();
        }
        for (long guard = 0; guard < 1000000; ++guard) {
            const double re = rng.uniform(-1.0, 1.0);
            const double im = rng.uniform(-1.0, 1.0);
            const cplx z(re, im);
            if (margin(s, z) >= 0.0) return z;
        }
        throw std::runtime_error("closure_check: rejection sampling failed");
    };

    for (int i = 0; i < trials; ++i) {
        Rng rng = root.substream(static_cast<std::uint64_t>(i));
        const cplx z = draw(a, rng);
        const cplx xi = draw(b, rng);
        const double mg = margin(a, z * xi);
        if (mg < rep.worst_margin) {
            rep.worst_margin = mg;
            rep.witness = z * xi;
        }
        if (mg < -1e-12) ++rep.violations;
    }
    return rep;
}

inline ClosureReport semigroup_closure_check(const RegionSpec& spec, int trials,
                                             std::uint64_t seed) {
    return closure_check(spec, spec, trials, seed);
}

namespace detail {

// Families whose margin is exactly minus the Euclidean distance outside.
inline std::optional<double> exact_distance(const RegionSpec& spec, cplx z, double mg) {
    if (spec.family == RegionFamily::UnitDisk) return -mg;
    if (!spec.angle.degenerate()) return std::nullopt;
    if (spec.family == RegionFamily::Bset) return std::abs(z); // region is {0}
    return -mg; // segment and ray margins are already distances
}

} // namespace detail

/// Upper bound on the Euclidean distance from z to the region: 0 when the
/// margin is nonnegative, otherwise the better of (a) bisection along the
/// chord to an interior anchor and (b) the nearest of the cached boundary
/// samples. Exact for the disk and the degenerate segment families.
inline double dist_to_region(const RegionSpec& spec, cplx z,
                             const std::vector<cplx>& boundary_cache) {
    const double mg0 = margin(spec, z);
    if (mg0 >= 0.0) return 0.0;
    if (const auto exact = detail::exact_distance(spec, z, mg0)) return *exact;

    const cplx anchor = (spec.family == RegionFamily::Bset) ? cplx(0.0, 0.0) : cplx(0.5, 0.0);
    double lo = 0.0, hi = 1.0; // margin(anchor) >= 0, margin(z) < 0
    const double span = std::abs(z - anchor);
    for (int it = 0; it < 80 && (hi - lo) * span > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (margin(spec, anchor + mid * (z - anchor)) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double best = std::abs(z - (anchor + lo * (z - anchor)));
    for (const cplx p : boundary_cache) best = std::min(best, std::abs(z - p));
    return best;
}

inline double dist_to_region(const RegionSpec& spec, cplx z) {
    const double mg = margin(spec, z);
    if (mg >= 0.0) return 0.0;
    if (const auto exact = detail::exact_distance(spec, z, mg)) return *exact;
    return dist_to_region(spec, z, boundary_samples(spec, 1024).points);
}

} // namespace sectoria
