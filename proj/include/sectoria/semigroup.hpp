#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "complex_matrix.hpp"
#include "matrix_exp.hpp"
#include "numerical_range.hpp"
#include "regions.hpp"
#include "report.hpp"
#include "sectorial.hpp"

namespace sectoria {

inline CMatrix semigroup(const SectorialMatrix& sm, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("semigroup: t must be nonnegative");
    return matrix_exp(sm.s * (-t));
}

/// Backward-Euler approximant (I + (t/n) S)^{-n} of the semigroup at time t.
inline CMatrix euler_approx(const SectorialMatrix& sm, double t, std::uint64_t n) {
    if (!(t >= 0.0)) throw std::invalid_argument("euler_approx: t must be nonnegative");
    if (n == 0) throw std::invalid_argument("euler_approx: n must be positive");
    return inv_power(sm.s, t / static_cast<double>(n), n);
}

/// Certifiable upper bound for the Euler convergence constant:
/// K_up(a) = min(2 + 2/sqrt(3), (pi - a)/a), monotone cap at a = 0.
inline double k_upper(Angle alpha) {
    const double base = 2.0 + 2.0 / std::sqrt(3.0);
    const double al = alpha.radians();
    if (al == 0.0) return base;
    return std::min(base, (std::numbers::pi - al) / al);
}

struct EulerRow {
    std::uint64_t n = 0;
    double error = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    bool vacuous = false; // bound > 1e3 certifies nothing
};

struct EulerReport {
    std::vector<EulerRow> rows;
    double slope = 0.0; // least-squares slope of ln error vs ln n
    int slope_rows = 0; // rows above the 1e-12 error floor used in the fit
    bool pass = false;  // every non-vacuous ratio <= 1, at least one such row
};

/// Operator-norm Euler errors against matrix_exp, with the certified bound
/// K_up(a)/(n cos^2 a) per row. Rows whose bound exceeds 1e3 are flagged
/// vacuous and excluded from the pass verdict (they certify nothing).
inline EulerReport euler_error_table(const SectorialMatrix& sm, double t,
                                     const std::vector<std::uint64_t>& ns) {
    if (!(t >= 0.0)) throw std::invalid_argument("euler_error_table: t must be nonnegative");
    if (!std::is_sorted(ns.begin(), ns.end()))
        throw std::invalid_argument("euler_error_table: ns must be ascending");
    const CMatrix target = semigroup(sm, t);
    const double ca = std::cos(sm.alpha.radians());
    const double ku = k_upper(sm.alpha);

    EulerReport rep;
    int certified = 0;
    bool all_ok = true;
    for (const std::uint64_t n : ns) {
        EulerRow row;
        row.n = n;
        row.error = operator_norm(euler_approx(sm, t, n) - target);
        row.bound = ku / (static_cast<double>(n) * ca * ca);
        row.ratio = row.error / row.bound;
        row.vacuous = row.bound > 1e3;
        if (!row.vacuous) {
            ++certified;
            all_ok = all_ok && row.ratio <= 1.0;
        }
        rep.rows.push_back(row);
    }
    rep.pass = all_ok && certified > 0;

    // ln-ln slope over rows above the error floor.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const EulerRow& row : rep.rows) {
        if (row.error <= 1e-12) continue;
        const double x = std::log(static_cast<double>(row.n));
        const double y = std::log(row.error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++rep.slope_rows;
    }
    if (rep.slope_rows >= 2) {
        const double k = static_cast<double>(rep.slope_rows);
        rep.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return rep;
}

/// Step counts over which the 1/n rate of the Euler error is identifiable.
/// The error saturates until n ~ t |S| and the scalar defect enters its 1/n
/// regime only past n ~ 1/cos^2(a), so the window starts above both scales
/// and spans eight octaves.
inline std::vector<std::uint64_t> euler_slope_steps(const SectorialMatrix& sm, double t) {
    const double ca = std::cos(sm.alpha.radians());
    const double n0 = std::max({16.0, t * operator_norm(sm.s), 4.0 / (ca * ca)});
    std::uint64_t lo = 16;
    while (static_cast<double>(lo) < n0) lo *= 2;
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = lo; n <= (lo << 8); n *= 2) ns.push_back(n);
    return ns;
}

/// Grid supremum of |g_n(x e^{+-i a})|, g_n(w) = e^{-w} - (1 + w/n)^{-n},
/// over x >= 0 (log-spaced grid from 1e-6 to xmax plus x = 0). The proof-level
/// scalar estimate bounds this by 1/(n cos^2 a).
inline double scalar_g_sup(Angle alpha, std::uint64_t n, double xmax, int m) {
    if (alpha.degenerate()) throw DegenerateAngle("scalar_g_sup: alpha must be positive");
    if (n == 0) throw std::invalid_argument("scalar_g_sup: n must be positive");
    if (!(xmax >= 50.0 * static_cast<double>(n)))
        throw std::invalid_argument("scalar_g_sup: xmax must cover the tail (>= 50 n)");
    if (m < 10000) throw std::invalid_argument("scalar_g_sup: need at least 10^4 grid points");

    const double nd = static_cast<double>(n);
    const double lo = std::log(1e-6), hi = std::log(xmax);
    double sup = 0.0; // x = 0 contributes g_n(0) = 0
    for (const double sign : {1.0, -1.0}) {
        const cplx dir = std::polar(1.0, sign * alpha.radians());
        for (int k = 0; k < m; ++k) {
            const double x = std::exp(lo + (hi - lo) * k / (m - 1));
            const cplx w = x * dir;
            const cplx g = std::exp(-w) - std::exp(-nd * std::log(1.0 + w / nd));
            sup = std::max(sup, std::abs(g));
        }
    }
    return sup;
}

namespace detail {

inline std::string format_point(cplx z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

} // namespace detail

/// W(exp(-tS)) inside Omega(alpha) for every t, with the redundant weaker
/// check against the quasi-sectorial region D_alpha.
inline VerifyReport main_theorem_check(const SectorialMatrix& sm, const std::vector<double>& ts,
                                       int m, double tol) {
    VerifyReport rep;
    for (const double t : ts) {
        const RangeHull hull = compute_hull(semigroup(sm, t), m);
        const auto in_omega = hull_in_region(hull, RegionSpec{RegionFamily::Omega, sm.alpha}, tol);
        const auto in_d = hull_in_region(hull, RegionSpec{RegionFamily::Dset, sm.alpha}, tol);
        std::ostringstream params;
        params << "t=" << t << " m=" << m;
        rep.checks.push_back({"range_in_omega", params.str(), in_omega.pass, in_omega.worst_dist,
                              detail::format_point(in_omega.witness), false});
        rep.checks.push_back({"range_in_quasi_sectorial_region", params.str(), in_d.pass,
                              in_d.worst_dist, detail::format_point(in_d.witness), false});
    }
    return rep;
}

struct ConverseWitness {
    double t = 0.0;
    cplx point{};
    double dist = 0.0;
};

/// Falsification probe for the converse direction: when W(S) is NOT inside
/// the sector, look for a time t at which W(exp(-tS)) leaves Omega(alpha).
/// Returns the first witness found; nullopt means inconclusive (or that S is
/// genuinely sectorial, in which case no witness can exist).
inline std::optional<ConverseWitness> converse_probe(const CMatrix& s, Angle alpha,
                                                     const std::vector<double>& ts) {
    const auto sector_rep =
        hull_in_region(compute_hull(s, 360), RegionSpec{RegionFamily::Sector, alpha}, 1e-8);
    if (sector_rep.pass) return std::nullopt;
    const RegionSpec omega{RegionFamily::Omega, alpha};
    for (const double t : ts) {
        if (!(t >= 0.0)) continue;
        const auto rep = hull_in_region(compute_hull(matrix_exp(s * (-t)), 360), omega, 1e-9);
        if (!rep.pass) return ConverseWitness{t, rep.witness, rep.worst_dist};
    }
    return std::nullopt;
}

/// Spectral bounds implied by range localization in Omega(alpha):
/// lambda_min(Re exp(-tS)) >= -tan^2(a/2) and |Im exp(-tS)| <= max Im Omega.
inline VerifyReport derived_bounds_check(const SectorialMatrix& sm,
                                         const std::vector<double>& ts) {
    const double th2 = std::tan(sm.alpha.radians() / 2.0);
    const double re_floor = -th2 * th2;
    const double im_cap = omega_max_im(sm.alpha);

    VerifyReport rep;
    for (const double t : ts) {
        const CMatrix e = semigroup(sm, t);
        const auto [re, im] = cartesian_parts(e);
        const double lam_min = herm_eigen(re).values.front();
        const double im_norm = operator_norm(im);
        std::ostringstream params;
        params << "t=" << t;
        rep.checks.push_back({"re_part_floor", params.str(), lam_min >= re_floor - 1e-9,
                              lam_min - re_floor, "", false});
        rep.checks.push_back({"im_part_cap", params.str(), im_norm <= im_cap + 1e-9,
                              im_cap - im_norm, "", false});
    }
    return rep;
}

struct ProductFactor {
    SectorialMatrix sm;
    double t = 0.0;
    CVector u;
};

/// Multi-factor inequality: with p = prod_k (exp(-t_k S_k) u_k, u_k) over
/// unit vectors u_k, both |sin(a) sqrt(p) +- i cos(a)| must be <= 1
/// (principal square root).
inline VerifyReport product_inequality_check(const std::vector<ProductFactor>& factors,
                                             Angle alpha) {
    cplx prod = 1.0;
    for (const ProductFactor& f : factors) {
        if (f.sm.alpha.radians() != alpha.radians())
            throw std::invalid_argument("product_inequality_check: mismatched alpha");
        if (std::abs(vec_norm(f.u) - 1.0) > 1e-12)
            throw std::invalid_argument("product_inequality_check: u must be a unit vector");
        const CVector v = semigroup(f.sm, f.t) * f.u;
        prod *= inner(v, f.u);
    }
    const cplx root = std::sqrt(prod);
    const double sa = std::sin(alpha.radians()), ca = std::cos(alpha.radians());
    const double plus = std::abs(sa * root + cplx(0.0, ca));
    const double minus = std::abs(sa * root - cplx(0.0, ca));
    const double worst = std::max(plus, minus);

    VerifyReport rep;
    std::ostringstream params;
    params << "factors=" << factors.size();
    rep.checks.push_back({"product_inequality", params.str(), worst <= 1.0 + 1e-9, worst - 1.0,
                          detail::format_point(root), false});
    return rep;
}

/// v_n = (n+1) |C^n - C^{n+1}| for each n; powers are built incrementally.
inline std::vector<double> power_difference_values(const CMatrix& c,
                                                   const std::vector<std::uint64_t>& ns) {
    if (ns.empty() || !std::is_sorted(ns.begin(), ns.end()) || ns.front() == 0)
        throw std::invalid_argument("power_difference_values: ns must be ascending and positive");
    std::vector<double> out;
    CMatrix p = matrix_power(c, ns.front());
    std::uint64_t cur = ns.front();
    for (const std::uint64_t n : ns) {
        if (n > cur) {
            p = p * matrix_power(c, n - cur);
            cur = n;
        }
        out.push_back(static_cast<double>(n + 1) * operator_norm(p - p * c));
    }
    return out;
}

/// Boundedness measurement for the power-difference sequence: reports
/// sup_n v_n and whether the tail (last quarter of rows) is nonincreasing
/// within 5%. The peak of v_n scales like 1/(1 - |c_max|), so the trend is
/// only meaningful beyond it; the tail window keeps the check peak-agnostic.
inline VerifyReport power_difference_check(const CMatrix& c,
                                           const std::vector<std::uint64_t>& ns) {
    const std::vector<double> vals = power_difference_values(c, ns);
    double sup = 0.0;
    for (const double v : vals) sup = std::max(sup, v);

    const std::size_t tail_len = std::max<std::size_t>(3, vals.size() / 4);
    const std::size_t start = vals.size() > tail_len ? vals.size() - tail_len : 0;
    bool trend_ok = true;
    for (std::size_t i = start; i + 1 < vals.size(); ++i)
        trend_ok = trend_ok && vals[i + 1] <= 1.05 * vals[i] + 1e-12;

    VerifyReport rep;
    std::ostringstream params;
    params << "n_max=" << ns.back();
    rep.checks.push_back(
        {"power_difference_sup", params.str(), std::isfinite(sup), sup, "", false});
    rep.checks.push_back({"power_difference_trend", params.str(), trend_ok,
                          vals.back(), "", false});
    return rep;
}

} // namespace sectoria
