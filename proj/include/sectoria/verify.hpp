#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "hermitian_eigen.hpp"
#include "numerical_range.hpp"
#include "planar.hpp"
#include "regions.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "sectorial.hpp"
#include "semigroup.hpp"

namespace sectoria {

/// Knobs for the full verification run. Defaults keep the suite under a
/// couple of minutes while exercising every check at meaningful scale.
struct RunConfig {
    std::uint64_t seed = 1;
    std::vector<int> dims = {2, 4, 8};
    std::vector<double> alphas = {0.2, 0.6, 1.0, 1.4};
    int trials = 10000; // closure pairs per family per angle
    int m = 720;        // support angles per range hull
    int instances = 4;  // sectorial instances per (dim, angle) cell
};

namespace detail {

inline std::string alpha_tag(double al) {
    std::ostringstream os;
    os << "alpha=" << al;
    return os.str();
}

inline std::string instance_tag(int dim, double al, std::uint64_t seed) {
    std::ostringstream os;
    os << "dim=" << dim << " alpha=" << al << " seed=" << seed;
    return os.str();
}

inline CMatrix random_normal_matrix(int n, Rng& rng) {
    const CMatrix g = random_gaussian_matrix(n, rng);
    const CMatrix u = herm_eigen((g + g.adjoint()) * 0.5).vectors;
    CVector d(static_cast<std::size_t>(n));
    for (auto& z : d) z = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return u * CMatrix::diagonal(d) * u.adjoint();
}

// Exact support function of a 2x2 numerical range (an ellipse with the
// eigenvalues as foci), the independent oracle for compute_hull.
inline double elliptical_support(const CMatrix& a, double theta) {
    const cplx tr = a(0, 0) + a(1, 1);
    const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    const double fro2 = frobenius_norm(a) * frobenius_norm(a);
    const double b = std::sqrt(std::max(0.0, fro2 - std::norm(l1) - std::norm(l2)));
    const double semi_minor = 0.5 * b;
    const double c_focal = 0.5 * std::abs(l1 - l2);
    const double semi_major = std::hypot(semi_minor, c_focal);
    const cplx center = 0.5 * (l1 + l2);
    const double psi = std::arg(l1 - l2);
    const double c = std::cos(theta - psi), s = std::sin(theta - psi);
    return std::real(center * std::polar(1.0, -theta)) +
           std::sqrt(semi_major * semi_major * c * c + semi_minor * semi_minor * s * s);
}

} // namespace detail

/// Full deterministic verification sweep. Sections: region geometry,
/// numerical-range oracles, and the per-instance semigroup checks.
inline VerifyReport run_verification(const RunConfig& cfg) {
    VerifyReport rep;
    const Rng root(cfg.seed);

    // --- region geometry, per angle ---
    const std::pair<RegionFamily, RegionFamily> chain[] = {
        {RegionFamily::Lset, RegionFamily::Omega},
        {RegionFamily::Omega, RegionFamily::Qset},
        {RegionFamily::Qset, RegionFamily::Dset},
    };
    for (const double al : cfg.alphas) {
        const Angle angle(al);
        const std::string atag = detail::alpha_tag(al);

        for (const auto& [inner, outer] : chain) {
            const ContainmentReport c =
                containment_check({inner, angle}, {outer, angle}, 1024, 1e-9);
            rep.checks.push_back({"inclusion_chain",
                                  std::string(family_name(inner)) + "->" + family_name(outer) +
                                      " " + atag,
                                  c.worst_dist <= 1e-8, c.worst_dist,
                                  detail::format_point(c.witness), false});
        }
        if (!angle.degenerate()) {
            // the top of the small disk of D lies outside the lens C
            const cplx w = cplx(0.0, std::sin(al));
            const double mg = margin({RegionFamily::Cset, angle}, w);
            rep.checks.push_back(
                {"cap_witness_outside_lens", atag, mg < 0.0, mg, detail::format_point(w), false});
        }

        int fam_idx = 0;
        for (const RegionFamily f : {RegionFamily::Cset, RegionFamily::Omega, RegionFamily::Qset}) {
            const std::uint64_t seed = root.substream(17 + static_cast<std::uint64_t>(fam_idx++) +
                                                      static_cast<std::uint64_t>(100.0 * al))
                                           .next();
            const ClosureReport c = semigroup_closure_check({f, angle}, cfg.trials, seed);
            rep.checks.push_back({"multiplicative_closure",
                                  std::string("family=") + family_name(f) + " " + atag,
                                  c.violations == 0, c.worst_margin,
                                  detail::format_point(c.witness), false});
        }
        {
            const std::uint64_t seed =
                root.substream(29 + static_cast<std::uint64_t>(100.0 * al)).next();
            const ClosureReport c =
                closure_check({RegionFamily::Bset, angle}, {RegionFamily::Cset, angle},
                              cfg.trials, seed);
            rep.checks.push_back({"ideal_closure", "family=BxC " + atag, c.violations == 0,
                                  c.worst_margin, detail::format_point(c.witness), false});
        }

        if (angle.degenerate()) {
            rep.checks.push_back({"omega_convexity", atag + " (degenerate interval)", false, 0.0,
                                  "", true});
        } else {
            const OmegaConvexityReport c = omega_convexity_check(angle, 1000);
            rep.checks.push_back(
                {"omega_convexity", atag, c.pass && c.sign_violations == 0, c.min_curvature, "",
                 false});

            const double th2 = std::tan(al / 2.0);
            rep.checks.push_back({"omega_vertex_inside_disk", atag, th2 * th2 <= std::sin(al),
                                  std::sin(al) - th2 * th2, "", false});

            double grid_max = 0.0;
            const int grid_n = 100000;
            const double lo = std::numbers::pi / 2.0 - al;
            for (int k = 0; k <= grid_n; ++k) {
                const double t = lo + 2.0 * al * k / grid_n;
                grid_max = std::max(grid_max, omega_boundary_point(angle, t).imag());
            }
            const double closed = omega_max_im(angle);
            const double dev = std::abs(closed - grid_max);
            rep.checks.push_back({"omega_max_im_closed_form", atag,
                                  dev <= 1e-8 && closed < std::tan(al / 2.0), dev, "", false});
        }
    }

    // --- numerical-range oracles ---
    {
        double worst = -1.0;
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            Rng rng = root.substream(1000 + static_cast<std::uint64_t>(i));
            const int n = 2 + i % 7;
            const CMatrix a = detail::random_normal_matrix(n, rng);
            std::vector<cplx> spec(static_cast<std::size_t>(n));
            const HermEigen diag_basis = herm_eigen(a.adjoint() * a);
            // eigenvalues of a normal matrix via its unitary diagonalizer
            for (int k = 0; k < n; ++k) {
                CVector v(static_cast<std::size_t>(n));
                for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = diag_basis.vectors(r, k);
                spec[static_cast<std::size_t>(k)] = quadratic_form(a, v);
            }
            const RangeHull hull = compute_hull(a, cfg.m);
            const double hd =
                planar::hausdorff_convex(hull.outer_vertices, planar::convex_hull(spec));
            const double allowance = std::max(10.0 * hull.gap, 1e-6);
            worst = std::max(worst, hd - allowance);
            ok = ok && hd <= allowance;
        }
        rep.checks.push_back({"normal_spectrum_hull", "cases=20", ok, worst, "", false});
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            Rng rng = root.substream(2000 + static_cast<std::uint64_t>(i));
            const CMatrix a = random_gaussian_matrix(2, rng);
            for (int k = 0; k < 64; ++k) {
                const double theta = 2.0 * std::numbers::pi * k / 64.0;
                const auto [h, p] = support_point(a, theta);
                (void)p;
                worst = std::max(worst, std::abs(h - detail::elliptical_support(a, theta)));
            }
        }
        rep.checks.push_back({"elliptical_range_oracle", "cases=20 angles=64", worst <= 1e-8,
                              worst, "", false});
    }

    // --- per-instance semigroup checks ---
    const std::vector<double> t_grid = {0.1, 1.0, 10.0};
    const std::vector<double> euler_ts = {0.5, 1.0, 2.0};
    std::vector<std::uint64_t> n_grid;
    for (std::uint64_t n = 1; n <= 1024; n *= 2) n_grid.push_back(n);

    struct Cell {
        SectorialMatrix sm;
        std::string tag;
    };
    std::vector<std::vector<Cell>> by_alpha(cfg.alphas.size());

    std::uint64_t idx = 0;
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        const Angle angle(cfg.alphas[ai]);
        for (const int dim : cfg.dims) {
            for (int k = 0; k < cfg.instances; ++k, ++idx) {
                const std::uint64_t seed = root.substream(3000 + idx).next();
                Cell cell{random_sectorial(dim, angle, seed, cfg.m),
                          detail::instance_tag(dim, cfg.alphas[ai], seed)};
                const SectorialMatrix& sm = cell.sm;
                const std::string& tag = cell.tag;

                {
                    double worst = -2.0;
                    for (const double t : t_grid) {
                        const ClassCCert c = class_c_norms(semigroup(sm, t), sm.alpha);
                        worst = std::max(worst, std::max(c.norm_plus, c.norm_minus) - 1.0);
                    }
                    rep.checks.push_back(
                        {"semigroup_class_membership", tag, worst <= 1e-9, worst, "", false});
                }
                {
                    double worst = -2.0;
                    for (const std::uint64_t n : n_grid) {
                        const ClassCCert c = class_c_norms(euler_approx(sm, 1.0, n), sm.alpha);
                        worst = std::max(worst, std::max(c.norm_plus, c.norm_minus) - 1.0);
                    }
                    rep.checks.push_back(
                        {"euler_class_membership", tag, worst <= 1e-9, worst, "", false});
                }
                {
                    VerifyReport mt = main_theorem_check(sm, t_grid, cfg.m, 1e-7);
                    for (CheckItem item : mt.checks) {
                        item.params = tag + " " + item.params;
                        rep.checks.push_back(std::move(item));
                    }
                }
                for (const double t : euler_ts) {
                    const EulerReport er = euler_error_table(sm, t, n_grid);
                    double worst_ratio = 0.0;
                    bool any = false;
                    for (const EulerRow& row : er.rows) {
                        if (row.vacuous) continue;
                        any = true;
                        worst_ratio = std::max(worst_ratio, row.ratio);
                    }
                    std::ostringstream ps;
                    ps << tag << " t=" << t;
                    rep.checks.push_back({"euler_norm_convergence", ps.str(),
                                          any && worst_ratio <= 1.0, worst_ratio, "", !any});
                }
                {
                    const EulerReport er = euler_error_table(sm, 1.0, euler_slope_steps(sm, 1.0));
                    const bool enough = er.slope_rows >= 4;
                    rep.checks.push_back({"euler_rate_slope", tag + " t=1",
                                          enough && er.slope >= -1.25 && er.slope <= -0.85,
                                          er.slope, "", !enough});
                }
                {
                    double worst_dist = 0.0, worst_norm = -1.0;
                    bool ok = true;
                    const CMatrix id = CMatrix::identity(sm.s.dim());
                    const double sa = std::sin(sm.alpha.radians());
                    const double ca = std::cos(sm.alpha.radians());
                    for (const double lam : {0.1, 1.0, 10.0}) {
                        const CMatrix f = resolvent_contraction(sm, lam);
                        const auto hc = hull_in_region(compute_hull(f, cfg.m),
                                                       {RegionFamily::Lset, sm.alpha}, 1e-8);
                        ok = ok && hc.pass;
                        worst_dist = std::max(worst_dist, hc.worst_dist);
                        const CMatrix sh = f - id * 0.5;
                        const double np = operator_norm(sh * sa + id * cplx(0.0, ca / 2.0));
                        const double nm = operator_norm(sh * sa - id * cplx(0.0, ca / 2.0));
                        worst_norm = std::max(worst_norm, std::max(np, nm) - 0.5);
                    }
                    rep.checks.push_back(
                        {"resolvent_localization", tag, ok, worst_dist, "", false});
                    rep.checks.push_back(
                        {"resolvent_shifted_norms", tag, worst_norm <= 1e-9, worst_norm, "",
                         false});
                }
                {
                    const VerifyReport db = derived_bounds_check(sm, t_grid);
                    double worst = std::numeric_limits<double>::infinity();
                    bool ok = true;
                    for (const CheckItem& item : db.checks) {
                        ok = ok && item.pass;
                        worst = std::min(worst, item.worst);
                    }
                    rep.checks.push_back({"derived_bounds", tag, ok, worst, "", false});
                }
                {
                    const VerifyReport pd =
                        power_difference_check(resolvent_contraction(sm, 1.0), n_grid);
                    bool ok = true;
                    for (const CheckItem& item : pd.checks) ok = ok && item.pass;
                    rep.checks.push_back(
                        {"power_difference_decay", tag, ok, pd.checks.front().worst, "", false});
                }

                by_alpha[ai].push_back(std::move(cell));
            }
        }
    }

    // --- multi-factor product inequality, per angle ---
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
        const auto& pool = by_alpha[ai];
        if (pool.empty()) continue;
        const Angle angle(cfg.alphas[ai]);
        double worst = -1.0;
        bool ok = true;
        for (int trial = 0; trial < 250; ++trial) {
            Rng rng = root.substream(40000 + 1000 * ai + static_cast<std::uint64_t>(trial));
            std::vector<ProductFactor> fs;
            for (int k = 0; k < 3; ++k) {
                const Cell& cell = pool[static_cast<std::size_t>(trial + k) % pool.size()];
                fs.push_back({cell.sm, rng.uniform(0.0, 3.0),
                              random_unit_vector(cell.sm.s.dim(), rng)});
            }
            const VerifyReport pr = product_inequality_check(fs, angle);
            ok = ok && pr.checks.front().pass;
            worst = std::max(worst, pr.checks.front().worst);
        }
        rep.checks.push_back({"product_inequality",
                              detail::alpha_tag(cfg.alphas[ai]) + " trials=250", ok, worst, "",
                              false});
    }

    // --- proof-level scalar bound ---
    for (const double al : cfg.alphas) {
        const Angle angle(al);
        if (angle.degenerate()) continue;
        const double ca = std::cos(al);
        double worst = -1.0;
        for (const std::uint64_t n : {1ull, 4ull, 16ull, 64ull}) {
            const double sup = scalar_g_sup(angle, n, 50.0 * static_cast<double>(n), 10000);
            worst = std::max(worst, sup * static_cast<double>(n) * ca * ca - 1.0);
        }
        rep.checks.push_back(
            {"scalar_euler_bound", detail::alpha_tag(al), worst <= 1e-6, worst, "", false});
    }

    return rep;
}

} // namespace sectoria
