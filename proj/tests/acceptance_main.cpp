// Acceptance gate: twelve end-to-end checks at pinned scales and tolerances,
// one pass/fail line each. Exits nonzero if any check fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "sectoria/numerical_range.hpp"
#include "sectoria/regions.hpp"
#include "sectoria/sectorial.hpp"
#include "sectoria/semigroup.hpp"
#include "sectoria/verify.hpp"

using namespace sectoria;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, const char* label, bool pass, double secs) {
    std::printf("[%s] %2d %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, label, secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

const std::vector<double> kAlphaGrid = {0.2, 0.6, 1.0, 1.4};
const std::vector<int> kDimGrid = {2, 4, 8, 16};

// 100 shared seeded instances spanning all dim x alpha combinations.
std::vector<SectorialMatrix> shared_instances() {
    std::vector<SectorialMatrix> out;
    out.reserve(100);
    for (int i = 0; i < 100; ++i) {
        const int dim = kDimGrid[static_cast<std::size_t>(i % 4)];
        const Angle alpha(kAlphaGrid[static_cast<std::size_t>((i / 4) % 4)]);
        out.push_back(random_sectorial(dim, alpha, 1000 + static_cast<std::uint64_t>(i)));
    }
    return out;
}

std::vector<std::uint64_t> powers_of_two(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = lo; n <= hi; n *= 2) ns.push_back(n);
    return ns;
}

void criterion_1_inclusion_chain() {
    Timer timer;
    bool ok = true;
    for (const double al : kAlphaGrid) {
        const Angle a(al);
        const RegionFamily chain[] = {RegionFamily::Lset, RegionFamily::Omega,
                                      RegionFamily::Qset, RegionFamily::Dset};
        for (int k = 0; k < 3; ++k) {
            const ContainmentReport rep =
                containment_check({chain[k], a}, {chain[k + 1], a}, 1024, 1e-8);
            ok = ok && rep.pass && rep.worst_dist <= 1e-8;
        }
        // The cap of D pokes out of the lens: its top point must sit outside C.
        ok = ok && margin({RegionFamily::Cset, a}, cplx(0.0, std::sin(al))) < 0.0;
    }
    const double secs = timer.seconds();
    report(1, "region inclusion chain with lens-cap witness", ok && secs < 5.0, secs);
}

void criterion_2_closure() {
    Timer timer;
    bool ok = true;
    const RegionFamily mult[] = {RegionFamily::Cset, RegionFamily::Omega, RegionFamily::Qset};
    for (std::size_t ai = 0; ai < kAlphaGrid.size(); ++ai) {
        const Angle a(kAlphaGrid[ai]);
        for (std::size_t fi = 0; fi < 3; ++fi) {
            const ClosureReport rep = semigroup_closure_check(
                {mult[fi], a}, 10000, 5000 + 10 * fi + ai);
            ok = ok && rep.violations == 0;
        }
        const ClosureReport ideal = closure_check({RegionFamily::Bset, a},
                                                  {RegionFamily::Cset, a}, 10000, 5900 + ai);
        ok = ok && ideal.violations == 0;
    }
    const double secs = timer.seconds();
    report(2, "multiplicative closure of the region families", ok && secs < 10.0, secs);
}

void criterion_3_convexity() {
    Timer timer;
    bool ok = true;
    for (const double al : kAlphaGrid) {
        const Angle a(al);
        const OmegaConvexityReport rep = omega_convexity_check(a, 1000);
        ok = ok && rep.pass && rep.min_curvature > 0.0 && rep.sign_violations == 0;
        const double th2 = std::tan(al / 2.0);
        ok = ok && rep.min_re >= -th2 * th2 - 1e-12;
        ok = ok && th2 * th2 <= std::sin(al); // the inner vertex stays inside D's disk
    }
    report(3, "squared-image boundary convexity", ok, timer.seconds());
}

void criterion_4_peak_height() {
    Timer timer;
    bool ok = true;
    constexpr double half_pi = std::numbers::pi / 2.0;
    for (const double al : kAlphaGrid) {
        const Angle a(al);
        const double closed = omega_max_im(a);
        double grid = 0.0;
        const int n = 100000;
        for (int k = 0; k <= n; ++k) {
            const double t = half_pi - al + 2.0 * al * k / n;
            grid = std::max(grid, omega_boundary_point(a, t).imag());
        }
        ok = ok && std::abs(closed - grid) <= 1e-8 && closed < std::tan(al / 2.0);
    }
    report(4, "squared-image peak height closed form", ok, timer.seconds());
}

void criterion_5_hull_oracles() {
    Timer timer;
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
        Rng rng(7000 + static_cast<std::uint64_t>(i));
        const int n = 2 + i % 7;
        const CMatrix a = detail::random_normal_matrix(n, rng);
        std::vector<cplx> spectrum(static_cast<std::size_t>(n));
        const HermEigen basis = herm_eigen(a.adjoint() * a);
        for (int k = 0; k < n; ++k) {
            CVector v(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = basis.vectors(r, k);
            spectrum[static_cast<std::size_t>(k)] = quadratic_form(a, v);
        }
        const RangeHull hull = compute_hull(a, 720);
        const double hd =
            planar::hausdorff_convex(hull.outer_vertices, planar::convex_hull(spectrum));
        ok = ok && hd <= std::max(10.0 * hull.gap, 1e-6);
    }
    for (int i = 0; i < 50; ++i) {
        Rng rng(7100 + static_cast<std::uint64_t>(i));
        const CMatrix a = random_gaussian_matrix(2, rng);
        for (int k = 0; k < 64; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / 64.0;
            const auto [h, p] = support_point(a, theta);
            (void)p;
            ok = ok && std::abs(h - detail::elliptical_support(a, theta)) <= 1e-8;
        }
    }
    report(5, "hull oracle cross-checks, normal and two-by-two", ok, timer.seconds());
}

void criterion_6_class_membership(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    const auto ns = powers_of_two(1, 1024);
    for (const SectorialMatrix& sm : instances) {
        for (const double t : {0.1, 1.0, 10.0}) {
            ok = ok && class_c_norms(semigroup(sm, t), sm.alpha).pass;
            for (const std::uint64_t n : ns)
                ok = ok && class_c_norms(euler_approx(sm, t, n), sm.alpha).pass;
        }
    }
    report(6, "contraction-class membership of semigroup and euler approximants", ok,
           timer.seconds());
}

void criterion_7_range_localization(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    for (const SectorialMatrix& sm : instances)
        ok = ok && main_theorem_check(sm, {0.1, 1.0, 10.0}, 256, 1e-7).all_pass();
    report(7, "semigroup range localization in the squared image", ok, timer.seconds());
}

void criterion_8_error_bound(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    const auto ns = powers_of_two(1, 1024);
    for (const SectorialMatrix& sm : instances)
        for (const double t : {0.5, 1.0, 2.0}) {
            const EulerReport er = euler_error_table(sm, t, ns);
            for (const EulerRow& row : er.rows) ok = ok && row.ratio <= 1.0;
        }
    for (const double al : kAlphaGrid) {
        const Angle a(al);
        const double ca2 = std::cos(al) * std::cos(al);
        for (const int n : {1, 4, 16, 64}) {
            const double sup = scalar_g_sup(a, n, 50.0 * n, 10000);
            ok = ok && sup * n * ca2 <= 1.0 + 1e-6;
        }
    }
    const double secs = timer.seconds();
    report(8, "euler approximation error bound", ok && secs < 60.0, secs);
}

void criterion_9_decay_rate(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    int fitted = 0;
    for (const SectorialMatrix& sm : instances) {
        const EulerReport er = euler_error_table(sm, 1.0, euler_slope_steps(sm, 1.0));
        if (er.slope_rows < 4) continue; // not enough resolved rows to fit
        ++fitted;
        ok = ok && er.slope >= -1.25 && er.slope <= -0.85;
    }
    ok = ok && fitted == static_cast<int>(instances.size());
    report(9, "euler error decay rate", ok, timer.seconds());
}

void criterion_10_resolvent(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    for (const SectorialMatrix& sm : instances) {
        const CMatrix id = CMatrix::identity(sm.s.dim());
        const double sa = std::sin(sm.alpha.radians());
        const double ca = std::cos(sm.alpha.radians());
        for (const double lam : {0.1, 1.0, 10.0}) {
            const CMatrix f = resolvent_contraction(sm, lam);
            ok = ok && hull_in_region(compute_hull(f, 256),
                                      {RegionFamily::Lset, sm.alpha}, 1e-8)
                           .pass;
            const CMatrix sh = f - id * 0.5;
            ok = ok && operator_norm(sh * sa + id * cplx(0.0, ca / 2.0)) <= 0.5 + 1e-9;
            ok = ok && operator_norm(sh * sa - id * cplx(0.0, ca / 2.0)) <= 0.5 + 1e-9;
        }
    }
    report(10, "resolvent localization in the half-lens", ok, timer.seconds());
}

void criterion_11_bounds_and_products(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    for (const SectorialMatrix& sm : instances)
        ok = ok && derived_bounds_check(sm, {0.1, 1.0, 10.0}).all_pass();

    std::vector<std::vector<std::size_t>> pools(4);
    for (std::size_t i = 0; i < instances.size(); ++i) pools[(i / 4) % 4].push_back(i);

    Rng root(8000);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t ai = static_cast<std::size_t>(trial) % 4;
        const Angle alpha(kAlphaGrid[ai]);
        Rng rng = root.substream(static_cast<std::uint64_t>(trial));
        std::vector<ProductFactor> factors;
        for (int f = 0; f < 3; ++f) {
            const std::vector<std::size_t>& pool = pools[ai];
            const SectorialMatrix& sm = instances[pool[rng.next() % pool.size()]];
            factors.push_back({sm, rng.uniform(0.0, 3.0),
                               random_unit_vector(sm.s.dim(), rng)});
        }
        ok = ok && product_inequality_check(factors, alpha).all_pass();
    }
    report(11, "endpoint bounds and product inequality", ok, timer.seconds());
}

void criterion_12_power_difference(const std::vector<SectorialMatrix>& instances) {
    Timer timer;
    bool ok = true;
    const auto ns = powers_of_two(1, 1024);
    for (const SectorialMatrix& sm : instances)
        ok = ok && power_difference_check(resolvent_contraction(sm, 1.0), ns).all_pass();

    // Hermitian oracle: top eigenvalue c = 1024/1025 makes (n+1)|C^n - C^(n+1)|
    // equal (n+1) c^n (1-c), which at n = 1024 sits within 2% of 1/e.
    Rng rng(4242);
    const CMatrix g = random_gaussian_matrix(3, rng);
    const CMatrix u = herm_eigen((g + g.adjoint()) * 0.5).vectors;
    const CMatrix c =
        u * CMatrix::diagonal(std::vector<double>{0.3, 0.9, 1024.0 / 1025.0}) * u.adjoint();
    const double v = power_difference_values(c, {1024}).front();
    ok = ok && std::abs(v * std::numbers::e - 1.0) <= 0.02;
    report(12, "power-difference decay of resolvent contractions", ok, timer.seconds());
}

} // namespace

int main() {
    Timer total;
    std::printf("building 100 shared instances...\n");
    const std::vector<SectorialMatrix> instances = shared_instances();

    criterion_1_inclusion_chain();
    criterion_2_closure();
    criterion_3_convexity();
    criterion_4_peak_height();
    criterion_5_hull_oracles();
    criterion_6_class_membership(instances);
    criterion_7_range_localization(instances);
    criterion_8_error_bound(instances);
    criterion_9_decay_rate(instances);
    criterion_10_resolvent(instances);
    criterion_11_bounds_and_products(instances);
    criterion_12_power_difference(instances);

    std::printf("%d of 12 checks passed in %.2fs\n", 12 - g_failures, total.seconds());
    return g_failures == 0 ? 0 : 1;
}
