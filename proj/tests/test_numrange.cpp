#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "sectoria/complex_matrix.hpp"
#include "sectoria/hermitian_eigen.hpp"
#include "sectoria/numerical_range.hpp"
#include "sectoria/planar.hpp"
#include "sectoria/rng.hpp"

using namespace sectoria;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix random_hermitian(int n, Rng& rng) {
    const CMatrix g = random_gaussian_matrix(n, rng);
    return (g + g.adjoint()) * 0.5;
}

CMatrix random_unitary(int n, Rng& rng) {
    return herm_eigen(random_hermitian(n, rng)).vectors;
}

// Exact support function of the 2x2 numerical range: an ellipse whose foci
// are the eigenvalues and whose minor axis has length
// sqrt(tr(A*A) - |l1|^2 - |l2|^2).
double elliptical_support(const CMatrix& a, double theta) {
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
    const double psi = (c_focal > 0.0) ? std::arg(l1 - l2) : 0.0;
    const double co = std::cos(theta - psi), si = std::sin(theta - psi);
    return std::cos(theta) * center.real() + std::sin(theta) * center.imag() +
           std::sqrt(semi_major * semi_major * co * co + semi_minor * semi_minor * si * si);
}

} // namespace

TEST_CASE("support function basics") {
    const CMatrix a = CMatrix::diagonal(CVector{0.0, 1.0});
    {
        const auto [h, p] = support_point(a, 0.0);
        CHECK(h == Catch::Approx(1.0).margin(1e-12));
        CHECK(std::abs(p - cplx(1.0)) <= 1e-12);
    }
    {
        const auto [h, p] = support_point(a, kPi);
        CHECK(h == Catch::Approx(0.0).margin(1e-12));
        CHECK(std::abs(p) <= 1e-12);
    }
    SECTION("Hermitian matrices give real support points") {
        Rng rng(101);
        for (int trial = 0; trial < 20; ++trial) {
            const CMatrix h = random_hermitian(4, rng);
            const auto [val, p] = support_point(h, 0.0);
            CHECK(std::abs(p.imag()) <= 1e-12);
            CHECK(val == Catch::Approx(herm_eigen(h).values.back()).margin(1e-12));
        }
    }
    SECTION("support identity holds for random matrices") {
        Rng rng(102);
        for (const int n : {2, 4, 8}) {
            const CMatrix a2 = random_gaussian_matrix(n, rng);
            const double scale = 1.0 + frobenius_norm(a2);
            for (int k = 0; k < 32; ++k) {
                const double theta = 2.0 * kPi * k / 32.0;
                const auto [h, p] = support_point(a2, theta);
                CHECK(std::abs(std::cos(theta) * p.real() + std::sin(theta) * p.imag() - h) <=
                      1e-10 * scale);
            }
        }
    }
}

TEST_CASE("hull of the identity is the point 1") {
    const RangeHull hull = compute_hull(CMatrix::identity(3), 64);
    for (const cplx p : hull.support_points) CHECK(std::abs(p - cplx(1.0)) <= 1e-12);
    for (const cplx v : hull.outer_vertices) CHECK(std::abs(v - cplx(1.0)) <= 1e-10);
    CHECK(hull.gap <= 1e-12);
    CHECK_THROWS_AS(compute_hull(CMatrix::identity(3), 8), std::invalid_argument);
}

TEST_CASE("nilpotent shift block has a disk range") {
    CMatrix a = CMatrix::zero(2);
    a(0, 1) = 1.0;
    const RangeHull hull = compute_hull(a, 128);
    for (const double h : hull.support_values) CHECK(h == Catch::Approx(0.5).margin(1e-10));
    SECTION("gap shrinks quadratically in the angle count") {
        const double g1 = compute_hull(a, 64).gap;
        const double g2 = compute_hull(a, 128).gap;
        CHECK(g1 > 0.0);
        const double ratio = g1 / g2;
        CHECK(ratio >= 3.4);
        CHECK(ratio <= 4.6);
        // Outer vertex to inscribed-chord oracle for a circle of radius 1/2:
        // r (1/cos(pi/m) - cos(pi/m)).
        CHECK(g2 ==
              Catch::Approx(0.5 * (1.0 / std::cos(kPi / 128) - std::cos(kPi / 128))).epsilon(0.05));
    }
}

TEST_CASE("normal matrices: hull equals the convex hull of the spectrum") {
    {
        const CMatrix a = CMatrix::diagonal(CVector{1.0, cplx(0.0, 1.0), -1.0});
        const RangeHull hull = compute_hull(a, 720);
        const std::vector<planar::point> tri{1.0, cplx(0.0, 1.0), -1.0};
        CHECK(planar::hausdorff_convex(hull.inner_hull(), planar::convex_hull(
                                           std::vector<planar::point>(tri))) <= 1e-6);
    }
    SECTION("seeded random normal matrices") {
        Rng rng(500);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 2 + static_cast<int>(rng.uniform() * 7.0); // 2..8
            CVector diag(n);
            for (cplx& d : diag) d = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            const CMatrix u = random_unitary(n, rng);
            const CMatrix a = u * CMatrix::diagonal(diag) * u.adjoint();
            const RangeHull hull = compute_hull(a, 720);
            std::vector<planar::point> spec(diag.begin(), diag.end());
            const double d =
                planar::hausdorff_convex(hull.inner_hull(), planar::convex_hull(spec));
            INFO("trial " << trial << " n " << n);
            CHECK(d <= std::max(10.0 * hull.gap, 1e-6));
        }
    }
}

TEST_CASE("two by two ranges match the elliptical oracle") {
    Rng rng(600);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix a = random_gaussian_matrix(2, rng);
        for (int k = 0; k < 64; ++k) {
            const double theta = 2.0 * kPi * k / 64.0;
            const auto [h, p] = support_point(a, theta);
            (void)p;
            INFO("trial " << trial << " theta " << theta);
            CHECK(std::abs(h - elliptical_support(a, theta)) <= 1e-8);
        }
    }
}

TEST_CASE("sandwich: support points inside the outer polygon") {
    Rng rng(700);
    for (const int n : {2, 4, 8}) {
        const CMatrix a = random_gaussian_matrix(n, rng);
        const RangeHull hull = compute_hull(a, 180);
        const double scale = 1.0 + frobenius_norm(a);
        std::vector<planar::point> outer(hull.outer_vertices.begin(), hull.outer_vertices.end());
        const std::vector<planar::point> poly = planar::convex_hull(outer);
        for (const cplx p : hull.support_points)
            CHECK(planar::polygon_signed_margin(p, poly) >= -1e-10 * scale);
        // Support-line consistency of the reported boundary points.
        for (std::size_t k = 0; k < hull.angles.size(); ++k) {
            const double th = hull.angles[k];
            const cplx p = hull.support_points[k];
            CHECK(std::abs(std::cos(th) * p.real() + std::sin(th) * p.imag() -
                           hull.support_values[k]) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("eigenvalues lie inside the outer polygon") {
    Rng rng(800);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 7.0);
        CMatrix t = CMatrix::zero(n);
        CVector eigs(n);
        for (int i = 0; i < n; ++i) {
            eigs[i] = cplx(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
            t(i, i) = eigs[i];
            for (int j = i + 1; j < n; ++j) t(i, j) = 0.3 * cplx(rng.gaussian(), rng.gaussian());
        }
        const CMatrix u = random_unitary(n, rng);
        const CMatrix a = u * t * u.adjoint();
        const RangeHull hull = compute_hull(a, 256);
        std::vector<planar::point> outer(hull.outer_vertices.begin(), hull.outer_vertices.end());
        const std::vector<planar::point> poly = planar::convex_hull(outer);
        for (const cplx lam : eigs) {
            INFO("trial " << trial << " lambda " << lam.real() << "+" << lam.imag() << "i");
            CHECK(planar::polygon_signed_margin(lam, poly) >= -(hull.gap + 1e-8));
        }
    }
}

TEST_CASE("hull transforms with rotation and shift") {
    Rng rng(900);
    const CMatrix a = random_gaussian_matrix(4, rng);
    for (const double phi : {0.5, 2.1}) {
        const cplx rot = std::polar(1.0, phi);
        const cplx shift(0.3, -0.2);
        const CMatrix b = a * rot + CMatrix::identity(4) * shift;
        const RangeHull ha = compute_hull(a, 360);
        const RangeHull hb = compute_hull(b, 360);
        std::vector<planar::point> mapped;
        for (const cplx p : ha.inner_hull()) mapped.push_back(p * rot + shift);
        const double d = planar::hausdorff_convex(planar::convex_hull(mapped), hb.inner_hull());
        CHECK(d <= 10.0 * std::max(ha.gap, hb.gap));
    }
}

TEST_CASE("hull containment in regions") {
    SECTION("identity inside the unit disk") {
        const RangeHull hull = compute_hull(CMatrix::identity(2), 64);
        const auto rep = hull_in_region(hull, RegionSpec::unit_disk(), 1e-9);
        CHECK(rep.pass);
    }
    SECTION("Hermitian contraction inside the degenerate C segment") {
        Rng rng(1000);
        for (int trial = 0; trial < 10; ++trial) {
            CMatrix h = random_hermitian(4, rng);
            h *= cplx(1.0 / (operator_norm(h) * 1.05));
            const RangeHull hull = compute_hull(h, 256);
            const auto rep =
                hull_in_region(hull, RegionSpec{RegionFamily::Cset, Angle(0.0)}, 1e-8);
            INFO("trial " << trial << " worst " << rep.worst_dist << " gap " << hull.gap);
            CHECK(rep.pass);
        }
    }
    SECTION("scaled identity escapes the unit disk") {
        const RangeHull hull = compute_hull(CMatrix::identity(2) * 2.0, 64);
        const auto rep = hull_in_region(hull, RegionSpec::unit_disk(), 1e-9);
        CHECK_FALSE(rep.pass);
        CHECK(rep.worst_dist == Catch::Approx(1.0).margin(1e-6));
        CHECK(std::abs(rep.witness - cplx(2.0)) <= 1e-3);
    }
}
