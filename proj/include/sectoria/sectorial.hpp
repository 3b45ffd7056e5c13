#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "complex_matrix.hpp"
#include "errors.hpp"
#include "hermitian_eigen.hpp"
#include "linear_solve.hpp"
#include "numerical_range.hpp"
#include "regions.hpp"
#include "rng.hpp"

namespace sectoria {

/// A matrix S together with a certificate that W(S) lies in the sector
/// |arg z| <= alpha. `cert` is the worst sector margin over the outer
/// vertices of the certified range hull (>= -1e-8 in distance terms).
struct SectorialMatrix {
    CMatrix s;
    Angle alpha;
    double cert = 0.0;
};

/// Certify W(S) inside Sector(alpha) from an m-angle range hull; throws
/// CertificationFailure when the containment check fails.
inline SectorialMatrix make_sectorial(const CMatrix& s, Angle alpha, int m = 720,
                                      double tol = 1e-8) {
    const RangeHull hull = compute_hull(s, m);
    const RegionSpec sector{RegionFamily::Sector, alpha};
    const HullContainmentReport rep = hull_in_region(hull, sector, tol);
    if (!rep.pass) {
        std::ostringstream msg;
        msg << "make_sectorial: numerical range escapes the sector by " << rep.worst_dist
            << " at " << rep.witness.real() << (rep.witness.imag() < 0 ? "-" : "+")
            << std::abs(rep.witness.imag()) << "i";
        throw CertificationFailure(msg.str());
    }
    double worst = std::numeric_limits<double>::infinity();
    for (const cplx v : hull.outer_vertices) worst = std::min(worst, margin(sector, v));
    return {s, alpha, worst};
}

/// Seeded random matrix with W(S) inside Sector(alpha) by construction:
///   S = H + i tan(alpha) H^{1/2} R H^{1/2},
/// H = G*G + eps I positive definite, R Hermitian with |R| = rho < 1, so
/// |Im(Sx,x)| = tan(alpha) |(R H^{1/2}x, H^{1/2}x)| <= tan(alpha) Re(Sx,x).
/// The containment is re-certified numerically before returning.
inline SectorialMatrix random_sectorial(int dim, Angle alpha, std::uint64_t seed, int m = 720,
                                        double tol = 1e-8) {
    if (dim < 1) throw std::invalid_argument("random_sectorial: dim must be positive");
    Rng rng(seed);
    // Fixed draw order (G, B, rho) regardless of alpha keeps the stream
    // layout identical across the alpha grid for a given seed.
    const CMatrix g = random_gaussian_matrix(dim, rng);
    const CMatrix b = random_gaussian_matrix(dim, rng);
    const double rho = rng.uniform();

    const CMatrix gg = g.adjoint() * g;
    const double eps = 1e-3 * operator_norm(gg);
    const CMatrix h = gg + CMatrix::identity(dim) * eps;

    const HermEigen eh = herm_eigen(h);
    std::vector<double> roots(eh.values.size());
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = std::sqrt(std::max(0.0, eh.values[i]));
    const CMatrix hroot = eh.vectors * CMatrix::diagonal(roots) * eh.vectors.adjoint();

    CMatrix r = (b + b.adjoint()) * 0.5;
    const double rn = operator_norm(r);
    if (rn > 0.0) r *= cplx(rho / rn);

    const CMatrix skew = hroot * r * hroot;
    const CMatrix s = h + skew * cplx(0.0, std::tan(alpha.radians()));
    return make_sectorial(s, alpha, m, tol);
}

/// Membership certificate for the contraction class:
/// both of |T sin(a) +- i cos(a) I| must be <= 1 (tolerance 1e-9).
struct ClassCCert {
    double norm_plus = 0.0;
    double norm_minus = 0.0;
    bool pass = false;
};

inline ClassCCert class_c_norms(const CMatrix& t, Angle alpha) {
    const double sa = std::sin(alpha.radians()), ca = std::cos(alpha.radians());
    const CMatrix id = CMatrix::identity(t.dim());
    ClassCCert cert;
    cert.norm_plus = operator_norm(t * sa + id * cplx(0.0, ca));
    cert.norm_minus = operator_norm(t * sa - id * cplx(0.0, ca));
    cert.pass = std::max(cert.norm_plus, cert.norm_minus) <= 1.0 + 1e-9;
    return cert;
}

/// Vectorwise form of the same class membership: the slack
///   tan(a)(|f|^2 - |Tf|^2) - 2|Im(Tf, f)|
/// is nonnegative for every unit vector f exactly when T is in the class.
inline double class_c_vector_criterion(const CMatrix& t, Angle alpha, const CVector& f) {
    if (alpha.degenerate())
        throw DegenerateAngle("class_c_vector_criterion: alpha must be positive");
    const double nf = vec_norm(f);
    if (std::abs(nf - 1.0) > 1e-12)
        throw std::invalid_argument("class_c_vector_criterion: f must be a unit vector");
    const CVector tf = t * f;
    const double ntf = vec_norm(tf);
    return std::tan(alpha.radians()) * (nf * nf - ntf * ntf) -
           2.0 * std::abs(inner(tf, f).imag());
}

/// T = (I - S)(I + S)^{-1}. The factors commute, so this equals
/// (I + S)^{-1}(I - S) and one linear solve suffices. The map is an
/// involution; inverse_cayley is the same formula applied to T.
inline CMatrix cayley(const CMatrix& s) {
    const CMatrix id = CMatrix::identity(s.dim());
    return solve(id + s, id - s);
}

inline CMatrix inverse_cayley(const CMatrix& t) { return cayley(t); }

/// F(lambda) = (I + lambda S)^{-1}, a contraction with W(F) in L(alpha);
/// equivalently (cayley(lambda S) + I)/2.
inline CMatrix resolvent_contraction(const SectorialMatrix& sm, double lambda) {
    if (!(lambda >= 0.0))
        throw std::invalid_argument("resolvent_contraction: lambda must be nonnegative");
    const CMatrix id = CMatrix::identity(sm.s.dim());
    return solve(id + sm.s * lambda, id);
}

/// (T1 T2 + T2 T1)/2. The class parameter is part of the call contract
/// (membership of the output is asserted at that alpha); the formula itself
/// does not depend on it.
inline CMatrix symmetrized_product(const CMatrix& t1, const CMatrix& t2, Angle alpha) {
    (void)alpha;
    if (t1.dim() != t2.dim())
        throw std::invalid_argument("symmetrized_product: dimension mismatch");
    return (t1 * t2 + t2 * t1) * 0.5;
}

/// W(T^{2n}) must land in Omega(alpha) for class members T; checked through
/// the certified range hull of the binary-powered matrix.
inline HullContainmentReport even_power_range_check(const CMatrix& t, Angle alpha, int n, int m) {
    if (n < 1) throw std::invalid_argument("even_power_range_check: n must be positive");
    const CMatrix p = matrix_power(t, 2ull * static_cast<std::uint64_t>(n));
    return hull_in_region(compute_hull(p, m), RegionSpec{RegionFamily::Omega, alpha}, 1e-7);
}

} // namespace sectoria
