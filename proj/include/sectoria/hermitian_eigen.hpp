#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "complex_matrix.hpp"
#include "errors.hpp"

namespace sectoria {

/// Spectral decomposition of a Hermitian matrix: H = V diag(values) V*,
/// values ascending, columns of `vectors` the matching orthonormal basis.
struct HermEigen {
    std::vector<double> values;
    CMatrix vectors;
};

namespace detail {

inline double off_diagonal_frobenius(const CMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace detail

/// Cyclic complex Jacobi eigensolver. At these dimensions (n <= 64) the
/// quadratic-per-sweep cost is irrelevant, and Jacobi delivers small
/// backward error and orthonormal vectors without pivoting subtleties.
///
/// The working copy is declared converged once the off-diagonal Frobenius
/// mass drops below 1e-14 * ||H||_F.
inline HermEigen herm_eigen(const CMatrix& h) {
    const int n = h.dim();
    const double scale = frobenius_norm(h);

    // Hermiticity gate: reject drifted input instead of symmetrizing garbage.
    const double dev = frobenius_norm(h - h.adjoint());
    if (!(dev <= 1e-10 * (1.0 + scale)))
        throw NonHermitianInput("herm_eigen: input deviates from Hermitian by " +
                                std::to_string(dev));

    HermEigen out;
    out.vectors = CMatrix::identity(n);
    out.values.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0) return out;

    // Exact symmetrization of the working copy kills round-off drift in the
    // rotations below.
    CMatrix m = (h + h.adjoint()) * 0.5;
    CMatrix& v = out.vectors;

    const double stop = 1e-14 * scale;
    const double skip = 1e-18 * (1.0 + scale);
    const int max_sweeps = 100;
    bool converged = (scale == 0.0);

    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        if (detail::off_diagonal_frobenius(m) <= stop) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx hpq = m(p, q);
                const double ah = std::abs(hpq);
                if (ah <= skip) {
                    m(p, q) = 0.0;
                    m(q, p) = 0.0;
                    continue;
                }
                const cplx phase = hpq / ah;
                const double a = m(p, p).real();
                const double b = m(q, q).real();
                // Inner 2x2 rotation: classical Jacobi angle against |h_pq|,
                // the phase is carried by the off-diagonal entries of J.
                const double tau = (b - a) / (2.0 * ah);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // M <- M J with J = [[c, s*phase], [-s*conj(phase), c]] on (p,q).
                for (int r = 0; r < n; ++r) {
                    const cplx mrp = m(r, p);
                    const cplx mrq = m(r, q);
                    m(r, p) = c * mrp - s * std::conj(phase) * mrq;
                    m(r, q) = s * phase * mrp + c * mrq;
                }
                // M <- J* M.
                for (int col = 0; col < n; ++col) {
                    const cplx mpc = m(p, col);
                    const cplx mqc = m(q, col);
                    m(p, col) = c * mpc - s * phase * mqc;
                    m(q, col) = s * std::conj(phase) * mpc + c * mqc;
                }
                // V <- V J accumulates the eigenbasis.
                for (int r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p);
                    const cplx vrq = v(r, q);
                    v(r, p) = c * vrp - s * std::conj(phase) * vrq;
                    v(r, q) = s * phase * vrp + c * vrq;
                }
                // The rotation annihilates (p,q) exactly; enforce it.
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = cplx(m(p, p).real(), 0.0);
                m(q, q) = cplx(m(q, q).real(), 0.0);
            }
        }
    }
    if (!converged && detail::off_diagonal_frobenius(m) > stop)
        throw std::runtime_error("herm_eigen: Jacobi sweep limit exceeded");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&m](int i, int j) { return m(i, i).real() < m(j, j).real(); });

    CMatrix sorted(n);
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = m(order[static_cast<std::size_t>(k)],
                                                    order[static_cast<std::size_t>(k)])
                                                      .real();
        for (int r = 0; r < n; ++r) sorted(r, k) = v(r, order[static_cast<std::size_t>(k)]);
    }
    out.vectors = std::move(sorted);
    return out;
}

/// Spectral operator norm sqrt(lambda_max(T* T)). Works for arbitrary
/// square complex T; for Hermitian T it equals max |eigenvalue|.
inline double operator_norm(const CMatrix& t) {
    if (t.dim() == 0) return 0.0;
    const CMatrix b = t.adjoint() * t;
    if (frobenius_norm(b) == 0.0) return 0.0;
    const HermEigen eig = herm_eigen(b);
    return std::sqrt(std::max(0.0, eig.values.back()));
}

} // namespace sectoria
