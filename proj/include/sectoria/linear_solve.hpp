#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "complex_matrix.hpp"
#include "errors.hpp"

namespace sectoria {

/// Solve A X = B by LU with partial pivoting. Throws SingularMatrix when a
/// pivot falls below 1e-14 * ||A||_F; at these dimensions that threshold
/// separates genuine rank loss from round-off.
inline CMatrix solve(const CMatrix& a, const CMatrix& b) {
    const int n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("solve: dimension mismatch");
    const double pivot_floor = 1e-14 * frobenius_norm(a);

    CMatrix lu = a;
    CMatrix x = b;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu(k, k));
        for (int r = k + 1; r < n; ++r) {
            const double cand = std::abs(lu(r, k));
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (!(best > pivot_floor))
            throw SingularMatrix("solve: pivot below tolerance at column " + std::to_string(k));
        if (piv != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(lu(k, j), lu(piv, j));
                std::swap(x(k, j), x(piv, j));
            }
        }
        const cplx d = lu(k, k);
        for (int r = k + 1; r < n; ++r) {
            const cplx f = lu(r, k) / d;
            if (f == cplx(0.0, 0.0)) continue;
            lu(r, k) = 0.0;
            for (int j = k + 1; j < n; ++j) lu(r, j) -= f * lu(k, j);
            for (int j = 0; j < n; ++j) x(r, j) -= f * x(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        const cplx d = lu(k, k);
        for (int j = 0; j < n; ++j) {
            cplx s = x(k, j);
            for (int r = k + 1; r < n; ++r) s -= lu(k, r) * x(r, j);
            x(k, j) = s / d;
        }
    }
    return x;
}

inline CMatrix inverse(const CMatrix& a) { return solve(a, CMatrix::identity(a.dim())); }

/// M^k by binary powering; k = 0 gives the identity.
inline CMatrix matrix_power(const CMatrix& m, std::uint64_t k) {
    CMatrix acc = CMatrix::identity(m.dim());
    CMatrix base = m;
    while (k > 0) {
        if (k & 1ULL) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

/// (I + c A)^{-n}: one LU solve for the resolvent factor, then binary
/// powering. n = 0 yields the identity.
inline CMatrix inv_power(const CMatrix& a, double c, std::uint64_t n) {
    const CMatrix m = solve(CMatrix::identity(a.dim()) + a * c, CMatrix::identity(a.dim()));
    return matrix_power(m, n);
}

} // namespace sectoria
