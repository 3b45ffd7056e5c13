#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sectoria {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense square complex matrix, row-major storage. All dimensions in this
/// library are desk-scale (n <= 64), so everything is plain O(n^3) code with
/// value semantics; no attempt is made at blocking or expression templates.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n)
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("CMatrix: negative dimension");
    }

    static CMatrix zero(int n) { return CMatrix(n); }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix diagonal(const CVector& d) {
        CMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    static CMatrix diagonal(const std::vector<double>& d) {
        CMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[idx(i, j)]; }
    const cplx& operator()(int i, int j) const { return a_[idx(i, j)]; }

    CMatrix adjoint() const {
        CMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMatrix& operator+=(const CMatrix& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(CMatrix a, double s) { return a *= cplx(s, 0.0); }
    friend CMatrix operator*(double s, CMatrix a) { return a *= cplx(s, 0.0); }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        a.check_same_dim(b);
        const int n = a.n_;
        CMatrix r(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0, 0.0)) continue;
                for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend CVector operator*(const CMatrix& a, const CVector& x) {
        if (static_cast<int>(x.size()) != a.n_)
            throw std::invalid_argument("CMatrix: vector dimension mismatch");
        CVector y(x.size());
        for (int i = 0; i < a.n_; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < a.n_; ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return y;
    }

    bool is_finite() const {
        for (const auto& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }
    void check_same_dim(const CMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("CMatrix: dimension mismatch");
    }

    int n_ = 0;
    std::vector<cplx> a_;
};

inline double frobenius_norm(const CMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

/// Maximum absolute column sum.
inline double one_norm(const CMatrix& m) {
    double best = 0.0;
    for (int j = 0; j < m.dim(); ++j) {
        double s = 0.0;
        for (int i = 0; i < m.dim(); ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

/// Hermitian/skew decomposition T = Re + i Im with both parts Hermitian:
/// Re = (T + T*)/2, Im = (T - T*)/(2i).
inline std::pair<CMatrix, CMatrix> cartesian_parts(const CMatrix& t) {
    const CMatrix ad = t.adjoint();
    CMatrix re = (t + ad) * 0.5;
    CMatrix im = (t - ad) * cplx(0.0, -0.5); // 1/(2i) = -i/2
    return {std::move(re), std::move(im)};
}

/// Inner product, linear in the first argument: <x,y> = sum x_k conj(y_k).
inline cplx inner(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: size mismatch");
    cplx s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * std::conj(y[k]);
    return s;
}

inline double vec_norm(const CVector& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

/// (A u, u) for the inner product above.
inline cplx quadratic_form(const CMatrix& a, const CVector& u) { return inner(a * u, u); }

} // namespace sectoria
