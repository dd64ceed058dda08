#include "speccon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "speccon/kernels.hpp"

namespace speccon::linalg {

namespace {
const auto& K() { return kernels::active(); }
}  // namespace

Matrix cholesky(const SymMatrix& a) {
    const std::size_t p = a.dim();
    Matrix l(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        double d = a.at(j, j) - K().sum_sq(l.row(j), j);
        if (!(d > 0.0) || !std::isfinite(d))
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(j) +
                                      " is not positive");
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < p; ++i)
            l(i, j) = (a.at(i, j) - K().dot(l.row(i), l.row(j), j)) / ljj;
    }
    return l;
}

double log_det(const SymMatrix& a) {
    const Matrix l = cholesky(a);
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::log(l(i, i));
    return 2.0 * s;
}

std::vector<double> cholesky_solve(const Matrix& l, const std::vector<double>& b) {
    const std::size_t p = l.rows();
    std::vector<double> y(p);
    for (std::size_t i = 0; i < p; ++i)
        y[i] = (b[i] - K().dot(l.row(i), y.data(), i)) / l(i, i);
    for (std::size_t k = p; k-- > 0;) {
        double s = y[k];
        for (std::size_t i = k + 1; i < p; ++i) s -= l(i, k) * y[i];
        y[k] = s / l(k, k);
    }
    return y;
}

SymMatrix invert(const SymMatrix& a) {
    const std::size_t p = a.dim();
    const Matrix l = cholesky(a);

    // Invert the triangular factor in place, then form inv(a) = linv^T * linv.
    Matrix linv(p, p);
    for (std::size_t j = 0; j < p; ++j) {
        linv(j, j) = 1.0 / l(j, j);
        for (std::size_t i = j + 1; i < p; ++i) {
            double s = 0.0;
            for (std::size_t k = j; k < i; ++k) s += l(i, k) * linv(k, j);
            linv(i, j) = -s / l(i, i);
        }
    }
    SymMatrix out(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            double s = 0.0;
            for (std::size_t k = j; k < p; ++k) s += linv(k, i) * linv(k, j);
            out.set(i, j, s);
        }
    return out;
}

double soft_threshold(double x, double t) {
    const double m = std::fabs(x) - t;
    return m > 0.0 ? std::copysign(m, x) : 0.0;
}

namespace {

// Householder reduction to symmetric tridiagonal form. On return `q` holds the
// accumulated orthogonal transform, `d` the diagonal and `e` the subdiagonal
// (e[i] couples d[i] and d[i+1]; e[n-1] is zero).
void tridiagonalize(Matrix& a, Matrix& q, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = a.rows();
    q = Matrix::identity(n);
    std::vector<double> v(n), u(n), w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;  // size of the trailing block
        double sigma2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = a(k + 1 + i, k);
            sigma2 += v[i] * v[i];
        }
        const double sigma = std::sqrt(sigma2);
        if (sigma == 0.0) continue;  // column already tridiagonal here

        const double alpha = v[0] >= 0.0 ? -sigma : sigma;
        v[0] -= alpha;
        const double vn2 = K().sum_sq(v.data(), m);
        if (vn2 == 0.0) continue;
        const double beta = 2.0 / vn2;

        // u = beta * A22 * v
        for (std::size_t i = 0; i < m; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
            u[i] = beta * s;
        }
        const double vu = K().dot(v.data(), u.data(), m);
        for (std::size_t i = 0; i < m; ++i) w[i] = u[i] - 0.5 * beta * vu * v[i];

        // A22 <- A22 - v w^T - w v^T
        for (std::size_t i = 0; i < m; ++i) {
            double* arow = a.row(k + 1 + i) + (k + 1);
            K().axpy(-v[i], w.data(), arow, m);
            K().axpy(-w[i], v.data(), arow, m);
        }
        a(k + 1, k) = alpha;
        a(k, k + 1) = alpha;
        for (std::size_t i = 2; i <= m; ++i) {
            a(k + i, k) = 0.0;
            a(k, k + i) = 0.0;
        }

        // Q <- Q * H, with H acting on trailing indices
        for (std::size_t r = 0; r < n; ++r) {
            double* qrow = q.row(r) + (k + 1);
            const double t = K().dot(qrow, v.data(), m);
            K().axpy(-beta * t, v.data(), qrow, m);
        }
    }

    d.resize(n);
    e.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = a(i + 1, i);
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix, rotating the
// columns of `q` along. Classical EISPACK tql2 scheme.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix& q) {
    const std::size_t n = d.size();
    if (n <= 1) return;
    const double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            std::size_t m = l;
            while (m + 1 < n) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > 60)
                throw std::runtime_error("eigen_sym: QL iteration failed to converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {  // deflate: rotation annihilated prematurely
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < n; ++k) {
                    f = q(k, i + 1);
                    q(k, i + 1) = s * q(k, i) + c * f;
                    q(k, i) = c * q(k, i) - s * f;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

EigenSym eigen_sym(const SymMatrix& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n * n; ++i)
        if (!std::isfinite(a.data()[i]))
            throw NonFiniteInput("eigen_sym: non-finite entry");

    Matrix work = a.dense();
    Matrix q;
    std::vector<double> d, e;
    tridiagonalize(work, q, d, e);
    ql_implicit(d, e, q);

    // Sort ascending, permuting eigenvector columns along.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

    EigenSym out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[idx[k]];
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = q(r, idx[k]);
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dims differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* crow = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k)
            K().axpy(a(i, k), b.row(k), crow, b.cols());
    }
    return c;
}

double frobenius_norm(const Matrix& a) {
    return std::sqrt(K().sum_sq(a.data(), a.rows() * a.cols()));
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("frobenius_distance: dims differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
        const double d = a.data()[i] - b.data()[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double spectral_norm_sym(const SymMatrix& a, int iters) {
    const std::size_t p = a.dim();
    std::vector<double> v(p), av(p);
    for (std::size_t i = 0; i < p; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
    double norm = 0.0;
    for (int it = 0; it < iters; ++it) {
        for (std::size_t i = 0; i < p; ++i) av[i] = K().dot(a.row(i), v.data(), p);
        norm = std::sqrt(K().sum_sq(av.data(), p));
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < p; ++i) v[i] = av[i] / norm;
    }
    return norm;
}

std::vector<cplx> herm_cholesky(const HermMatrix& a) {
    const std::size_t p = a.dim();
    std::vector<cplx> l(p * p, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < p; ++j) {
        double d = a.at(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l[j * p + k]);
        if (!(d > 0.0) || !std::isfinite(d))
            throw NotPositiveDefinite("herm_cholesky: pivot " + std::to_string(j) +
                                      " is not positive");
        const double ljj = std::sqrt(d);
        l[j * p + j] = ljj;
        for (std::size_t i = j + 1; i < p; ++i) {
            cplx s = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l[i * p + k] * std::conj(l[j * p + k]);
            l[i * p + j] = s / ljj;
        }
    }
    return l;
}

HermMatrix herm_invert(const HermMatrix& a) {
    const std::size_t p = a.dim();
    const std::vector<cplx> l = herm_cholesky(a);

    std::vector<cplx> linv(p * p, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < p; ++j) {
        linv[j * p + j] = 1.0 / l[j * p + j].real();
        for (std::size_t i = j + 1; i < p; ++i) {
            cplx s{0.0, 0.0};
            for (std::size_t k = j; k < i; ++k) s += l[i * p + k] * linv[k * p + j];
            linv[i * p + j] = -s / l[i * p + i].real();
        }
    }
    HermMatrix out(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i; j < p; ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t k = j; k < p; ++k) s += std::conj(linv[k * p + i]) * linv[k * p + j];
            out.set(i, j, s);
        }
    return out;
}

}  // namespace speccon::linalg
