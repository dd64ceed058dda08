#include <cmath>
#include <complex>
#include <cstddef>

#include "speccon/kernels.hpp"

// Reference kernels. Plain loops, no pragmas: these define the semantics the
// SIMD variants are tested against.

namespace speccon::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double sum_sq_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_abs_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void soft_threshold_scalar(const double* x, double t, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i];
        const double m = std::fabs(v) - t;
        out[i] = m > 0.0 ? std::copysign(m, v) : 0.0;
    }
}

void caxpy_conj_scalar(std::complex<double> a, const std::complex<double>* x,
                       std::complex<double>* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        // a * conj(x) = (ar*xr + ai*xi) + i(ai*xr - ar*xi)
        y[i] += std::complex<double>(ar * xr + ai * xi, ai * xr - ar * xi);
    }
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    dot_scalar,     axpy_scalar,           sum_sq_scalar,     sum_abs_scalar,
    mul_scalar,     soft_threshold_scalar, caxpy_conj_scalar, "scalar",
};
}  // namespace detail

}  // namespace speccon::kernels
