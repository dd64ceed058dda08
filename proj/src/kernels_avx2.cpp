#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <complex>
#include <cstddef>

#include "speccon/kernels.hpp"

// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the dispatch table after the
// runtime CPU check. Reductions use two accumulators, so results can differ
// from the scalar reference by reassociation rounding only.

namespace speccon::kernels {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc0);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double sum_sq_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d v0 = _mm256_loadu_pd(a + i);
        const __m256d v1 = _mm256_loadu_pd(a + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    acc0 = _mm256_add_pd(acc0, acc1);
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc0);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_abs_avx2(const double* a, std::size_t n) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_and_pd(absmask, _mm256_loadu_pd(a + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void soft_threshold_avx2(const double* x, double t, double* out, std::size_t n) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d signmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x8000000000000000ULL));
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        const __m256d mag = _mm256_sub_pd(_mm256_and_pd(absmask, v), vt);
        const __m256d keep = _mm256_cmp_pd(mag, zero, _CMP_GT_OQ);
        const __m256d signed_mag = _mm256_or_pd(mag, _mm256_and_pd(signmask, v));
        _mm256_storeu_pd(out + i, _mm256_and_pd(keep, signed_mag));
    }
    for (; i < n; ++i) {
        const double v = x[i];
        const double m = std::fabs(v) - t;
        out[i] = m > 0.0 ? std::copysign(m, v) : 0.0;
    }
}

void caxpy_conj_avx2(std::complex<double> a, const std::complex<double>* x,
                     std::complex<double>* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d vre = _mm256_set1_pd(a.real());
    const __m256d vim = _mm256_set1_pd(a.imag());
    // Flips the sign of the imaginary lanes of ar*x, giving
    // [ar*xr, -ar*xi] per complex; adding ai*[xi, xr] yields a*conj(x).
    const __m256d oddneg = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(xp + 2 * i);
        const __m256d vsw = _mm256_shuffle_pd(v, v, 0b0101);
        __m256d acc = _mm256_loadu_pd(yp + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_xor_pd(_mm256_mul_pd(vre, v), oddneg));
        acc = _mm256_fmadd_pd(vim, vsw, acc);
        _mm256_storeu_pd(yp + 2 * i, acc);
    }
    const double ar = a.real(), ai = a.imag();
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] += std::complex<double>(ar * xr + ai * xi, ai * xr - ar * xi);
    }
}

}  // namespace

namespace detail {

bool cpu_has_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable avx2_table = {
    dot_avx2,     axpy_avx2,           sum_sq_avx2,     sum_abs_avx2,
    mul_avx2,     soft_threshold_avx2, caxpy_conj_avx2, "avx2",
};

}  // namespace detail
}  // namespace speccon::kernels

#endif  // x86-64
