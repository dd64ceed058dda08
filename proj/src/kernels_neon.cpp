#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <complex>
#include <cstddef>

#include "speccon/kernels.hpp"

// NEON kernel variants for aarch64, selected at compile time (NEON is baseline
// there). Two-lane doubles; same remainder handling as the AVX2 set.

namespace speccon::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double sum_sq_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(a + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_abs_neon(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

void mul_neon(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void soft_threshold_neon(const double* x, double t, double* out, std::size_t n) {
    const float64x2_t vt = vdupq_n_f64(t);
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        const float64x2_t mag = vsubq_f64(vabsq_f64(v), vt);
        const uint64x2_t keep = vcgtq_f64(mag, zero);
        const uint64x2_t sign =
            vandq_u64(vreinterpretq_u64_f64(v), vdupq_n_u64(0x8000000000000000ULL));
        const float64x2_t signed_mag =
            vreinterpretq_f64_u64(vorrq_u64(vreinterpretq_u64_f64(mag), sign));
        vst1q_f64(out + i, vreinterpretq_f64_u64(
                               vandq_u64(keep, vreinterpretq_u64_f64(signed_mag))));
    }
    for (; i < n; ++i) {
        const double v = x[i];
        const double m = std::fabs(v) - t;
        out[i] = m > 0.0 ? std::copysign(m, v) : 0.0;
    }
}

void caxpy_conj_neon(std::complex<double> a, const std::complex<double>* x,
                     std::complex<double>* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const float64x2_t vre = vdupq_n_f64(a.real());
    const float64x2_t vim = vdupq_n_f64(a.imag());
    const float64x2_t oddneg = {0.0, -0.0};  // negates the imaginary lane
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(xp + 2 * i);         // [xr, xi]
        const float64x2_t vsw = vextq_f64(v, v, 1);          // [xi, xr]
        const float64x2_t t1 = vreinterpretq_f64_u64(
            veorq_u64(vreinterpretq_u64_f64(vmulq_f64(vre, v)),
                      vreinterpretq_u64_f64(oddneg)));       // [ar*xr, -ar*xi]
        float64x2_t acc = vld1q_f64(yp + 2 * i);
        acc = vaddq_f64(acc, t1);
        acc = vfmaq_f64(acc, vim, vsw);                      // += [ai*xi, ai*xr]
        vst1q_f64(yp + 2 * i, acc);
    }
}

}  // namespace

namespace detail {
const KernelTable neon_table = {
    dot_neon,     axpy_neon,           sum_sq_neon,     sum_abs_neon,
    mul_neon,     soft_threshold_neon, caxpy_conj_neon, "neon",
};
}  // namespace detail

}  // namespace speccon::kernels

#endif  // __aarch64__
