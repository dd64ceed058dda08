#pragma once

#include <complex>
#include <cstddef>

namespace speccon::kernels {

// Data-parallel primitives behind the numeric inner loops. Every entry has a
// scalar reference implementation plus SIMD variants; the active set is chosen
// once at startup from the CPU (see dispatch below) and is equivalence-tested
// against the scalar reference. All pointers may be unaligned.

using dot_fn = double (*)(const double*, const double*, std::size_t);
using axpy_fn = void (*)(double, const double*, double*, std::size_t);
using sum_sq_fn = double (*)(const double*, std::size_t);
using sum_abs_fn = double (*)(const double*, std::size_t);
using mul_fn = void (*)(const double*, const double*, double*, std::size_t);
using soft_threshold_fn = void (*)(const double*, double, double*, std::size_t);
using caxpy_conj_fn = void (*)(std::complex<double>, const std::complex<double>*,
                               std::complex<double>*, std::size_t);

struct KernelTable {
    dot_fn dot;                        // sum_i a[i]*b[i]
    axpy_fn axpy;                      // y[i] += alpha*x[i]
    sum_sq_fn sum_sq;                  // sum_i a[i]^2
    sum_abs_fn sum_abs;                // sum_i |a[i]|
    mul_fn mul;                        // out[i] = a[i]*b[i]
    soft_threshold_fn soft_threshold;  // out[i] = sign(x[i])*max(|x[i]|-t, 0)
    caxpy_conj_fn caxpy_conj;          // y[i] += a*conj(x[i])
    const char* name;
};

// Active kernel set. Resolution order: SPECCON_SIMD env override
// ("scalar"/"avx2"/"neon"), else the best set the CPU supports.
const KernelTable& active();

// Scalar reference set, always available (tests compare against it).
const KernelTable& scalar();

const char* active_backend_name();

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;  // valid only if cpu_has_avx2_fma()
bool cpu_has_avx2_fma();
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace speccon::kernels
