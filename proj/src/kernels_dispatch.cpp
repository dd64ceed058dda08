#include <cstdlib>
#include <cstring>

#include "speccon/kernels.hpp"

namespace speccon::kernels {
namespace {

const KernelTable* resolve() {
    if (const char* env = std::getenv("SPECCON_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return &detail::scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(env, "avx2") == 0 && detail::cpu_has_avx2_fma())
            return &detail::avx2_table;
#endif
#if defined(__aarch64__)
        if (std::strcmp(env, "neon") == 0) return &detail::neon_table;
#endif
        // Unknown or unsupported override: fall through to auto-detection.
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (detail::cpu_has_avx2_fma()) return &detail::avx2_table;
#endif
#if defined(__aarch64__)
    return &detail::neon_table;
#endif
    return &detail::scalar_table;
}

}  // namespace

const KernelTable& active() {
    static const KernelTable* table = resolve();
    return *table;
}

const KernelTable& scalar() { return detail::scalar_table; }

const char* active_backend_name() { return active().name; }

}  // namespace speccon::kernels
