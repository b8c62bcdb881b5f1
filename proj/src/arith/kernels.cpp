#include "macjt/arith/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define MACJT_X86 1
#else
#define MACJT_X86 0
#endif

#if defined(__aarch64__)
#include <arm_neon.h>
#define MACJT_NEON 1
#else
#define MACJT_NEON 0
#endif

namespace macjt::kernels {

namespace {

std::atomic<Isa> &active_slot()
{
    static std::atomic<Isa> slot{detected_isa()};
    return slot;
}

bool supported(Isa isa) noexcept
{
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if MACJT_X86
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon: return MACJT_NEON != 0;
    }
    return false;
}

} // namespace

const char *isa_name(Isa isa) noexcept
{
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

Isa detected_isa() noexcept
{
    if (supported(Isa::avx2)) return Isa::avx2;
    if (supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) noexcept
{
    if (!supported(isa)) isa = Isa::scalar;
    active_slot().store(isa, std::memory_order_relaxed);
    return isa;
}

void axpy_scalar(double *dst, const double *src, double a, std::size_t n) noexcept
{
    for (std::size_t i = 0; i < n; ++i) dst[i] += a * src[i];
}

#if MACJT_X86
__attribute__((target("avx2,fma"))) void axpy_avx2(double *dst, const double *src, double a,
                                                    std::size_t n) noexcept
{
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d d0 = _mm256_loadu_pd(dst + i);
        __m256d d1 = _mm256_loadu_pd(dst + i + 4);
        d0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(src + i), d0);
        d1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(src + i + 4), d1);
        _mm256_storeu_pd(dst + i, d0);
        _mm256_storeu_pd(dst + i + 4, d1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d d0 = _mm256_loadu_pd(dst + i);
        d0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(src + i), d0);
        _mm256_storeu_pd(dst + i, d0);
    }
    for (; i < n; ++i) dst[i] += a * src[i];
}
#endif

#if MACJT_NEON
void axpy_neon(double *dst, const double *src, double a, std::size_t n) noexcept
{
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vld1q_f64(dst + i);
        d = vfmaq_f64(d, va, vld1q_f64(src + i));
        vst1q_f64(dst + i, d);
    }
    for (; i < n; ++i) dst[i] += a * src[i];
}
#endif

void axpy(std::span<double> dst, std::span<const double> src, double a) noexcept
{
    const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
    switch (active_isa()) {
#if MACJT_X86
        case Isa::avx2: axpy_avx2(dst.data(), src.data(), a, n); return;
#endif
#if MACJT_NEON
        case Isa::neon: axpy_neon(dst.data(), src.data(), a, n); return;
#endif
        default: axpy_scalar(dst.data(), src.data(), a, n); return;
    }
}

void conv2d(const double *a, std::size_t ar, std::size_t ac, const double *b, std::size_t br,
            std::size_t bc, double *c) noexcept
{
    using Fn = void (*)(double *, const double *, double, std::size_t) noexcept;
    Fn fn = axpy_scalar;
#if MACJT_X86
    if (active_isa() == Isa::avx2) fn = axpy_avx2;
#endif
#if MACJT_NEON
    if (active_isa() == Isa::neon) fn = axpy_neon;
#endif
    const std::size_t cc = ac + bc - 1;
    for (std::size_t i = 0; i < ar; ++i) {
        for (std::size_t j = 0; j < ac; ++j) {
            const double s = a[i * ac + j];
            if (s == 0.0) continue;
            for (std::size_t k = 0; k < br; ++k) fn(c + (i + k) * cc + j, b + k * bc, s, bc);
        }
    }
}

void conv2d_reference(const std::int64_t *a, std::size_t ar, std::size_t ac, const std::int64_t *b,
                      std::size_t br, std::size_t bc, std::int64_t *c) noexcept
{
    const std::size_t cc = ac + bc - 1;
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) c[(i + k) * cc + j + l] += a[i * ac + j] * b[k * bc + l];
}

} // namespace macjt::kernels
