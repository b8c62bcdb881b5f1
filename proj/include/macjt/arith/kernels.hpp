#pragma once
// Dense arithmetic kernels behind the bivariate polynomial product.
//
// Coefficients are carried as doubles holding exact integers; callers
// guarantee every partial sum stays below 2^53 in magnitude, so the
// scalar and vector variants produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>

namespace macjt::kernels {

enum class Isa { scalar, avx2, neon };

const char *isa_name(Isa isa) noexcept;

// Best variant supported by the running CPU.
Isa detected_isa() noexcept;

// Variant used by the dispatching entry points. Defaults to detected_isa().
Isa active_isa() noexcept;

// Pin the dispatch target (tests use this to compare variants). Requesting
// an unsupported ISA falls back to scalar. Returns the ISA actually set.
Isa set_active_isa(Isa isa) noexcept;

// dst[i] += a * src[i]
void axpy(std::span<double> dst, std::span<const double> src, double a) noexcept;

void axpy_scalar(double *dst, const double *src, double a, std::size_t n) noexcept;
#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(double *dst, const double *src, double a, std::size_t n) noexcept;
#endif
#if defined(__aarch64__)
void axpy_neon(double *dst, const double *src, double a, std::size_t n) noexcept;
#endif

// Row-major dense 2D convolution: c (ar+br-1) x (ac+bc-1) += a (ar x ac) * b (br x bc).
// Zero entries of `a` are skipped, so pass the sparser operand as `a`.
void conv2d(const double *a, std::size_t ar, std::size_t ac, const double *b, std::size_t br,
            std::size_t bc, double *c) noexcept;

// Exact int64 reference for conv2d; used by the equivalence tests.
void conv2d_reference(const std::int64_t *a, std::size_t ar, std::size_t ac, const std::int64_t *b,
                      std::size_t br, std::size_t bc, std::int64_t *c) noexcept;

} // namespace macjt::kernels
