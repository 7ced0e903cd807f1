#pragma once

// Batched integer affine row combination:
//
//   out[r * batch + b] = bias[r] + sum_j coeff[r * cols + j] * in[j * batch + b]
//
// with int32 coefficients/inputs and int64 accumulation. This is the inner
// loop of circle multiplication applied to many symbols (or coordinates) at
// once. The scalar version is the reference; vector variants must agree with
// it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace arsss::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Best variant the running CPU supports.
Isa detect_isa() noexcept;

/// detect_isa(), unless the environment variable ARSSS_KERNEL names a
/// supported variant ("scalar", "avx2", "neon").
Isa active_isa() noexcept;

bool isa_supported(Isa isa) noexcept;

struct AffineRows {
  std::span<const std::int32_t> coeff;  // rows x cols
  std::span<const std::int64_t> bias;   // rows
  std::size_t rows = 0;
  std::size_t cols = 0;
};

void affine_rows_scalar(const AffineRows& op, std::span<const std::int32_t> in,
                        std::span<std::int64_t> out, std::size_t batch);
#if defined(__x86_64__)
void affine_rows_avx2(const AffineRows& op, std::span<const std::int32_t> in,
                      std::span<std::int64_t> out, std::size_t batch);
#endif
#if defined(__aarch64__)
void affine_rows_neon(const AffineRows& op, std::span<const std::int32_t> in,
                      std::span<std::int64_t> out, std::size_t batch);
#endif

/// Dispatches to `isa` (which must be supported). Validates span sizes.
void affine_rows(const AffineRows& op, std::span<const std::int32_t> in,
                 std::span<std::int64_t> out, std::size_t batch, Isa isa = active_isa());

}  // namespace arsss::kernels
