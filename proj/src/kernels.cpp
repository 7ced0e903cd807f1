#include "arsss/kernels.hpp"

#include <cstdlib>
#include <string>

#include "arsss/error.hpp"

namespace arsss::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(ARSSS_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(ARSSS_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() noexcept {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() noexcept {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("ARSSS_KERNEL")) {
      const std::string_view name(env);
      for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (name == isa_name(isa) && isa_supported(isa)) return isa;
      }
    }
    return detect_isa();
  }();
  return chosen;
}

void affine_rows_scalar(const AffineRows& op, std::span<const std::int32_t> in,
                        std::span<std::int64_t> out, std::size_t batch) {
  for (std::size_t r = 0; r < op.rows; ++r) {
    std::int64_t* dst = out.data() + r * batch;
    for (std::size_t b = 0; b < batch; ++b) dst[b] = op.bias[r];
    for (std::size_t j = 0; j < op.cols; ++j) {
      const std::int64_t c = op.coeff[r * op.cols + j];
      if (c == 0) continue;
      const std::int32_t* src = in.data() + j * batch;
      for (std::size_t b = 0; b < batch; ++b) dst[b] += c * src[b];
    }
  }
}

void affine_rows(const AffineRows& op, std::span<const std::int32_t> in,
                 std::span<std::int64_t> out, std::size_t batch, Isa isa) {
  if (op.coeff.size() != op.rows * op.cols || op.bias.size() != op.rows ||
      in.size() < op.cols * batch || out.size() < op.rows * batch) {
    throw Error(ErrorCode::DimensionMismatch, "affine_rows: buffer sizes do not match shape");
  }
  switch (isa) {
#if defined(ARSSS_HAVE_AVX2_KERNELS)
    case Isa::avx2:
      affine_rows_avx2(op, in, out, batch);
      return;
#endif
#if defined(ARSSS_HAVE_NEON_KERNELS)
    case Isa::neon:
      affine_rows_neon(op, in, out, batch);
      return;
#endif
    default:
      if (isa != Isa::scalar) {
        throw Error(ErrorCode::BadParams, "kernel variant " + std::string(isa_name(isa)) +
                                              " is not available in this build");
      }
      affine_rows_scalar(op, in, out, batch);
  }
}

}  // namespace arsss::kernels
