#include <immintrin.h>

#include "arsss/kernels.hpp"

namespace arsss::kernels {

// _mm256_mul_epi32 multiplies the low signed 32 bits of each 64-bit lane,
// so widened int32 inputs times a broadcast coefficient give exact int64
// products.
void affine_rows_avx2(const AffineRows& op, std::span<const std::int32_t> in,
                      std::span<std::int64_t> out, std::size_t batch) {
  for (std::size_t r = 0; r < op.rows; ++r) {
    std::int64_t* dst = out.data() + r * batch;
    const std::int32_t* coeff = op.coeff.data() + r * op.cols;
    const __m256i bias = _mm256_set1_epi64x(op.bias[r]);
    std::size_t b = 0;
    for (; b + 8 <= batch; b += 8) {
      __m256i acc_lo = bias;
      __m256i acc_hi = bias;
      for (std::size_t j = 0; j < op.cols; ++j) {
        if (coeff[j] == 0) continue;
        const __m256i c = _mm256_set1_epi64x(coeff[j]);
        const std::int32_t* src = in.data() + j * batch + b;
        const __m256i x_lo = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
        const __m256i x_hi = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + 4)));
        acc_lo = _mm256_add_epi64(acc_lo, _mm256_mul_epi32(x_lo, c));
        acc_hi = _mm256_add_epi64(acc_hi, _mm256_mul_epi32(x_hi, c));
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + b), acc_lo);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + b + 4), acc_hi);
    }
    for (; b < batch; ++b) {
      std::int64_t acc = op.bias[r];
      for (std::size_t j = 0; j < op.cols; ++j) {
        acc += static_cast<std::int64_t>(coeff[j]) * in[j * batch + b];
      }
      dst[b] = acc;
    }
  }
}

}  // namespace arsss::kernels
