#include <arm_neon.h>

#include "arsss/kernels.hpp"

namespace arsss::kernels {

void affine_rows_neon(const AffineRows& op, std::span<const std::int32_t> in,
                      std::span<std::int64_t> out, std::size_t batch) {
  for (std::size_t r = 0; r < op.rows; ++r) {
    std::int64_t* dst = out.data() + r * batch;
    const std::int32_t* coeff = op.coeff.data() + r * op.cols;
    std::size_t b = 0;
    for (; b + 4 <= batch; b += 4) {
      int64x2_t acc_lo = vdupq_n_s64(op.bias[r]);
      int64x2_t acc_hi = acc_lo;
      for (std::size_t j = 0; j < op.cols; ++j) {
        if (coeff[j] == 0) continue;
        const int32x2_t c = vdup_n_s32(coeff[j]);
        const int32x4_t x = vld1q_s32(in.data() + j * batch + b);
        acc_lo = vmlal_s32(acc_lo, vget_low_s32(x), c);
        acc_hi = vmlal_s32(acc_hi, vget_high_s32(x), c);
      }
      vst1q_s64(dst + b, acc_lo);
      vst1q_s64(dst + b + 2, acc_hi);
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
