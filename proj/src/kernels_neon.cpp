// NEON kernels (aarch64 baseline). Two float64x2 accumulators cover lanes
// {0,1} and {2,3} of the reference pattern; the final reduction matches the
// scalar (s0+s2)+(s1+s3) order exactly. vmulq/vaddq only; no fused ops.

#include "kernels_impl.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace trihull::kernels::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    const double s0 = vgetq_lane_f64(acc01, 0);
    const double s1 = vgetq_lane_f64(acc01, 1);
    const double s2 = vgetq_lane_f64(acc23, 0);
    const double s3 = vgetq_lane_f64(acc23, 1);
    double sum = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

double sqdist_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t d01 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        const float64x2_t d23 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc01 = vaddq_f64(acc01, vmulq_f64(d01, d01));
        acc23 = vaddq_f64(acc23, vmulq_f64(d23, d23));
    }
    const double s0 = vgetq_lane_f64(acc01, 0);
    const double s1 = vgetq_lane_f64(acc01, 1);
    const double s2 = vgetq_lane_f64(acc23, 0);
    const double s3 = vgetq_lane_f64(acc23, 1);
    double sum = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void blend_neon(double* dst, const double* a, const double* b, double wa, double wb,
                std::size_t n) {
    const float64x2_t va = vdupq_n_f64(wa);
    const float64x2_t vb = vdupq_n_f64(wb);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vmulq_f64(va, vld1q_f64(a + i));
        const float64x2_t y = vmulq_f64(vb, vld1q_f64(b + i));
        vst1q_f64(dst + i, vaddq_f64(x, y));
    }
    for (; i < n; ++i) dst[i] = wa * a[i] + wb * b[i];
}

void scale_neon(double* a, double s, std::size_t n) {
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(a + i, vmulq_f64(vs, vld1q_f64(a + i)));
    }
    for (; i < n; ++i) a[i] *= s;
}

}  // namespace

const Ops neon_ops = {dot_neon, sqdist_neon, blend_neon, scale_neon};

}  // namespace trihull::kernels::detail

#endif  // aarch64
