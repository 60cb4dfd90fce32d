// Scalar reference kernels. These spell out the exact accumulation pattern
// the SIMD backends reproduce: four independent lane sums over 4-element
// blocks, reduced as (s0+s2)+(s1+s3), then a sequential tail. Compiled with
// -ffp-contract=off so no multiply-add fusion sneaks in.

#include "kernels_impl.hpp"

namespace trihull::kernels::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    double sum = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

double sqdist_scalar(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double d0 = a[i] - b[i];
        const double d1 = a[i + 1] - b[i + 1];
        const double d2 = a[i + 2] - b[i + 2];
        const double d3 = a[i + 3] - b[i + 3];
        s0 += d0 * d0;
        s1 += d1 * d1;
        s2 += d2 * d2;
        s3 += d3 * d3;
    }
    double sum = (s0 + s2) + (s1 + s3);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void blend_scalar(double* dst, const double* a, const double* b, double wa, double wb,
                  std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = wa * a[i] + wb * b[i];
}

void scale_scalar(double* a, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

}  // namespace

const Ops scalar_ops = {dot_scalar, sqdist_scalar, blend_scalar, scale_scalar};

}  // namespace trihull::kernels::detail
