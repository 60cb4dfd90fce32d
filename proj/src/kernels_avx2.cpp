// AVX2 kernels. Lane j of the 256-bit accumulator holds the same partial sum
// as lane sum j in the scalar reference, and the horizontal reduction uses
// the same (s0+s2)+(s1+s3) order, so results match the scalar backend bit
// for bit. _mm256_mul_pd/_mm256_add_pd only; no FMA.

#include "kernels_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace trihull::kernels::detail {
namespace {

double reduce_lanes(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
    }
    double sum = reduce_lanes(acc);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

double sqdist_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double sum = reduce_lanes(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void blend_avx2(double* dst, const double* a, const double* b, double wa, double wb,
                std::size_t n) {
    const __m256d va = _mm256_set1_pd(wa);
    const __m256d vb = _mm256_set1_pd(wb);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_mul_pd(va, _mm256_loadu_pd(a + i));
        const __m256d y = _mm256_mul_pd(vb, _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(dst + i, _mm256_add_pd(x, y));
    }
    for (; i < n; ++i) dst[i] = wa * a[i] + wb * b[i];
}

void scale_avx2(double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(a + i, _mm256_mul_pd(vs, _mm256_loadu_pd(a + i)));
    }
    for (; i < n; ++i) a[i] *= s;
}

}  // namespace

const Ops avx2_ops = {dot_avx2, sqdist_avx2, blend_avx2, scale_avx2};

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace trihull::kernels::detail

#endif  // x86_64
