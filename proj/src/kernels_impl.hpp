#pragma once

#include <cstddef>

namespace trihull::kernels::detail {

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    double (*squared_distance)(const double*, const double*, std::size_t);
    void (*blend)(double*, const double*, const double*, double, double, std::size_t);
    void (*scale)(double*, double, std::size_t);
};

extern const Ops scalar_ops;

#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
bool avx2_supported();
#endif

#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

}  // namespace trihull::kernels::detail
