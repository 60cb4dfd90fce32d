#include "trihull/kernels.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace trihull::kernels {
namespace {

using detail::Ops;

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return detail::avx2_supported();
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Ops* ops_for(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return &detail::scalar_ops;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return &detail::avx2_ops;
#else
            break;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return &detail::neon_ops;
#else
            break;
#endif
    }
    return &detail::scalar_ops;
}

Backend pick_default() {
    if (const char* env = std::getenv("TRIHULL_KERNELS")) {
        Backend want = Backend::Scalar;
        bool known = true;
        if (std::strcmp(env, "scalar") == 0) want = Backend::Scalar;
        else if (std::strcmp(env, "avx2") == 0) want = Backend::Avx2;
        else if (std::strcmp(env, "neon") == 0) want = Backend::Neon;
        else known = false;
        if (known && backend_available(want)) return want;
        std::fprintf(stderr, "trihull: TRIHULL_KERNELS=%s not usable here, auto-selecting\n", env);
    }
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

struct State {
    std::atomic<const Ops*> ops;
    std::atomic<Backend> backend;
    State() {
        const Backend b = pick_default();
        backend.store(b, std::memory_order_relaxed);
        ops.store(ops_for(b), std::memory_order_relaxed);
    }
};

State& state() {
    static State s;
    return s;
}

const Ops* current() { return state().ops.load(std::memory_order_relaxed); }

}  // namespace

Backend active() { return state().backend.load(std::memory_order_relaxed); }

void force(Backend b) {
    if (!backend_available(b)) {
        throw std::invalid_argument(std::string("kernel backend not available: ") + name(b));
    }
    state().backend.store(b, std::memory_order_relaxed);
    state().ops.store(ops_for(b), std::memory_order_relaxed);
}

const char* name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

double dot(const double* a, const double* b, std::size_t n) { return current()->dot(a, b, n); }

double squared_distance(const double* a, const double* b, std::size_t n) {
    return current()->squared_distance(a, b, n);
}

void blend(double* dst, const double* a, const double* b, double wa, double wb, std::size_t n) {
    current()->blend(dst, a, b, wa, wb, n);
}

void scale(double* a, double s, std::size_t n) { current()->scale(a, s, n); }

}  // namespace trihull::kernels
