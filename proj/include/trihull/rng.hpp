#pragma once

#include <cstdint>

namespace trihull {

// Counter-based generator built on the splitmix64 finalizer. Output k of
// stream s under seed q is a pure function of (q, s, k): no hidden state, no
// libm, identical on every platform. Each random decision kind gets its own
// stream id so adding draws of one kind never perturbs another.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint32_t stream_id);

    std::uint64_t next_u64();

    // Uniform in [0,1), 53 random bits.
    double next_double();

    // Uniform in [0,n), unbiased (multiply-shift with rejection). n >= 1.
    std::uint64_t next_below(std::uint64_t n);

    std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

// Stream ids in use across the library. Append only; renumbering changes
// every seeded result.
namespace streams {
inline constexpr std::uint32_t vertex_select = 0;
inline constexpr std::uint32_t step_coin = 1;
inline constexpr std::uint32_t relaxed_pivot = 2;
inline constexpr std::uint32_t chaos_vertex = 3;
inline constexpr std::uint32_t chaos_seed_point = 4;
inline constexpr std::uint32_t instance_points = 5;
inline constexpr std::uint32_t instance_weights = 6;
inline constexpr std::uint32_t instance_rotation = 7;
}  // namespace streams

}  // namespace trihull
