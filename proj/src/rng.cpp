#include "trihull/rng.hpp"

#include <stdexcept>

namespace trihull {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer: bijective 64-bit mix with full avalanche.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint32_t stream_id)
    : base_(mix64(seed) ^ mix64(kGolden * (static_cast<std::uint64_t>(stream_id) + 1))) {}

std::uint64_t RngStream::next_u64() {
    counter_ += 1;
    return mix64(base_ + kGolden * counter_);
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RngStream::next_below: n must be >= 1");
    // Lemire's multiply-shift; rejects the biased low fringe.
    while (true) {
        const std::uint64_t x = next_u64();
        const unsigned __int128 wide = static_cast<unsigned __int128>(x) * n;
        const std::uint64_t low = static_cast<std::uint64_t>(wide);
        if (low >= n) return static_cast<std::uint64_t>(wide >> 64);
        const std::uint64_t threshold = (0 - n) % n;
        if (low >= threshold) return static_cast<std::uint64_t>(wide >> 64);
    }
}

}  // namespace trihull
