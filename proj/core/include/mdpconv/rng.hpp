#pragma once

#include <cstdint>

namespace mdpconv {

// 64-bit linear congruential generator with fixed multiplier/increment.
// Pinned by specification of the search tools: a seeded run must produce the
// same candidate sequence on every platform and in every implementation, so
// no standard-library engine is used here.
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    // Advances the state and returns it.
    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // Uniform-ish draw in [0, n); reduction is by modulo (documented, the
    // tiny bias is irrelevant for reproducible sampling).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  private:
    std::uint64_t state_;
};

}  // namespace mdpconv
