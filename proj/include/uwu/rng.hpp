#pragma once

#include <cstdint>

namespace uwu {

/// xorshift64* generator (Marsaglia/Vigna): shifts 12, 25, 27 and multiplier
/// 2685821657736338717. Fixed across platforms so verification signals are
/// reproducible bit-for-bit. Seed 0 is remapped to a nonzero constant.
class Xorshift64Star {
  public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next_u64() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ULL;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::uint64_t state_;
};

}  // namespace uwu
