#pragma once

#include <cstdint>
#include <random>

namespace teletopo {

// Seeded 64-bit Mersenne Twister. uniform() uses the top 53 bits of one draw,
// so sequences do not depend on the standard library's distributions.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace teletopo
