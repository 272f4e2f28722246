#pragma once

#include <cstdint>
#include <random>

namespace spread {

// Seedable deterministic generator used everywhere randomness is needed.
// mt19937 plus explicit rejection sampling, so draws are identical across
// platforms and standard libraries (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    gen_.seed(seq);
  }

  std::uint32_t next() { return gen_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint32_t below(std::uint32_t bound) {
    const std::uint64_t span = 1ull << 32;
    const std::uint64_t limit = span - span % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::uint32_t>(x % bound);
  }

  // Uniform double in the open interval (0, 1).
  double unit() { return (static_cast<double>(next()) + 0.5) * 0x1p-32; }

 private:
  std::mt19937 gen_;
};

}  // namespace spread
