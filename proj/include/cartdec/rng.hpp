#ifndef CARTDEC_RNG_HPP
#define CARTDEC_RNG_HPP

#include <cstdint>
#include <random>

namespace cartdec {

// Seeded deterministic randomness for randomized checks and sampling.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? eng() % n : 0; }
};

}  // namespace cartdec

#endif
