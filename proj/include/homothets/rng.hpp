#pragma once

#include <cstdint>
#include <random>

namespace homothets {

// Mixes a base seed with a stream index so each trial gets an independent
// deterministic generator.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Explicit draws over mt19937_64; the standard distributions are
// implementation-defined, these are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // [0, n), n > 0; modulo bias is irrelevant at the sizes used here but the
  // result must be the same on every platform, which this is.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  // [0, 1)
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // [-1, 1)
  double symmetric() { return 2.0 * unit() - 1.0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace homothets
