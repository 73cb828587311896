// Deterministic random source. All draws go through explicit integer-to-real
// conversions instead of std distributions, whose output is
// implementation-defined; runs must reproduce bit-identically.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pansharp {

// SplitMix64 step; also used to derive stream seeds from a master seed.
uint64_t splitmix64(uint64_t& state);

// Stateless hash of a seed with a sequence of salts (recipe index, band,
// octave, grid coordinates ...). Gives every noise lattice node its own
// reproducible value independent of evaluation order.
uint64_t hash_seed(uint64_t seed, std::initializer_list<uint64_t> salts);

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller. No cached spare: one value per call so
  // the draw sequence does not depend on call parity.
  double gaussian();

  // Unbiased integer in [0, n) by rejection.
  uint64_t below(uint64_t n);

  // Fisher-Yates; std::shuffle is implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::string serialize() const;
  void deserialize(const std::string& text);

 private:
  std::mt19937_64 gen_;
};

}  // namespace pansharp
