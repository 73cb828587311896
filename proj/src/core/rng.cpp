#include "pansharp/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pansharp {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t hash_seed(uint64_t seed, std::initializer_list<uint64_t> salts) {
  uint64_t state = seed;
  uint64_t out = splitmix64(state);
  for (uint64_t salt : salts) {
    state = out ^ (salt + 0x9e3779b97f4a7c15ULL);
    out = splitmix64(state);
  }
  return out;
}

double Rng::gaussian() {
  // Guard against log(0).
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

std::string Rng::serialize() const {
  std::ostringstream os;
  os << gen_;
  return os.str();
}

void Rng::deserialize(const std::string& text) {
  std::istringstream is(text);
  is >> gen_;
}

}  // namespace pansharp
