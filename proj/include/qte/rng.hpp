#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qte {

// splitmix64 finalizer; used to derive independent stream seeds from
// (seed, id) so replicate b always sees the same stream no matter which
// worker runs it.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t id) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (id + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double normal_quantile(double p);  // stats.hpp owns the definition

// Deterministic random stream. All variates are produced by inverse-CDF
// transforms of mt19937_64 output, so a given seed yields the same sequence
// on every platform and build.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_quantile(uniform01()); }

  // Exp(1) via inverse CDF.
  double exponential() { return -std::log1p(-uniform01()); }

private:
  std::mt19937_64 gen_;
};

}  // namespace qte
