#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace padicres {

// Deterministic, explicitly passed generator. split(i) yields an
// independent stream that depends only on the parent's seed and i.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  Rng(uint64_t seed, uint64_t stream);

  uint64_t seed() const noexcept { return seed_; }
  Rng split(uint64_t stream) const { return Rng(seed_, stream); }

  uint64_t next() { return engine_(); }
  // Uniform integer in [0, bound), bound > 0.
  uint64_t below(uint64_t bound);
  // Uniform integer in [0, bound), bound > 0.
  mpz_class below(const mpz_class& bound);
  // Uniform in [0, 1).
  double uniform();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace padicres
