#include "padicres/rng.hpp"

#include <stdexcept>

namespace padicres {

namespace {

std::mt19937_64 seeded(uint64_t seed, uint64_t stream, bool has_stream) {
  if (!has_stream) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
  }
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32), 0x5eedu};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(uint64_t seed) : seed_(seed), engine_(seeded(seed, 0, false)) {}

Rng::Rng(uint64_t seed, uint64_t stream) : seed_(seed), engine_(seeded(seed, stream, true)) {}

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  return std::uniform_int_distribution<uint64_t>(0, bound - 1)(engine_);
}

double Rng::uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

mpz_class Rng::below(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("Rng::below: non-positive bound");
  if (bound.fits_ulong_p()) return mpz_class(below(static_cast<uint64_t>(bound.get_ui())));
  // Rejection sampling on whole 64-bit limbs.
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  const size_t excess = words * 64 - bits;
  mpz_class x;
  for (;;) {
    x = 0;
    for (size_t i = 0; i < words; ++i) {
      uint64_t w = engine_();
      if (i == 0 && excess > 0) w >>= excess;
      mpz_class limb;
      mpz_import(limb.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), i == 0 ? 0 : 64);
      x += limb;
    }
    if (x < bound) return x;
  }
}

}  // namespace padicres
