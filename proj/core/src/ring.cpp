#include "padicres/ring.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace padicres {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  mpz_class z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

namespace {

constexpr int64_t kCachedPowers = 4096;

const mpz_class& cached_power(unsigned long p, int64_t k) {
  thread_local std::unordered_map<unsigned long, std::vector<mpz_class>> table;
  auto& powers = table[p];
  if (powers.empty()) powers.emplace_back(1);
  while (static_cast<int64_t>(powers.size()) <= k) powers.push_back(powers.back() * p);
  return powers[static_cast<size_t>(k)];
}

}  // namespace

Ring::Ring(unsigned long p, int64_t precision_cap) : p_(p), cap_(precision_cap) {
  if (!is_prime(p)) throw std::invalid_argument("Ring: " + std::to_string(p) + " is not prime");
  if (precision_cap < 1) throw std::invalid_argument("Ring: precision cap must be positive");
}

mpz_class Ring::power(int64_t k) const {
  if (k < 0) throw std::invalid_argument("Ring::power: negative exponent");
  if (k < kCachedPowers) return cached_power(p_, k);
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, static_cast<unsigned long>(k));
  return r;
}

void Ring::reduce(mpz_class& x, int64_t k) const {
  if (k <= 0) {
    x = 0;
    return;
  }
  if (p_ == 2) {
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else if (k < kCachedPowers) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), cached_power(p_, k).get_mpz_t());
  } else {
    mpz_class m = power(k);
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
}

void Ring::shift_up(mpz_class& x, int64_t k) const {
  if (k <= 0) return;
  if (p_ == 2) {
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else if (k < kCachedPowers) {
    x *= cached_power(p_, k);
  } else {
    x *= power(k);
  }
}

int64_t Ring::remove_p(mpz_class& x) const {
  if (x == 0) return 0;
  if (p_ == 2) {
    auto v = static_cast<int64_t>(mpz_scan1(x.get_mpz_t(), 0));
    if (v > 0) mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(v));
    return v;
  }
  if (mpz_divisible_ui_p(x.get_mpz_t(), p_) == 0) return 0;
  mpz_class prime(p_);
  return static_cast<int64_t>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

int64_t Ring::valuation(const mpz_class& x) const {
  if (x == 0) return cap_;
  if (p_ == 2) return static_cast<int64_t>(mpz_scan1(x.get_mpz_t(), 0));
  mpz_class y = x;
  return remove_p(y);
}

}  // namespace padicres
