#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace padicres {

// The ring Z_p, with uniformizer p and residue field F_p.
//
// Exactly representable constants (the literal 1, monic leading
// coefficients) are modelled as balls whose absolute precision equals
// precision_cap(); arithmetic never reduces such centers.
class Ring {
 public:
  static constexpr int64_t kDefaultPrecisionCap = int64_t{1} << 30;

  // Z_2 with the default cap.
  Ring() noexcept : p_(2), cap_(kDefaultPrecisionCap) {}
  explicit Ring(unsigned long p, int64_t precision_cap = kDefaultPrecisionCap);

  unsigned long prime() const noexcept { return p_; }
  // Cardinality of the residue field.
  unsigned long q() const noexcept { return p_; }
  int64_t precision_cap() const noexcept { return cap_; }

  // p^k for k >= 0.
  mpz_class power(int64_t k) const;

  // p-adic valuation of a nonzero integer; precision_cap() for zero.
  int64_t valuation(const mpz_class& x) const;
  // Strips all factors of p from x in place and returns how many were removed.
  int64_t remove_p(mpz_class& x) const;
  // x <- x mod p^k, in [0, p^k).
  void reduce(mpz_class& x, int64_t k) const;
  // x <- x * p^k for k >= 0.
  void shift_up(mpz_class& x, int64_t k) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.p_ == b.p_ && a.cap_ == b.cap_;
  }

 private:
  unsigned long p_;
  int64_t cap_;
};

bool is_prime(unsigned long n);

}  // namespace padicres
