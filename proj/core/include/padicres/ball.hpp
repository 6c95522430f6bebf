#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "padicres/ring.hpp"

namespace padicres {

class Rng;

// A p-adic number known modulo p^N: the coset c + p^N Z_p.
//
// The center is stored as unit * p^v with unit prime to p (or unit = 0 for
// a ball without known nonzero digit).  Inexact balls keep the unit reduced
// into [0, p^(N-v)); balls at the ring's precision cap are exact and keep a
// signed, unreduced unit.
class Ball {
 public:
  // 0 + O(p^cap) over Z_2; needed for containers.
  Ball();

  Ball(const Ring& ring, const mpz_class& center, int64_t abs_prec);
  Ball(const Ring& ring, long center, int64_t abs_prec) : Ball(ring, mpz_class(center), abs_prec) {}

  static Ball exact(const Ring& ring, const mpz_class& value);
  static Ball zero(const Ring& ring, int64_t abs_prec);
  // The rational must have a denominator prime to p or a power of p.
  static Ball from_rational(const Ring& ring, const mpq_class& center, int64_t abs_prec);
  // Parses "c + O(p^N)", "O(p^N)" or a bare exact "c" (c integer or m/p^k).
  static Ball parse(const Ring& ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  int64_t abs_prec() const noexcept { return prec_; }
  // val(center), or abs_prec() when no digit is known to be nonzero.
  int64_t valuation() const noexcept { return unit_ == 0 ? prec_ : val_; }
  int64_t rel_prec() const noexcept { return unit_ == 0 ? 0 : prec_ - val_; }
  bool is_exact() const noexcept { return prec_ >= ring_.precision_cap(); }
  // True when all known digits are zero.
  bool is_known_zero() const noexcept { return unit_ == 0; }
  const mpz_class& unit() const noexcept { return unit_; }

  mpq_class center() const;
  // Center as an integer; requires valuation() >= 0.
  mpz_class integer_center() const;
  // Digits of the center on [valuation(), abs_prec()), lowest first.
  std::vector<unsigned long> digits() const;

  // Truncates to min(abs_prec(), n).
  Ball truncated(int64_t n) const;
  // Raises the precision to n >= abs_prec() keeping the center
  // (unknown digits become zero).
  Ball lifted(int64_t n) const;
  // Raises the precision to n >= abs_prec(), filling the unknown digits
  // on [abs_prec(), n) uniformly at random.
  Ball lifted_random(int64_t n, Rng& rng) const;

  Ball operator-() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  Ball& operator+=(const Ball& b) { return *this = *this + b; }
  Ball& operator-=(const Ball& b) { return *this = *this - b; }
  Ball& operator*=(const Ball& b) { return *this = *this * b; }
  Ball& operator/=(const Ball& b) { return *this = *this / b; }

  // Structural equality, which for canonical balls is equality of cosets.
  friend bool operator==(const Ball& a, const Ball& b);
  friend bool operator!=(const Ball& a, const Ball& b) { return !(a == b); }

  // Whether the exact rational x lies in this coset.
  bool contains(const mpq_class& x) const;

  std::string str() const;

 private:
  Ball(const Ring& ring, mpz_class unit, int64_t val, int64_t abs_prec, bool);
  void normalize();

  Ring ring_;
  int64_t prec_;
  int64_t val_;
  mpz_class unit_;
};

std::ostream& operator<<(std::ostream& os, const Ball& b);

// Uniform center in [0, p^N) at precision N.
Ball haar_sample(const Ring& ring, int64_t abs_prec, Rng& rng);

}  // namespace padicres
