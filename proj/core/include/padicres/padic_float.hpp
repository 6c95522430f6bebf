#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "padicres/ring.hpp"

namespace padicres {

// Ultrametric floating-point number p^e * s with s an N-digit significand
// prime to p.  Every operation computes the exact result and keeps its
// first N digits starting from its valuation.
class PadicFloat {
 public:
  // The distinguished zero at precision 1 over Z_2.
  PadicFloat() = default;

  static PadicFloat zero(const Ring& ring, int64_t precision);
  static PadicFloat from_integer(const Ring& ring, int64_t precision, const mpz_class& value);
  // Denominator must be prime to p or a power of p times such.
  static PadicFloat from_rational(const Ring& ring, int64_t precision, const mpq_class& value);
  // p^exponent * significand, truncated; significand may contain factors of p.
  static PadicFloat make(const Ring& ring, int64_t precision, int64_t exponent, const mpz_class& significand);

  const Ring& ring() const noexcept { return ring_; }
  int64_t precision() const noexcept { return prec_; }
  bool is_zero() const noexcept { return zero_; }
  // Valuation; meaningless for zero.
  int64_t exponent() const noexcept { return exp_; }
  const mpz_class& significand() const noexcept { return sig_; }

  mpq_class value() const;

  PadicFloat operator-() const;
  friend PadicFloat operator+(const PadicFloat& a, const PadicFloat& b);
  friend PadicFloat operator-(const PadicFloat& a, const PadicFloat& b);
  friend PadicFloat operator*(const PadicFloat& a, const PadicFloat& b);
  friend PadicFloat operator/(const PadicFloat& a, const PadicFloat& b);
  PadicFloat& operator+=(const PadicFloat& b) { return *this = *this + b; }
  PadicFloat& operator-=(const PadicFloat& b) { return *this = *this - b; }
  PadicFloat& operator*=(const PadicFloat& b) { return *this = *this * b; }
  PadicFloat& operator/=(const PadicFloat& b) { return *this = *this / b; }

  friend bool operator==(const PadicFloat& a, const PadicFloat& b);
  friend bool operator!=(const PadicFloat& a, const PadicFloat& b) { return !(a == b); }

  // "p^e * (d_0 d_1 ... d_{N-1})_p", or "0".
  std::string str() const;
  // "e,significand,N" for CSV output; zero renders as ",0,N".
  std::string csv() const;

 private:
  static PadicFloat add_signed(const PadicFloat& a, const PadicFloat& b, int sign);
  Ring ring_;
  int64_t prec_ = 1;
  int64_t exp_ = 0;
  mpz_class sig_ = 0;
  bool zero_ = true;
};

std::ostream& operator<<(std::ostream& os, const PadicFloat& x);

// Inverse of a unit modulo p^n by Newton iteration.
mpz_class inverse_mod_power(const Ring& ring, const mpz_class& unit, int64_t n);

}  // namespace padicres
