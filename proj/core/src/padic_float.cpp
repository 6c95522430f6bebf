#include "padicres/padic_float.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "padicres/errors.hpp"

namespace padicres {

namespace {

void require_compatible(const PadicFloat& a, const PadicFloat& b) {
  if (a.ring().prime() != b.ring().prime() || a.precision() != b.precision()) {
    throw std::invalid_argument("PadicFloat: operands differ in prime or precision");
  }
}

}  // namespace

mpz_class inverse_mod_power(const Ring& ring, const mpz_class& unit, int64_t n) {
  if (n <= 0) return 0;
  mpz_class u = unit;
  ring.reduce(u, n);
  if (mpz_divisible_ui_p(u.get_mpz_t(), ring.prime())) throw std::domain_error("inverse_mod_power: not a unit");
  // Inverse mod p from Fermat's little theorem, then x <- x(2 - ux).
  mpz_class x;
  mpz_class p(ring.prime());
  mpz_class pm2 = p - 2;
  mpz_class r = u % p;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), pm2.get_mpz_t(), p.get_mpz_t());
  int64_t k = 1;
  while (k < n) {
    k = std::min<int64_t>(2 * k, n);
    mpz_class t = u;
    ring.reduce(t, k);
    t *= x;
    t = 2 - t;
    x *= t;
    ring.reduce(x, k);
  }
  return x;
}

PadicFloat PadicFloat::zero(const Ring& ring, int64_t precision) {
  if (precision < 1) throw std::invalid_argument("PadicFloat: precision must be at least 1");
  PadicFloat z;
  z.ring_ = ring;
  z.prec_ = precision;
  return z;
}

PadicFloat PadicFloat::make(const Ring& ring, int64_t precision, int64_t exponent, const mpz_class& significand) {
  PadicFloat x = zero(ring, precision);
  if (significand == 0) return x;
  x.sig_ = significand;
  x.exp_ = exponent + ring.remove_p(x.sig_);
  ring.reduce(x.sig_, precision);
  x.zero_ = false;
  return x;
}

PadicFloat PadicFloat::from_integer(const Ring& ring, int64_t precision, const mpz_class& value) {
  return make(ring, precision, 0, value);
}

PadicFloat PadicFloat::from_rational(const Ring& ring, int64_t precision, const mpq_class& value) {
  mpz_class num = value.get_num();
  if (num == 0) return zero(ring, precision);
  mpz_class den = value.get_den();
  const int64_t e = ring.remove_p(num) - ring.remove_p(den);
  return make(ring, precision, e, num * inverse_mod_power(ring, den, precision));
}

mpq_class PadicFloat::value() const {
  if (zero_) return 0;
  if (exp_ >= 0) {
    mpz_class v = sig_;
    ring_.shift_up(v, exp_);
    return mpq_class(v);
  }
  mpq_class q(sig_, ring_.power(-exp_));
  q.canonicalize();
  return q;
}

PadicFloat PadicFloat::operator-() const {
  if (zero_) return *this;
  return make(ring_, prec_, exp_, -sig_);
}

PadicFloat operator+(const PadicFloat& a, const PadicFloat& b) { return PadicFloat::add_signed(a, b, 1); }

PadicFloat operator-(const PadicFloat& a, const PadicFloat& b) { return PadicFloat::add_signed(a, b, -1); }

// Exact a + sign * b, then truncate.
PadicFloat PadicFloat::add_signed(const PadicFloat& a, const PadicFloat& b, int sign) {
  require_compatible(a, b);
  if (a.zero_) return sign > 0 ? b : -b;
  if (b.zero_) return a;
  const int64_t e = std::min(a.exp_, b.exp_);
  mpz_class s = a.sig_;
  a.ring_.shift_up(s, a.exp_ - e);
  mpz_class t = b.sig_;
  b.ring_.shift_up(t, b.exp_ - e);
  return make(a.ring_, a.prec_, e, sign > 0 ? mpz_class(s + t) : mpz_class(s - t));
}

PadicFloat operator*(const PadicFloat& a, const PadicFloat& b) {
  require_compatible(a, b);
  if (a.zero_) return a;
  if (b.zero_) return b;
  return PadicFloat::make(a.ring_, a.prec_, a.exp_ + b.exp_, a.sig_ * b.sig_);
}

PadicFloat operator/(const PadicFloat& a, const PadicFloat& b) {
  require_compatible(a, b);
  if (b.zero_) throw DivisionByZero();
  if (a.zero_) return a;
  return PadicFloat::make(a.ring_, a.prec_, a.exp_ - b.exp_,
                          a.sig_ * inverse_mod_power(a.ring_, b.sig_, a.prec_));
}

bool operator==(const PadicFloat& a, const PadicFloat& b) {
  if (a.ring_.prime() != b.ring_.prime() || a.prec_ != b.prec_ || a.zero_ != b.zero_) return false;
  return a.zero_ || (a.exp_ == b.exp_ && a.sig_ == b.sig_);
}

std::string PadicFloat::str() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << ring_.prime() << '^' << exp_ << " * (";
  mpz_class s = sig_;
  for (int64_t i = 0; i < prec_; ++i) {
    if (i > 0) os << ' ';
    os << mpz_fdiv_q_ui(s.get_mpz_t(), s.get_mpz_t(), ring_.prime());
  }
  os << ")_" << ring_.prime();
  return os.str();
}

std::string PadicFloat::csv() const {
  std::ostringstream os;
  if (!zero_) os << exp_;
  os << ',' << (zero_ ? std::string("0") : sig_.get_str()) << ',' << prec_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicFloat& x) { return os << x.str(); }

}  // namespace padicres
