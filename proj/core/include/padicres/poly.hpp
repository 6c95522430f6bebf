#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "padicres/ball.hpp"
#include "padicres/errors.hpp"
#include "padicres/padic_float.hpp"

namespace padicres {

template <class T>
struct CoeffTraits;

template <>
struct CoeffTraits<mpz_class> {
  static constexpr bool exact = true;
  static mpz_class zero_like(const mpz_class&) { return 0; }
  static mpz_class one_like(const mpz_class&) { return 1; }
  static bool is_zero(const mpz_class& x) { return x == 0; }
};

template <>
struct CoeffTraits<mpq_class> {
  static constexpr bool exact = true;
  static mpq_class zero_like(const mpq_class&) { return 0; }
  static mpq_class one_like(const mpq_class&) { return 1; }
  static bool is_zero(const mpq_class& x) { return x == 0; }
  static void check_divisor(const mpq_class& x) {
    if (x == 0) throw ZeroPolynomial();
  }
};

template <>
struct CoeffTraits<Ball> {
  static constexpr bool exact = false;
  static Ball zero_like(const Ball& x) { return Ball::exact(x.ring(), 0); }
  static Ball one_like(const Ball& x) { return Ball::exact(x.ring(), 1); }
  static bool is_zero(const Ball& x) { return x.is_exact() && x.is_known_zero(); }
  static void check_divisor(const Ball& x) {
    if (x.is_known_zero()) throw LeadingCoefficientUnknownZero();
  }
};

template <>
struct CoeffTraits<PadicFloat> {
  static constexpr bool exact = false;
  static PadicFloat zero_like(const PadicFloat& x) { return PadicFloat::zero(x.ring(), x.precision()); }
  static PadicFloat one_like(const PadicFloat& x) { return PadicFloat::from_integer(x.ring(), x.precision(), 1); }
  static bool is_zero(const PadicFloat& x) { return x.is_zero(); }
  static void check_divisor(const PadicFloat& x) {
    if (x.is_zero()) throw DivisionByZero();
  }
};

// Dense univariate polynomial, lowest degree first.
//
// Over exact coefficient types the representation is kept trimmed, so the
// degree is the true degree.  Over balls and floats the degree is the formal
// stored length minus one: a leading coefficient with no known nonzero digit
// is kept.
template <class T>
class Poly {
 public:
  using coeff_type = T;
  using traits = CoeffTraits<T>;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { auto_trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { auto_trim(); }

  // Formal degree; -1 for the empty (zero) polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  size_t size() const noexcept { return c_.size(); }
  bool empty() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }
  std::vector<T>& coeffs() noexcept { return c_; }
  const T& operator[](size_t i) const { return c_[i]; }
  T& operator[](size_t i) { return c_[i]; }
  const T& lc() const {
    if (c_.empty()) throw ZeroPolynomial();
    return c_.back();
  }

  // Drops leading coefficients that are exactly zero.
  Poly& trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    return *this;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void auto_trim() {
    if constexpr (traits::exact) trim();
  }

  std::vector<T> c_;
};

using ExactPoly = Poly<mpz_class>;
using RationalPoly = Poly<mpq_class>;
using BallPoly = Poly<Ball>;
using FloatPoly = Poly<PadicFloat>;

namespace detail {

template <class T>
const T* any_coeff(const Poly<T>& a, const Poly<T>& b) {
  if (!a.empty()) return &a[0];
  if (!b.empty()) return &b[0];
  return nullptr;
}

}  // namespace detail

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  const T* ref = detail::any_coeff(a, b);
  if (!ref) return {};
  std::vector<T> out(std::max(a.size(), b.size()), CoeffTraits<T>::zero_like(*ref));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = a[i] + b[i];
    } else if (i < a.size()) {
      out[i] = a[i];
    } else {
      out[i] = b[i];
    }
  }
  return Poly<T>(std::move(out));
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
  std::vector<T> out;
  out.reserve(a.size());
  for (const auto& x : a.coeffs()) out.push_back(-x);
  return Poly<T>(std::move(out));
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  const T* ref = detail::any_coeff(a, b);
  if (!ref) return {};
  std::vector<T> out(std::max(a.size(), b.size()), CoeffTraits<T>::zero_like(*ref));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      out[i] = a[i] - b[i];
    } else if (i < a.size()) {
      out[i] = a[i];
    } else {
      out[i] = -b[i];
    }
  }
  return Poly<T>(std::move(out));
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> out(a.size() + b.size() - 1, CoeffTraits<T>::zero_like(a[0]));
  std::vector<bool> touched(out.size(), false);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      if (touched[i + j]) {
        out[i + j] += a[i] * b[j];
      } else {
        out[i + j] = a[i] * b[j];
        touched[i + j] = true;
      }
    }
  }
  return Poly<T>(std::move(out));
}

template <class T>
Poly<T> scale(const Poly<T>& a, const T& c) {
  std::vector<T> out;
  out.reserve(a.size());
  for (const auto& x : a.coeffs()) out.push_back(x * c);
  return Poly<T>(std::move(out));
}

// Coefficient-wise division by a scalar (exact division for integers).
template <class T>
Poly<T> divide(const Poly<T>& a, const T& c) {
  std::vector<T> out;
  out.reserve(a.size());
  for (const auto& x : a.coeffs()) {
    if constexpr (std::is_same_v<T, mpz_class>) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      out.push_back(q);
    } else {
      out.push_back(x / c);
    }
  }
  return Poly<T>(std::move(out));
}

// X^k * a.
template <class T>
Poly<T> shift(const Poly<T>& a, int k) {
  if (a.empty() || k <= 0) return a;
  std::vector<T> out(static_cast<size_t>(k), CoeffTraits<T>::zero_like(a[0]));
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly<T>(std::move(out));
}

template <class T>
struct DivRem {
  Poly<T> quotient;
  Poly<T> remainder;
};

// Euclidean division over a field-like coefficient type.  The remainder
// has formal length deg B: every eliminated leading term is dropped rather
// than kept as an approximate zero.
template <class T>
DivRem<T> euclid_divrem(const Poly<T>& a, const Poly<T>& b) {
  if (b.empty()) throw ZeroPolynomial();
  const int db = b.degree();
  const int da = a.degree();
  const T& lead = b.lc();
  CoeffTraits<T>::check_divisor(lead);
  if (da < db) return {Poly<T>{}, a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(static_cast<size_t>(da - db + 1), CoeffTraits<T>::zero_like(lead));
  for (int i = da; i >= db; --i) {
    const T t = r[static_cast<size_t>(i)] / lead;
    const int off = i - db;
    for (int k = 0; k < db; ++k) {
      r[static_cast<size_t>(off + k)] -= t * b[static_cast<size_t>(k)];
    }
    q[static_cast<size_t>(off)] = t;
  }
  r.resize(static_cast<size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return euclid_divrem(a, b).remainder;
}

template <class T>
T power(const T& x, int k) {
  T r = CoeffTraits<T>::one_like(x);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// lc(B)^(deg A - deg B + 1) * (A % B).
template <class T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
  if (a.degree() < b.degree()) throw std::invalid_argument("prem: deg A < deg B");
  return scale(a % b, power(b.lc(), a.degree() - b.degree() + 1));
}

// Pseudo-division using only ring operations: each step multiplies the
// running remainder by lc(B) and cancels its top term.  Over exact types this
// equals prem(); over balls it never divides.
template <class T>
Poly<T> prem_fraction_free(const Poly<T>& a, const Poly<T>& b) {
  if (b.empty()) throw ZeroPolynomial();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw std::invalid_argument("prem: deg A < deg B");
  const T& lead = b.lc();
  std::vector<T> r = a.coeffs();
  for (int i = da; i >= db; --i) {
    const T top = r[static_cast<size_t>(i)];
    const int off = i - db;
    for (int k = 0; k < i; ++k) r[static_cast<size_t>(k)] *= lead;
    for (int k = 0; k < db; ++k) r[static_cast<size_t>(off + k)] -= top * b[static_cast<size_t>(k)];
    r.pop_back();
  }
  return Poly<T>(std::move(r));
}

// Fraction-free pseudo-remainder over Z; equal to lc(B)^(deg A - deg B + 1) * (A % B).
template <>
Poly<mpz_class> prem(const Poly<mpz_class>& a, const Poly<mpz_class>& b);

// Euclidean division is not defined over Z.
template <>
DivRem<mpz_class> euclid_divrem(const Poly<mpz_class>& a, const Poly<mpz_class>& b) = delete;

template <class T>
T evaluate(const Poly<T>& a, const T& x) {
  if (a.empty()) throw ZeroPolynomial();
  T acc = a.lc();
  for (int i = a.degree() - 1; i >= 0; --i) acc = acc * x + a[static_cast<size_t>(i)];
  return acc;
}

// Coefficient of X^i, zero past the stored length.
inline mpz_class coeff(const ExactPoly& a, int i) {
  return i >= 0 && i <= a.degree() ? a[static_cast<size_t>(i)] : mpz_class(0);
}

// Polynomial sharing one absolute precision across all coefficients.
class FlatPoly {
 public:
  FlatPoly() = default;
  // Truncates every coefficient of p to the minimum absolute precision.
  explicit FlatPoly(const BallPoly& p);
  FlatPoly(const BallPoly& p, int64_t abs_prec);

  int64_t abs_prec() const noexcept { return prec_; }
  const BallPoly& balls() const noexcept { return p_; }
  int degree() const noexcept { return p_.degree(); }

  friend bool operator==(const FlatPoly& a, const FlatPoly& b) { return a.prec_ == b.prec_ && a.p_ == b.p_; }

 private:
  BallPoly p_;
  int64_t prec_ = 0;
};

FlatPoly flatten(const BallPoly& p);
inline FlatPoly flatten(const FlatPoly& p) { return p; }

int64_t gauss_valuation(const BallPoly& p);
int64_t gauss_valuation(const FlatPoly& p);
int64_t gauss_valuation(const ExactPoly& p, const Ring& ring);

// Minimum absolute precision over the coefficients (precision cap if none).
int64_t min_abs_prec(const BallPoly& p);

BallPoly to_balls(const ExactPoly& p, const Ring& ring, int64_t abs_prec);
// Monic input: the leading coefficient becomes the exact 1.
BallPoly to_balls_monic(const ExactPoly& p, const Ring& ring, int64_t abs_prec);
// Integer lift (centers, reduced into [0, p^N)); requires nonnegative valuations.
ExactPoly lift_to_integers(const BallPoly& p);
FloatPoly to_floats(const ExactPoly& p, const Ring& ring, int64_t precision);

// Coefficients reduced into [0, m).
ExactPoly reduce_mod(const ExactPoly& p, const mpz_class& m);

}  // namespace padicres
