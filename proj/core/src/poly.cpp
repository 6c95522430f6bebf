#include "padicres/poly.hpp"

namespace padicres {

template <>
Poly<mpz_class> prem(const Poly<mpz_class>& a, const Poly<mpz_class>& b) {
  if (b.empty()) throw ZeroPolynomial();
  const int db = b.degree();
  if (a.degree() < db) throw std::invalid_argument("prem: deg A < deg B");
  const mpz_class& lead = b.lc();
  std::vector<mpz_class> r = a.coeffs();
  int e = a.degree() - db + 1;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const mpz_class top = r.back();
    const int off = dr - db;
    for (auto& x : r) x *= lead;
    for (int k = 0; k < db; ++k) r[static_cast<size_t>(off + k)] -= top * b[static_cast<size_t>(k)];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : r) x *= f;
  }
  return Poly<mpz_class>(std::move(r));
}

FlatPoly::FlatPoly(const BallPoly& p) : FlatPoly(p, min_abs_prec(p)) {}

FlatPoly::FlatPoly(const BallPoly& p, int64_t abs_prec) : prec_(abs_prec) {
  std::vector<Ball> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(x.truncated(abs_prec));
  p_ = BallPoly(std::move(c));
}

FlatPoly flatten(const BallPoly& p) { return FlatPoly(p); }

int64_t min_abs_prec(const BallPoly& p) {
  int64_t n = p.empty() ? Ring::kDefaultPrecisionCap : p[0].ring().precision_cap();
  for (const auto& x : p.coeffs()) n = std::min(n, x.abs_prec());
  return n;
}

int64_t gauss_valuation(const BallPoly& p) {
  if (p.empty()) throw ZeroPolynomial();
  int64_t v = p[0].valuation();
  for (const auto& x : p.coeffs()) v = std::min(v, x.valuation());
  return v;
}

int64_t gauss_valuation(const FlatPoly& p) { return gauss_valuation(p.balls()); }

int64_t gauss_valuation(const ExactPoly& p, const Ring& ring) {
  if (p.empty()) throw ZeroPolynomial();
  int64_t v = ring.precision_cap();
  for (const auto& x : p.coeffs())
    if (x != 0) v = std::min(v, ring.valuation(x));
  return v;
}

BallPoly to_balls(const ExactPoly& p, const Ring& ring, int64_t abs_prec) {
  std::vector<Ball> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.emplace_back(ring, x, abs_prec);
  return BallPoly(std::move(c));
}

BallPoly to_balls_monic(const ExactPoly& p, const Ring& ring, int64_t abs_prec) {
  if (p.empty() || p.lc() != 1) throw std::invalid_argument("to_balls_monic: polynomial is not monic");
  BallPoly out = to_balls(p, ring, abs_prec);
  out[out.size() - 1] = Ball::exact(ring, 1);
  return out;
}

ExactPoly lift_to_integers(const BallPoly& p) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(x.integer_center());
  return ExactPoly(std::move(c));
}

FloatPoly to_floats(const ExactPoly& p, const Ring& ring, int64_t precision) {
  std::vector<PadicFloat> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(PadicFloat::from_integer(ring, precision, x));
  return FloatPoly(std::move(c));
}

ExactPoly reduce_mod(const ExactPoly& p, const mpz_class& m) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    c.push_back(r);
  }
  return ExactPoly(std::move(c));
}

}  // namespace padicres
