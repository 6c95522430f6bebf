#pragma once

#include <algorithm>
#include <vector>

#include "padicres/poly.hpp"
#include "padicres/prs.hpp"
#include "padicres/rng.hpp"

namespace padicres::detail {

inline bool all_known_zero(const BallPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Ball& x) { return x.is_known_zero(); });
}

inline bool is_monic(const BallPoly& p) {
  if (p.empty()) return false;
  const Ball& lc = p.lc();
  return !lc.is_known_zero() && lc.valuation() == 0 && lc.unit() == 1;
}

inline BallPoly truncate_all(const BallPoly& p, int64_t n) {
  std::vector<Ball> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.push_back(x.truncated(n));
  return BallPoly(std::move(c));
}

// Every inexact coefficient ends up at absolute precision exactly n.
inline BallPoly set_precision(const BallPoly& p, int64_t n, Rng* rng) {
  std::vector<Ball> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) {
    if (x.is_exact()) {
      c.push_back(x);
    } else if (x.abs_prec() >= n) {
      c.push_back(x.truncated(n));
    } else {
      c.push_back(rng ? x.lifted_random(n, *rng) : x.lifted(n));
    }
  }
  return BallPoly(std::move(c));
}

template <class T>
inline Poly<T> divide_all(const Poly<T>& p, const T& c) {
  std::vector<T> out;
  out.reserve(p.size());
  for (const auto& x : p.coeffs()) out.push_back(x / c);
  return Poly<T>(std::move(out));
}

template <class T>
inline Poly<T> run_prem(const Poly<T>& a, const Poly<T>& b, PremMethod method) {
  return method == PremMethod::Euclidean ? prem(a, b) : prem_fraction_free(a, b);
}

}  // namespace padicres::detail
