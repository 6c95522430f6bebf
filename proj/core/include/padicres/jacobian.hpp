#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padicres/poly.hpp"

namespace padicres {

// Rational matrix, row-major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
  mpq_class& operator()(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  const mpq_class& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
  }
};

// p-adic valuations of the elementary divisors over Z_(p), in increasing
// order; their count is the rank.
std::vector<int64_t> elementary_divisor_valuations(const Ring& ring, RationalMatrix m);

// Exact differential at (A, B) of (A, B) -> (R_j, R_{j-1}) for monic A, B of
// degree d.  Columns follow a_0..a_{d-1}, b_0..b_{d-1}; rows the
// coefficients of R_j (degrees 0..j) then of R_{j-1} (degrees 0..j-1).
RationalMatrix subresultant_jacobian(const ExactPoly& a, const ExactPoly& b, int j);

struct JacobianReport {
  int j = 0;
  int64_t lead_val = 0;              // val(r_j)
  std::vector<int64_t> divisor_vals; // elementary divisor valuations
  bool full_rank = false;            // rank = 2j + 1
  bool within_unit_ball = false;     // every entry is p-integral
  bool contains_scaled_ball = false; // largest valuation <= 2 val(r_j)

  bool ok() const { return full_rank && within_unit_ball && contains_scaled_ball; }
};

// Throws DegenerateJacobian(j) when r_j = 0.
JacobianReport jacobian_lattice_check(const Ring& ring, const ExactPoly& a, const ExactPoly& b, int j);

}  // namespace padicres
