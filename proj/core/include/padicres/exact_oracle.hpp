#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "padicres/poly.hpp"

namespace padicres {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
  const mpz_class& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  // Fraction-free (Bareiss) determinant; 1 for the empty matrix.
  mpz_class determinant() const;
  // Determinant in Z/p^n Z by elimination with minimal-valuation pivots,
  // returned in [0, p^n).
  mpz_class determinant_mod(const Ring& ring, int64_t n) const;
  // Matrix with row i and column j removed.
  IntMatrix minor_matrix(int i, int j) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

// Matrix of (U, V) -> AU + BV in the bases (X^{dB-1},0), ..., (0,1) and
// X^{dA+dB-1}, ..., 1.
IntMatrix sylvester(const ExactPoly& a, const ExactPoly& b, int da, int db);
// Its truncation: columns X^{dB-j-1}A, ..., A, X^{dA-j-1}B, ..., B and rows
// X^{dA+dB-j-1}, ..., X^j.
IntMatrix sylvester_truncated(const ExactPoly& a, const ExactPoly& b, int da, int db, int j);

mpz_class resultant(const ExactPoly& a, const ExactPoly& b, int da, int db);

// Subresultants indexed by j in [0, min(dA, dB)).
struct SubresultantSet {
  int da = 0;
  int db = 0;
  std::vector<ExactPoly> r;       // R_j
  std::vector<mpz_class> lead;    // coefficient of X^j in R_j
  std::vector<ExactPoly> u;       // cofactors of A (empty when not computed)
  std::vector<ExactPoly> v;       // cofactors of B

  int size() const noexcept { return static_cast<int>(r.size()); }
  bool has_cofactors() const noexcept { return !u.empty(); }
};

// Cramer-type construction from maximal minors of the truncated matrix.
// R_j is the determinant with its last row replaced by the column
// polynomials; U_j, V_j come from the cofactors of that row.
SubresultantSet subresultants_minors(const ExactPoly& a, const ExactPoly& b, int da, int db);
// Only the j-th subresultant (cofactors included).
void subresultant_minors_at(const ExactPoly& a, const ExactPoly& b, int da, int db, int j, ExactPoly& r,
                            ExactPoly* u, ExactPoly* v);
// Only the coefficient of X^j in R_j.
mpz_class principal_subresultant(const ExactPoly& a, const ExactPoly& b, int da, int db, int j);

// Subresultant pseudo-remainder sequence.
//   S_0 = A, S_1 = B,
//   S_{i+1} = (-s_i)^{e_i + 1} (S_{i-1} % S_i) / (s_{i-1} c_{i-1}^{e_i}),
//   c_i = s_i^{e_i} c_{i-1}^{1 - e_i},
// with s_i = lc(S_i), e_i = deg S_{i-1} - deg S_i, s_0 = c_0 = 1.
struct PrsTranscript {
  std::vector<ExactPoly> s;      // S_0, S_1, ..., ending with the first zero (if reached)
  std::vector<mpz_class> lead;   // s_i (0 for the zero polynomial)
  std::vector<mpq_class> aux;    // c_i
  std::vector<int> deg;          // n_i (-1 for zero)
  std::vector<int> drop;         // e_i = n_{i-1} - n_i (drop[0] = 0)
};

struct PrsResult {
  PrsTranscript transcript;
  SubresultantSet subres;  // without cofactors
};

// Requires deg A >= deg B >= 1 (swaps with the appropriate sign otherwise).
PrsResult prs_general(const ExactPoly& a, const ExactPoly& b);

// Subresultants of a pair of monic polynomials of degree d, j in [0, d).
// Uses prs_general; falls back on nothing (abnormal sequences included).
SubresultantSet subresultants_exact(const ExactPoly& a, const ExactPoly& b);

// Valuation of an integer, the ring's precision cap for 0.
int64_t valuation(const Ring& ring, const mpz_class& x);

}  // namespace padicres
