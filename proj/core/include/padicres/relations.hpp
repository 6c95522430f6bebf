#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicres/exact_oracle.hpp"

namespace padicres {

class Rng;

// Subresultants of monic A, B of degree d with the conventions
// R_d = B, R_{d+1} = A, U_d = 0, V_d = 1, U_{d+1} = 1, V_{d+1} = 0, r_d = 1.
struct ExtendedSubresultants {
  int d = 0;
  std::vector<ExactPoly> r, u, v;  // indices 0 .. d+1
  std::vector<mpz_class> lead;     // indices 0 .. d
};

ExtendedSubresultants extended_subresultants(const ExactPoly& a, const ExactPoly& b);

struct RelationReport {
  // Each flag is true when the identity held for every index tested.
  bool cross = true;               // U_{j-1} V_j - U_j V_{j-1} = (-1)^{d+j+1} r_j^2, 1 <= j <= d
  bool cross_printed_sign = true;  // same with sign (-1)^j
  bool top_coeff = true;           // U_j[d-j-1] = -V_j[d-j-1] = (-1)^{d+j} r_{j+1}, 0 <= j < d
  bool top_coeff_printed_sign = true;  // same with sign (-1)^j
  bool nested_r = true;            // Res^{j,j-1}_k(R_j, R_{j-1}) = r_j^{2(j-k-1)} R_k
  bool nested_u = true;            // Res^{d-j,d-j-1}_k(U_{j-1}, U_j) = r_j^{2(d-j-k-1)} U_{d-1-k}
  bool cofactor_resultant = true;  // Res(U_{j-1}, U_j) = -r_j^{2(d-j-1)}
  bool locality = true;            // r_j unchanged when a_i, b_i with i <= 2j - d are perturbed
  std::vector<std::string> failures;

  bool all_consistent() const { return cross && top_coeff && nested_r && nested_u && cofactor_resultant && locality; }
};

RelationReport check_relations(const ExactPoly& a, const ExactPoly& b, Rng& rng);

// Recovers (A, B) mod p^n from (U_j, U_{j-1}, R_j, R_{j-1}) mod p^n when r_j
// is a unit.  Returns nothing when r_j is not invertible.
std::optional<std::pair<ExactPoly, ExactPoly>> reconstruct_pair(const Ring& ring, int64_t n, int d, int j,
                                                                const ExactPoly& u_j, const ExactPoly& u_jm1,
                                                                const ExactPoly& r_j, const ExactPoly& r_jm1);

}  // namespace padicres
