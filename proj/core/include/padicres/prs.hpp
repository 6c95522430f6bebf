#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicres/poly.hpp"

namespace padicres {

class Rng;

struct EuclidStep {
  BallPoly s;
  BallPoly u;
  BallPoly v;
};

// Extended Euclid over balls.  trace holds S_1 = A, S_2 = B, S_3, ...
// (trace[k - 1] is S_k) with their cofactors; the result is the last
// nonzero remainder.
struct EuclidResult {
  BallPoly d;
  BallPoly u;
  BallPoly v;
  std::vector<EuclidStep> trace;
};

// Throws LeadingCoefficientUnknownZero(k) when S_k has a leading
// coefficient without known nonzero digit but is not entirely zero.
EuclidResult extended_euclid(const BallPoly& a, const BallPoly& b);

struct SubresStep {
  BallPoly r;        // R_j
  Ball lead;         // r_j (coefficient of X^j)
  int64_t prec = 0;  // N_j: minimum absolute precision over R_j
  int64_t lead_val = 0;   // V_j
  int64_t gauss_val = 0;  // W_j
  int64_t defect() const noexcept { return lead_val - gauss_val; }  // delta_j
};

struct SubresFailure {
  std::string reason;
  int index = -1;
};

// Run of the normal-case recurrence R_{j-1} = prem(R_{j+1}, R_j) / r_{j+1}^2.
struct SubresTranscript {
  int degree = 0;
  int64_t input_prec = 0;
  std::vector<SubresStep> steps;  // steps[j] for j in [0, degree); filled from j = degree - 1 down
  std::optional<SubresFailure> failure;

  bool complete() const noexcept { return !failure.has_value(); }
  // Rethrows the recorded failure as NotNormal.
  void ensure_complete() const;
  bool has_step(int j) const;
  const SubresStep& step(int j) const;
};

// How one step R_{j-1} = prem(R_{j+1}, R_j) / r_{j+1}^2 is evaluated over
// balls: lc(B)^2 (A % B) through Euclidean division, multiply-and-cancel
// pseudo-division, or the two elimination steps
//   S = R_{j+1} - (r_{j+1} / r_j) X R_j,  T = S - (s / r_j) R_j,
//   R_{j-1} = (r_j^2 / r_{j+1}^2) T
// with every intermediate polynomial flattened (only meaningful in prs_flat).
enum class PremMethod { Euclidean, FractionFree, FlatSteps };

// Monic A, B of the same degree d.  Ball arithmetic throughout.
SubresTranscript prs_ball(const BallPoly& a, const BallPoly& b, PremMethod method = PremMethod::FractionFree);
// Same recurrence, flattening every R_j to its minimum precision.
SubresTranscript prs_flat(const FlatPoly& a, const FlatPoly& b, PremMethod method = PremMethod::FlatSteps);

struct FloatSubres {
  std::vector<FloatPoly> r;  // r[j] = R_j
  std::optional<SubresFailure> failure;
};

FloatSubres prs_float(const FloatPoly& a, const FloatPoly& b);

// Per-j lower bound on the loss: N_j <= N + V_{j+1} - 2 (delta_{j+1} + ... + delta_{d-1}),
// with V_d = 0.  Entry j of the result is the right-hand side.
std::vector<int64_t> loss_bound(const SubresTranscript& t);
// -V_1 + 2 (delta_1 + ... + delta_{d-1}), the predicted N - N_0.
int64_t predicted_total_loss(const SubresTranscript& t);

struct StabilizedOptions {
  // Accept deg A >= deg B with a unit leading coefficient of B.
  bool allow_unit_leading = false;
  // When set, lifted digits are random instead of zero.
  Rng* random_lift = nullptr;
  PremMethod method = PremMethod::FractionFree;
};

struct StabilizedResult {
  int degree = 0;  // deg B
  int64_t prec = 0;
  std::vector<BallPoly> r;             // r[j] = R_j at flat O(p^N)
  std::vector<int64_t> lead_val;       // V_j
  std::vector<int64_t> lift;           // extra digits used at step j (2 V_j + 2 V_{j+1})
  int64_t max_working_prec = 0;
  // Set when some R_j came out below O(p^N) before the final truncation.
  bool shortfall = false;
};

// Throws HypothesisHViolated(j) when val(r_j) >= ceil(N / 2).
StabilizedResult stabilized_prs(const BallPoly& a, const BallPoly& b, int64_t prec, const StabilizedOptions& opts = {});

}  // namespace padicres
