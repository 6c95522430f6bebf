#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "padicres/poly.hpp"

namespace padicres {

class Rng;

struct ExperimentConfig {
  std::string name;  // loss, vj, deltaj, residue, joint, float-compare, maxvj
  unsigned long p = 2;
  std::vector<int> degrees{5};
  int64_t prec = 32;
  int64_t trials = 1000;
  uint64_t seed = 1;
  int jobs = 1;
  int max_m = 4;
};

// One output line: ordered (column, value) pairs.
class SummaryRow {
 public:
  using Value = std::variant<int64_t, double, std::string>;

  SummaryRow& set(const std::string& key, Value v);
  SummaryRow& set(const std::string& key, int v) { return set(key, Value(static_cast<int64_t>(v))); }
  SummaryRow& set(const std::string& key, double v) { return set(key, Value(v)); }
  SummaryRow& set(const std::string& key, int64_t v) { return set(key, Value(v)); }
  SummaryRow& set(const std::string& key, const char* v) { return set(key, Value(std::string(v))); }

  bool has(const std::string& key) const;
  const Value& at(const std::string& key) const;
  double number(const std::string& key) const;
  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

struct ExperimentResult {
  std::vector<SummaryRow> rows;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
  // First row whose columns match all given (key, value) pairs.
  const SummaryRow& find(const std::vector<std::pair<std::string, SummaryRow::Value>>& match) const;
};

// Monic polynomial of degree d with the other coefficients uniform in [0, p^n).
ExactPoly random_monic(const Ring& ring, int d, int64_t n, Rng& rng);

ExperimentResult run_loss_experiment(const ExperimentConfig& cfg);
ExperimentResult run_vj_distribution(const ExperimentConfig& cfg);
ExperimentResult run_deltaj_bound(const ExperimentConfig& cfg);
ExperimentResult run_residue_independence(const ExperimentConfig& cfg);
ExperimentResult run_joint_top(const ExperimentConfig& cfg);
ExperimentResult run_float_vs_interval(const ExperimentConfig& cfg);
ExperimentResult run_max_vj_growth(const ExperimentConfig& cfg);

// Dispatch on cfg.name; throws std::invalid_argument for unknown names.
ExperimentResult run_experiment(const ExperimentConfig& cfg);
const std::vector<std::string>& experiment_names();

// Target means for the loss experiment at p = 2.
struct LossTarget {
  int degree;
  double loss;
  double expected;
};
const std::vector<LossTarget>& loss_targets();

// Count of pairs of monic degree-d polynomials over F_q whose nonvanishing
// principal subresultants are exactly those indexed by the bits of mask.
std::vector<int64_t> enumerate_nonvanishing_sets(unsigned long q, int d);

}  // namespace padicres
