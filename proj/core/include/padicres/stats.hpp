#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace padicres {

class Rng;

struct MeanEstimate {
  double mean = 0;
  double stderr_ = 0;
  int64_t count = 0;
};

MeanEstimate mean_estimate(const std::vector<double>& xs);
// Proportion with its binomial standard error.
MeanEstimate proportion(int64_t hits, int64_t count);

// Histogram over nonnegative integer outcomes.
using Histogram = std::map<int64_t, int64_t>;

int64_t total(const Histogram& h);
double total_variation(const Histogram& a, const Histogram& b);

struct ChiSquared {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
};

// Homogeneity test of two samples; adjacent outcomes are merged (from the
// largest down) until every expected count is at least 5.
ChiSquared chi_squared_two_sample(const Histogram& a, const Histogram& b);
// Goodness of fit against probabilities over the keys of `probs`; the last
// key absorbs the remaining mass.
ChiSquared chi_squared_fit(const Histogram& observed, const std::map<int64_t, double>& probs);

double chi_squared_survival(double statistic, int dof);

// Least-squares slope and intercept.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y);
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

// Geometric law P[X = k] = (1 - 1/q) q^-k.
int64_t sample_geometric(unsigned long q, Rng& rng);

// Ordering of [1, d]: odd values increasing, then even values decreasing.
std::vector<int> sigma_permutation(int d);
// Sizes of the nested windows in the sum defining Y_j (i = 0 .. d-j-1).
std::vector<int> window_sizes(int d, int j);

// Y_j = sum_i min(X_{j-i}, ..., X_{j+i}) with fresh geometric X's,
// X_i = +inf for i < 0 and 0 for i >= d.
int64_t sample_y(unsigned long q, int d, int j, Rng& rng);

// sum_{i=1}^{d-j} 1 / (q^sigma(i) - 1).
mpq_class closed_form_mean(unsigned long q, int d, int j);
// sum_k (2k - 1) q^t_k / (q^t_k - 1)^2 with t_1 < t_2 < ... the window sizes.
mpq_class closed_form_var(unsigned long q, int d, int j);
// The same sum taken in the order sigma(1), sigma(2), ... .
mpq_class closed_form_var_sigma_order(unsigned long q, int d, int j);

// (q - 1)(q^j - 1) / (q^{j+1} - 1) * q^-m.
mpq_class defect_tail_bound(unsigned long q, int j, int m);
// q (q^j - 1) / (q^{j+1} - 1) * q^-m, exact for j = d - 1.
mpq_class defect_tail_top(unsigned long q, int j, int m);

// The pair (X, X' + min(X', floor(X / 2))).
std::pair<int64_t, int64_t> sample_top_pair(unsigned long q, Rng& rng);

}  // namespace padicres
