#include "padicres/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "padicres/rng.hpp"

namespace padicres {

MeanEstimate mean_estimate(const std::vector<double>& xs) {
  MeanEstimate m;
  m.count = static_cast<int64_t>(xs.size());
  if (xs.empty()) return m;
  double s = 0;
  for (double x : xs) s += x;
  m.mean = s / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stderr_ = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  }
  return m;
}

MeanEstimate proportion(int64_t hits, int64_t count) {
  MeanEstimate m;
  m.count = count;
  if (count == 0) return m;
  m.mean = static_cast<double>(hits) / static_cast<double>(count);
  m.stderr_ = std::sqrt(m.mean * (1 - m.mean) / static_cast<double>(count));
  return m;
}

int64_t total(const Histogram& h) {
  int64_t t = 0;
  for (const auto& [k, c] : h) t += c;
  return t;
}

double total_variation(const Histogram& a, const Histogram& b) {
  const double na = static_cast<double>(total(a));
  const double nb = static_cast<double>(total(b));
  if (na == 0 || nb == 0) throw std::invalid_argument("total_variation: empty histogram");
  Histogram keys = a;
  for (const auto& [k, c] : b) keys[k] += 0;
  double s = 0;
  for (const auto& [k, unused] : keys) {
    const auto ia = a.find(k);
    const auto ib = b.find(k);
    const double pa = ia == a.end() ? 0 : static_cast<double>(ia->second) / na;
    const double pb = ib == b.end() ? 0 : static_cast<double>(ib->second) / nb;
    s += std::abs(pa - pb);
  }
  return s / 2;
}

double chi_squared_survival(double statistic, int dof) {
  if (dof <= 0) return 1;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, std::max(0.0, statistic)));
}

ChiSquared chi_squared_two_sample(const Histogram& a, const Histogram& b) {
  const double na = static_cast<double>(total(a));
  const double nb = static_cast<double>(total(b));
  if (na == 0 || nb == 0) throw std::invalid_argument("chi_squared_two_sample: empty histogram");
  Histogram keys = a;
  for (const auto& [k, c] : b) keys[k] += 0;
  struct Bin {
    double a = 0;
    double b = 0;
  };
  std::vector<Bin> bins;
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    const auto ia = a.find(it->first);
    const auto ib = b.find(it->first);
    Bin x{ia == a.end() ? 0.0 : static_cast<double>(ia->second), ib == b.end() ? 0.0 : static_cast<double>(ib->second)};
    if (!bins.empty()) {
      const Bin& last = bins.back();
      const double pooled = last.a + last.b;
      if (std::min(pooled * na, pooled * nb) / (na + nb) < 5) {
        bins.back().a += x.a;
        bins.back().b += x.b;
        continue;
      }
    }
    bins.push_back(x);
  }
  // The smallest outcome's bin may still be thin; fold it into its neighbour.
  while (bins.size() > 1) {
    const Bin& last = bins.back();
    const double pooled = last.a + last.b;
    if (std::min(pooled * na, pooled * nb) / (na + nb) >= 5) break;
    Bin x = bins.back();
    bins.pop_back();
    bins.back().a += x.a;
    bins.back().b += x.b;
  }
  ChiSquared r;
  for (const auto& x : bins) {
    const double pooled = x.a + x.b;
    const double ea = pooled * na / (na + nb);
    const double eb = pooled * nb / (na + nb);
    if (ea > 0) r.statistic += (x.a - ea) * (x.a - ea) / ea;
    if (eb > 0) r.statistic += (x.b - eb) * (x.b - eb) / eb;
  }
  r.dof = static_cast<int>(bins.size()) - 1;
  r.p_value = chi_squared_survival(r.statistic, r.dof);
  return r;
}

ChiSquared chi_squared_fit(const Histogram& observed, const std::map<int64_t, double>& probs) {
  const double n = static_cast<double>(total(observed));
  if (n == 0 || probs.empty()) throw std::invalid_argument("chi_squared_fit: empty input");
  const int64_t last_key = probs.rbegin()->first;
  std::vector<std::pair<double, double>> bins;  // observed, expected
  double mass = 0;
  for (const auto& [k, pr] : probs) {
    double o = 0;
    if (k == last_key) {
      for (const auto& [ok, c] : observed)
        if (ok >= k) o += static_cast<double>(c);
    } else if (auto it = observed.find(k); it != observed.end()) {
      o = static_cast<double>(it->second);
    }
    const double p = k == last_key ? 1 - mass : pr;
    mass += pr;
    bins.emplace_back(o, p * n);
  }
  // Merge thin bins from the tail.
  std::vector<std::pair<double, double>> merged;
  for (auto it = bins.rbegin(); it != bins.rend(); ++it) {
    if (!merged.empty() && merged.back().second < 5) {
      merged.back().first += it->first;
      merged.back().second += it->second;
    } else {
      merged.push_back(*it);
    }
  }
  while (merged.size() > 1 && merged.back().second < 5) {
    auto x = merged.back();
    merged.pop_back();
    merged.back().first += x.first;
    merged.back().second += x.second;
  }
  ChiSquared r;
  for (const auto& [o, e] : merged)
    if (e > 0) r.statistic += (o - e) * (o - e) / e;
  r.dof = static_cast<int>(merged.size()) - 1;
  r.p_value = chi_squared_survival(r.statistic, r.dof);
  return r;
}

std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("pearson_correlation: need two or more points");
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double syy = 0;
  double sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

int64_t sample_geometric(unsigned long q, Rng& rng) {
  // Count leading zero digits of a uniform p-adic integer.
  int64_t k = 0;
  while (rng.below(q) == 0) ++k;
  return k;
}

std::vector<int> sigma_permutation(int d) {
  std::vector<int> s;
  for (int i = 1; i <= d; i += 2) s.push_back(i);
  for (int i = d - (d % 2 == 0 ? 0 : 1); i >= 2; i -= 2) s.push_back(i);
  return s;
}

std::vector<int> window_sizes(int d, int j) {
  if (j < 0 || j >= d) throw std::invalid_argument("window_sizes: need 0 <= j < d");
  std::vector<int> w;
  for (int i = 0; i <= d - j - 1; ++i) w.push_back(std::min(i, j) + i + 1);
  return w;
}

int64_t sample_y(unsigned long q, int d, int j, Rng& rng) {
  if (j < 0 || j >= d) throw std::invalid_argument("sample_y: need 0 <= j < d");
  std::vector<int64_t> x(static_cast<size_t>(d));
  for (auto& v : x) v = sample_geometric(q, rng);
  int64_t y = 0;
  for (int i = 0; i <= d; ++i) {
    if (j + i >= d) break;  // the window meets an index >= d, where X = 0
    int64_t m = std::numeric_limits<int64_t>::max();
    for (int k = std::max(0, j - i); k <= j + i; ++k) m = std::min(m, x[static_cast<size_t>(k)]);
    y += m;
  }
  return y;
}

namespace {

mpz_class upow(unsigned long q, int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(k));
  return r;
}

mpq_class var_term(unsigned long q, int t, int k) {
  const mpz_class qt = upow(q, t);
  mpq_class r(qt * (2 * k - 1), (qt - 1) * (qt - 1));
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class closed_form_mean(unsigned long q, int d, int j) {
  if (j < 0 || j >= d) throw std::invalid_argument("closed_form_mean: need 0 <= j < d");
  const auto s = sigma_permutation(d);
  mpq_class m = 0;
  for (int i = 0; i < d - j; ++i) {
    mpq_class t(1, upow(q, s[static_cast<size_t>(i)]) - 1);
    t.canonicalize();
    m += t;
  }
  return m;
}

mpq_class closed_form_var(unsigned long q, int d, int j) {
  auto w = window_sizes(d, j);
  std::sort(w.begin(), w.end());
  mpq_class v = 0;
  for (size_t k = 0; k < w.size(); ++k) v += var_term(q, w[k], static_cast<int>(k) + 1);
  return v;
}

mpq_class closed_form_var_sigma_order(unsigned long q, int d, int j) {
  if (j < 0 || j >= d) throw std::invalid_argument("closed_form_var_sigma_order: need 0 <= j < d");
  const auto s = sigma_permutation(d);
  mpq_class v = 0;
  for (int i = 0; i < d - j; ++i) v += var_term(q, s[static_cast<size_t>(i)], i + 1);
  return v;
}

mpq_class defect_tail_bound(unsigned long q, int j, int m) {
  mpq_class r((q - 1) * (upow(q, j) - 1), (upow(q, j + 1) - 1) * upow(q, m));
  r.canonicalize();
  return r;
}

mpq_class defect_tail_top(unsigned long q, int j, int m) {
  mpq_class r(q * (upow(q, j) - 1), (upow(q, j + 1) - 1) * upow(q, m));
  r.canonicalize();
  return r;
}

std::pair<int64_t, int64_t> sample_top_pair(unsigned long q, Rng& rng) {
  const int64_t x = sample_geometric(q, rng);
  const int64_t y = sample_geometric(q, rng);
  return {x, y + std::min(y, x / 2)};
}

}  // namespace padicres
