#include "padicres/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicres/errors.hpp"
#include "padicres/exact_oracle.hpp"

namespace padicres {

namespace {

int64_t qval(const Ring& ring, const mpq_class& x) {
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  return ring.remove_p(num) - ring.remove_p(den);
}

// Weights w_k with g'(0) = sum_k w_k g(k) for every polynomial g of degree <= n.
std::vector<mpq_class> derivative_weights(int n) {
  std::vector<mpq_class> w(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    // Derivative at 0 of the Lagrange basis polynomial for node k.
    mpq_class denom = 1;
    for (int m = 0; m <= n; ++m)
      if (m != k) denom *= (k - m);
    mpq_class deriv = 0;
    for (int skip = 0; skip <= n; ++skip) {
      if (skip == k) continue;
      mpq_class term = 1;
      for (int m = 0; m <= n; ++m)
        if (m != k && m != skip) term *= -m;
      deriv += term;
    }
    w[static_cast<size_t>(k)] = deriv / denom;
  }
  return w;
}

}  // namespace

std::vector<int64_t> elementary_divisor_valuations(const Ring& ring, RationalMatrix m) {
  std::vector<int64_t> vals;
  std::vector<bool> row_done(static_cast<size_t>(m.rows), false);
  std::vector<bool> col_done(static_cast<size_t>(m.cols), false);
  for (;;) {
    int pr = -1;
    int pc = -1;
    int64_t best = 0;
    for (int i = 0; i < m.rows; ++i) {
      if (row_done[static_cast<size_t>(i)]) continue;
      for (int c = 0; c < m.cols; ++c) {
        if (col_done[static_cast<size_t>(c)] || m(i, c) == 0) continue;
        const int64_t v = qval(ring, m(i, c));
        if (pr < 0 || v < best) {
          pr = i;
          pc = c;
          best = v;
        }
      }
    }
    if (pr < 0) break;
    vals.push_back(best);
    row_done[static_cast<size_t>(pr)] = true;
    col_done[static_cast<size_t>(pc)] = true;
    const mpq_class pivot = m(pr, pc);
    // Row and column eliminations with p-integral multipliers.
    for (int i = 0; i < m.rows; ++i) {
      if (i == pr || m(i, pc) == 0) continue;
      const mpq_class f = m(i, pc) / pivot;
      for (int c = 0; c < m.cols; ++c) m(i, c) -= f * m(pr, c);
    }
    for (int c = 0; c < m.cols; ++c) {
      if (c == pc || m(pr, c) == 0) continue;
      const mpq_class f = m(pr, c) / pivot;
      for (int i = 0; i < m.rows; ++i) m(i, c) -= f * m(i, pc);
    }
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

RationalMatrix subresultant_jacobian(const ExactPoly& a, const ExactPoly& b, int j) {
  const int d = a.degree();
  if (d < 1 || b.degree() != d || a.lc() != 1 || b.lc() != 1) {
    throw std::invalid_argument("subresultant_jacobian: inputs must be monic of the same degree");
  }
  if (j < 1 || j >= d) throw std::invalid_argument("subresultant_jacobian: need 1 <= j < d");
  // Each coefficient enters at most d columns of a truncated Sylvester
  // matrix, so subresultants are polynomials of degree <= d in it.
  const int nodes = d;
  const auto w = derivative_weights(nodes);
  RationalMatrix jac(2 * j + 1, 2 * d);
  for (int col = 0; col < 2 * d; ++col) {
    for (int k = 0; k <= nodes; ++k) {
      ExactPoly pa = a;
      ExactPoly pb = b;
      (col < d ? pa : pb)[static_cast<size_t>(col % d)] += k;
      ExactPoly rj;
      ExactPoly rjm1;
      subresultant_minors_at(pa, pb, d, d, j, rj, nullptr, nullptr);
      subresultant_minors_at(pa, pb, d, d, j - 1, rjm1, nullptr, nullptr);
      const mpq_class& wk = w[static_cast<size_t>(k)];
      for (int i = 0; i <= j; ++i) jac(i, col) += wk * mpq_class(coeff(rj, i));
      for (int i = 0; i < j; ++i) jac(j + 1 + i, col) += wk * mpq_class(coeff(rjm1, i));
    }
  }
  return jac;
}

JacobianReport jacobian_lattice_check(const Ring& ring, const ExactPoly& a, const ExactPoly& b, int j) {
  const int d = a.degree();
  const mpz_class lead = principal_subresultant(a, b, d, d, j);
  if (lead == 0) throw DegenerateJacobian(j);
  JacobianReport rep;
  rep.j = j;
  rep.lead_val = ring.valuation(lead);
  const RationalMatrix jac = subresultant_jacobian(a, b, j);
  rep.within_unit_ball = std::all_of(jac.a.begin(), jac.a.end(), [&](const mpq_class& x) { return x == 0 || qval(ring, x) >= 0; });
  rep.divisor_vals = elementary_divisor_valuations(ring, jac);
  rep.full_rank = static_cast<int>(rep.divisor_vals.size()) == 2 * j + 1;
  rep.contains_scaled_ball = !rep.divisor_vals.empty() && rep.divisor_vals.front() >= 0 &&
                             rep.divisor_vals.back() <= 2 * rep.lead_val;
  return rep;
}

}  // namespace padicres
