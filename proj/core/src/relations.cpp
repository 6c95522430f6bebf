#include "padicres/relations.hpp"

#include <stdexcept>

#include "padicres/padic_float.hpp"
#include "padicres/rng.hpp"

namespace padicres {

namespace {

mpz_class zpow(const mpz_class& x, int k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

ExactPoly constant(const mpz_class& c) { return ExactPoly(std::vector<mpz_class>{c}); }

ExactPoly scaled(const ExactPoly& p, const mpz_class& c) {
  std::vector<mpz_class> out;
  for (const auto& x : p.coeffs()) out.push_back(x * c);
  return ExactPoly(std::move(out));
}

}  // namespace

ExtendedSubresultants extended_subresultants(const ExactPoly& a, const ExactPoly& b) {
  const int d = a.degree();
  if (d < 1 || b.degree() != d || a.lc() != 1 || b.lc() != 1) {
    throw std::invalid_argument("extended_subresultants: inputs must be monic of the same degree");
  }
  SubresultantSet s = subresultants_minors(a, b, d, d);
  ExtendedSubresultants e;
  e.d = d;
  e.r = s.r;
  e.u = s.u;
  e.v = s.v;
  e.lead = s.lead;
  e.r.push_back(b);
  e.u.emplace_back();
  e.v.push_back(constant(1));
  e.lead.emplace_back(1);
  e.r.push_back(a);
  e.u.push_back(constant(1));
  e.v.emplace_back();
  return e;
}

RelationReport check_relations(const ExactPoly& a, const ExactPoly& b, Rng& rng) {
  const ExtendedSubresultants e = extended_subresultants(a, b);
  const int d = e.d;
  RelationReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag) rep.failures.push_back(what);
    flag = false;
  };
  auto at = [](const std::vector<ExactPoly>& v, int i) -> const ExactPoly& { return v[static_cast<size_t>(i)]; };
  auto lead = [&](int i) -> const mpz_class& { return e.lead[static_cast<size_t>(i)]; };

  for (int j = 1; j <= d; ++j) {
    const ExactPoly lhs = at(e.u, j - 1) * at(e.v, j) - at(e.u, j) * at(e.v, j - 1);
    const mpz_class sq = lead(j) * lead(j);
    if (lhs != constant(sign_pow(d + j + 1) * sq) && !(sq == 0 && lhs.empty())) fail(rep.cross, "cross j=" + std::to_string(j));
    if (lhs != constant(sign_pow(j) * sq) && !(sq == 0 && lhs.empty())) rep.cross_printed_sign = false;
  }
  for (int j = 0; j < d; ++j) {
    const mpz_class uj = coeff(at(e.u, j), d - j - 1);
    const mpz_class vj = coeff(at(e.v, j), d - j - 1);
    if (uj != -vj || uj != sign_pow(d + j) * lead(j + 1)) fail(rep.top_coeff, "top_coeff j=" + std::to_string(j));
    if (uj != -vj || uj != sign_pow(j) * lead(j + 1)) rep.top_coeff_printed_sign = false;
  }
  for (int j = 2; j < d; ++j) {
    SubresultantSet nested = subresultants_minors(at(e.r, j), at(e.r, j - 1), j, j - 1);
    for (int k = 0; k < j - 1; ++k) {
      if (nested.r[static_cast<size_t>(k)] != scaled(at(e.r, k), zpow(lead(j), 2 * (j - k - 1)))) {
        fail(rep.nested_r, "nested_r j=" + std::to_string(j) + " k=" + std::to_string(k));
      }
    }
  }
  for (int j = 1; j < d; ++j) {
    const int m = d - j;
    if (m - 1 < 1) continue;
    SubresultantSet nested = subresultants_minors(at(e.u, j - 1), at(e.u, j), m, m - 1);
    for (int k = 0; k < m - 1; ++k) {
      if (nested.r[static_cast<size_t>(k)] != scaled(at(e.u, d - 1 - k), zpow(lead(j), 2 * (m - k - 1)))) {
        fail(rep.nested_u, "nested_u j=" + std::to_string(j) + " k=" + std::to_string(k));
      }
    }
    if (nested.r[0] != constant(-zpow(lead(j), 2 * (m - 1)))) fail(rep.cofactor_resultant, "cofactor_resultant j=" + std::to_string(j));
  }
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i <= 2 * j - d; ++i) {
      for (int which = 0; which < 2; ++which) {
        ExactPoly pa = a;
        ExactPoly pb = b;
        ExactPoly& target = which == 0 ? pa : pb;
        target[static_cast<size_t>(i)] += mpz_class(1) + rng.below(mpz_class(1000));
        if (principal_subresultant(pa, pb, d, d, j) != lead(j)) {
          fail(rep.locality, "locality j=" + std::to_string(j) + " i=" + std::to_string(i));
        }
      }
    }
  }
  return rep;
}

std::optional<std::pair<ExactPoly, ExactPoly>> reconstruct_pair(const Ring& ring, int64_t n, int d, int j,
                                                                const ExactPoly& u_j, const ExactPoly& u_jm1,
                                                                const ExactPoly& r_j, const ExactPoly& r_jm1) {
  if (j < 1 || j >= d) throw std::invalid_argument("reconstruct_pair: need 1 <= j < d");
  const mpz_class mod = ring.power(n);
  const mpz_class a = coeff(r_j, j);
  if (mpz_divisible_ui_p(a.get_mpz_t(), ring.prime())) return std::nullopt;
  const int m = d - j;
  // U_{j-1} W + U_j W' = rho with deg W < m - 1, deg W' < m.
  ExactPoly rho_poly;
  ExactPoly w;
  ExactPoly w2;
  subresultant_minors_at(u_jm1, u_j, m, m - 1, 0, rho_poly, &w, &w2);
  const mpz_class rho = coeff(rho_poly, 0);
  const int sgn = sign_pow(d + j + 1);
  const mpz_class s = sgn * a * a * inverse_mod_power(ring, rho, n);
  const ExactPoly v_j = reduce_mod(scaled(w, s) - u_j, mod);
  const ExactPoly v_jm1 = reduce_mod(scaled(w2, -s) - u_jm1, mod);
  const mpz_class det = -sgn * a * a;
  const mpz_class inv = inverse_mod_power(ring, det, n);
  ExactPoly ra = reduce_mod(scaled(r_j * v_jm1 - v_j * r_jm1, inv), mod);
  ExactPoly rb = reduce_mod(scaled(u_j * r_jm1 - r_j * u_jm1, inv), mod);
  return std::make_pair(std::move(ra), std::move(rb));
}

}  // namespace padicres
