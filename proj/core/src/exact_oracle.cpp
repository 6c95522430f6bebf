#include "padicres/exact_oracle.hpp"

#include <stdexcept>
#include <utility>

#include "padicres/padic_float.hpp"

namespace padicres {

namespace {

mpq_class qpow(const mpq_class& x, int k) {
  mpq_class r = 1;
  const mpq_class base = k >= 0 ? x : mpq_class(1) / x;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
  return r;
}

mpz_class zpow(const mpz_class& x, int k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// Multiplies by num/den, asserting the division is exact.
ExactPoly scale_exact(const ExactPoly& p, const mpz_class& num, const mpz_class& den) {
  std::vector<mpz_class> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) {
    mpz_class t = x * num;
    if (!mpz_divisible_p(t.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("prs_general: inexact division");
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    c.push_back(std::move(t));
  }
  return ExactPoly(std::move(c));
}

struct ColumnLayout {
  int n;
  int cols_a;  // columns X^k A
  int da;
  int db;
  int j;
  int shift(int c) const { return c < cols_a ? cols_a - 1 - c : (da - j - 1) - (c - cols_a); }
};

}  // namespace

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix is not square");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int c = k + 1; c < n; ++c) {
        mpz_class t = m(i, c) * m(k, k) - m(i, k) * m(k, c);
        mpz_divexact(m(i, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  mpz_class d = m(n - 1, n - 1);
  return sign < 0 ? mpz_class(-d) : d;
}

mpz_class IntMatrix::determinant_mod(const Ring& ring, int64_t prec) const {
  if (rows_ != cols_) throw std::invalid_argument("determinant_mod: matrix is not square");
  const int n = rows_;
  IntMatrix m = *this;
  for (auto& x : m.a_) ring.reduce(x, prec);
  mpz_class det = 1;
  for (int k = 0; k < n; ++k) {
    int best = -1;
    int64_t best_val = prec;
    for (int i = k; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const int64_t v = ring.valuation(m(i, k));
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best < 0) return 0;
    if (best != k) {
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(best, c));
      det = -det;
    }
    mpz_class unit = m(k, k);
    ring.remove_p(unit);
    const mpz_class inv = inverse_mod_power(ring, unit, prec);
    const mpz_class pv = ring.power(best_val);
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), m(i, k).get_mpz_t(), pv.get_mpz_t());
      f *= inv;
      ring.reduce(f, prec);
      for (int c = k; c < n; ++c) {
        m(i, c) -= f * m(k, c);
        ring.reduce(m(i, c), prec);
      }
    }
    det *= m(k, k);
    ring.reduce(det, prec);
  }
  ring.reduce(det, prec);
  return det;
}

IntMatrix IntMatrix::minor_matrix(int r, int c) const {
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (int i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int k = 0, ok = 0; k < cols_; ++k) {
      if (k == c) continue;
      out(oi, ok++) = (*this)(i, k);
    }
    ++oi;
  }
  return out;
}

IntMatrix sylvester_truncated(const ExactPoly& a, const ExactPoly& b, int da, int db, int j) {
  if (a.degree() > da || b.degree() > db) throw std::invalid_argument("sylvester: degree exceeds declared degree");
  if (j < 0 || j > std::min(da, db)) throw std::invalid_argument("sylvester: index out of range");
  const ColumnLayout lay{da + db - 2 * j, db - j, da, db, j};
  IntMatrix m(lay.n, lay.n);
  for (int r = 0; r < lay.n; ++r) {
    const int e = da + db - j - 1 - r;
    for (int c = 0; c < lay.n; ++c) {
      m(r, c) = coeff(c < lay.cols_a ? a : b, e - lay.shift(c));
    }
  }
  return m;
}

IntMatrix sylvester(const ExactPoly& a, const ExactPoly& b, int da, int db) {
  return sylvester_truncated(a, b, da, db, 0);
}

mpz_class resultant(const ExactPoly& a, const ExactPoly& b, int da, int db) {
  return sylvester(a, b, da, db).determinant();
}

mpz_class principal_subresultant(const ExactPoly& a, const ExactPoly& b, int da, int db, int j) {
  return sylvester_truncated(a, b, da, db, j).determinant();
}

void subresultant_minors_at(const ExactPoly& a, const ExactPoly& b, int da, int db, int j, ExactPoly& r,
                            ExactPoly* u, ExactPoly* v) {
  IntMatrix m = sylvester_truncated(a, b, da, db, j);
  const ColumnLayout lay{da + db - 2 * j, db - j, da, db, j};
  const int n = lay.n;
  std::vector<mpz_class> rc(static_cast<size_t>(j + 1));
  for (int k = 0; k <= j; ++k) {
    for (int c = 0; c < n; ++c) m(n - 1, c) = coeff(c < lay.cols_a ? a : b, k - lay.shift(c));
    rc[static_cast<size_t>(k)] = m.determinant();
  }
  r = ExactPoly(std::move(rc));
  if (!u && !v) return;
  std::vector<mpz_class> uc(static_cast<size_t>(db - j));
  std::vector<mpz_class> vc(static_cast<size_t>(da - j));
  for (int c = 0; c < n; ++c) {
    mpz_class cof = n == 1 ? mpz_class(1) : m.minor_matrix(n - 1, c).determinant();
    if ((n - 1 + c) % 2 != 0) cof = -cof;
    if (c < lay.cols_a) {
      uc[static_cast<size_t>(lay.shift(c))] = cof;
    } else {
      vc[static_cast<size_t>(lay.shift(c))] = cof;
    }
  }
  if (u) *u = ExactPoly(std::move(uc));
  if (v) *v = ExactPoly(std::move(vc));
}

SubresultantSet subresultants_minors(const ExactPoly& a, const ExactPoly& b, int da, int db) {
  SubresultantSet s;
  s.da = da;
  s.db = db;
  const int count = std::min(da, db);
  s.r.resize(static_cast<size_t>(count));
  s.u.resize(static_cast<size_t>(count));
  s.v.resize(static_cast<size_t>(count));
  s.lead.resize(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    const auto k = static_cast<size_t>(j);
    subresultant_minors_at(a, b, da, db, j, s.r[k], &s.u[k], &s.v[k]);
    s.lead[k] = coeff(s.r[k], j);
  }
  return s;
}

PrsResult prs_general(const ExactPoly& a, const ExactPoly& b) {
  if (a.empty() || b.empty()) throw ZeroPolynomial();
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) {
    PrsResult swapped = prs_general(b, a);
    for (int j = 0; j < swapped.subres.size(); ++j) {
      if (((da - j) * (db - j)) % 2 != 0) {
        auto k = static_cast<size_t>(j);
        swapped.subres.r[k] = -swapped.subres.r[k];
        swapped.subres.lead[k] = -swapped.subres.lead[k];
      }
    }
    swapped.subres.da = da;
    swapped.subres.db = db;
    return swapped;
  }

  PrsResult out;
  PrsTranscript& t = out.transcript;
  t.s = {a, b};
  t.lead = {a.lc(), b.lc()};
  t.aux = {mpq_class(1)};
  t.deg = {da, db};
  t.drop = {0, da - db};
  for (size_t i = 1; !t.s[i].empty(); ++i) {
    const int e = t.drop[i];
    const mpq_class c_prev = t.aux[i - 1];
    t.aux.push_back(qpow(mpq_class(t.lead[i]), e) * qpow(c_prev, 1 - e));
    ExactPoly pr = prem(t.s[i - 1], t.s[i]);
    const mpz_class s_prev = i == 1 ? mpz_class(1) : t.lead[i - 1];
    const mpq_class ce = qpow(c_prev, e);
    mpz_class num = ce.get_den();
    if ((e + 1) % 2 != 0) num = -num;
    const mpz_class den = s_prev * ce.get_num();
    ExactPoly next = scale_exact(pr, num, den);
    const int dn = next.degree();
    t.lead.push_back(next.empty() ? mpz_class(0) : next.lc());
    t.deg.push_back(dn);
    t.drop.push_back(t.deg[i] - dn);
    t.s.push_back(std::move(next));
  }

  SubresultantSet& s = out.subres;
  s.da = da;
  s.db = db;
  s.r.assign(static_cast<size_t>(db), ExactPoly{});
  s.lead.assign(static_cast<size_t>(db), mpz_class(0));
  for (size_t k = 2; k < t.s.size(); ++k) {
    const int n_prev = t.deg[k - 1];
    const int n_k = t.deg[k];
    const int top = n_prev - 1;
    if (top >= 0 && top < db) s.r[static_cast<size_t>(top)] = t.s[k];
    if (!t.s[k].empty() && n_k < top) {
      const int e = n_prev - n_k;
      const mpq_class ce = qpow(t.aux[k - 1], e - 1);
      const mpz_class num = zpow(t.lead[k], e - 1) * ce.get_den();
      s.r[static_cast<size_t>(n_k)] = scale_exact(t.s[k], num, ce.get_num());
    }
  }
  for (int j = 0; j < db; ++j) s.lead[static_cast<size_t>(j)] = coeff(s.r[static_cast<size_t>(j)], j);
  return out;
}

SubresultantSet subresultants_exact(const ExactPoly& a, const ExactPoly& b) { return prs_general(a, b).subres; }

int64_t valuation(const Ring& ring, const mpz_class& x) { return ring.valuation(x); }

}  // namespace padicres
