#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "padicres/exact_oracle.hpp"
#include "padicres/experiments.hpp"
#include "padicres/poly_text.hpp"
#include "padicres/rng.hpp"

using namespace padicres;

namespace {

ExactPoly ep(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(std::move(v));
}

// Leibniz expansion, independent of the elimination code.
mpz_class leibniz(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

ExactPoly random_poly(Rng& rng, int deg, long bound, bool allow_zero_lead) {
  std::vector<mpz_class> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng.below(static_cast<uint64_t>(2 * bound + 1))) - bound);
  if (!allow_zero_lead && c.back() == 0) c.back() = 1;
  return ExactPoly(std::move(c));
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("small resultants") {
    CHECK(resultant(ep({-1, 1}), ep({1, 1}), 1, 1) == 2);
    // Formal degree 2 with a vanishing leading coefficient.
    CHECK(resultant(ep({-1, 1}), ep({1, 1}), 2, 1) == -2);
    const ExactPoly a = ep({3, 0, 2, 1});
    CHECK(resultant(a, a, 3, 3) == 0);
    // Res(X^2 - 2, X - 1) = (1)^2 - 2 = -1 with the (A, B) ordering.
    CHECK(resultant(ep({-2, 0, 1}), ep({-1, 1}), 2, 1) == -1);
  }

  TEST_CASE("fraction-free determinant against the Leibniz formula") {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + static_cast<int>(rng.below(6));
      IntMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.below(21)) - 10;
      if (t % 7 == 0) {
        for (int j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 3;
      }
      CHECK(m.determinant() == leibniz(m));
    }
  }

  TEST_CASE("subresultants of a polynomial with itself vanish") {
    const ExactPoly a = ep({5, -2, 0, 3, 1});
    const auto s = subresultants_minors(a, a, 4, 4);
    for (int j = 0; j < 4; ++j) CHECK(s.r[static_cast<size_t>(j)].empty());
  }

  TEST_CASE("cofactor identity A U_j + B V_j = R_j") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
      const int da = 1 + static_cast<int>(rng.below(6));
      const int db = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(da)));
      const ExactPoly a = random_poly(rng, da, 9, false);
      const ExactPoly b = random_poly(rng, db, 9, false);
      const auto s = subresultants_minors(a, b, da, db);
      for (int j = 0; j < db; ++j) {
        const auto k = static_cast<size_t>(j);
        CHECK(a * s.u[k] + b * s.v[k] == s.r[k]);
        CHECK(s.r[k].degree() <= j);
        CHECK(s.u[k].degree() < db - j);
        CHECK(s.v[k].degree() < da - j);
      }
      CHECK(s.r[0] == (resultant(a, b, da, db) == 0 ? ExactPoly{} : ExactPoly({resultant(a, b, da, db)})));
    }
  }

  TEST_CASE("minors and pseudo-remainder sequence agree, normal and abnormal") {
    Rng rng(29);
    int abnormal = 0;
    for (int t = 0; t < 500; ++t) {
      const int da = 1 + static_cast<int>(rng.below(8));
      const int db = 1 + static_cast<int>(rng.below(8));
      // Tiny coefficients make degree jumps common.
      const long bound = t % 2 ? 1 : 40;
      const ExactPoly a = random_poly(rng, da, bound, false);
      const ExactPoly b = random_poly(rng, db, bound, false);
      const auto m = subresultants_minors(a, b, da, db);
      const auto g = prs_general(a, b);
      const auto& deg = g.transcript.deg;
      for (size_t i = 2; i < deg.size(); ++i)
        if (deg[i] >= 0 && deg[i] < deg[i - 1] - 1) ++abnormal;
      REQUIRE(g.subres.size() == m.size());
      for (int j = 0; j < m.size(); ++j) CHECK(g.subres.r[static_cast<size_t>(j)] == m.r[static_cast<size_t>(j)]);
    }
    CHECK(abnormal > 20);
  }

  TEST_CASE("abnormal instance X^4, X^2") {
    const ExactPoly a = ep({0, 0, 0, 0, 1});
    const ExactPoly b = ep({0, 0, 1});
    const auto g = prs_general(a, b);
    const auto m = subresultants_minors(a, b, 4, 2);
    CHECK(g.subres.r[1].empty());
    CHECK(g.subres.r[0] == m.r[0]);
    CHECK(g.subres.r[1] == m.r[1]);
  }

  TEST_CASE("normal case indexing R_j = S_{d-j}") {
    Rng rng(31);
    const Ring z2(2);
    for (int t = 0; t < 50; ++t) {
      const ExactPoly a = random_monic(z2, 5, 10, rng);
      const ExactPoly b = random_monic(z2, 5, 10, rng);
      const auto g = prs_general(a, b);
      bool normal = true;
      for (int j = 0; j < 5; ++j)
        if (g.subres.lead[static_cast<size_t>(j)] == 0) normal = false;
      if (!normal) continue;
      for (int j = 0; j < 5; ++j) CHECK(g.subres.r[static_cast<size_t>(j)] == g.transcript.s[static_cast<size_t>(5 - j + 1)]);
      // The first remainder is B - A up to sign.
      const ExactPoly diff = b - a;
      CHECK((g.transcript.s[2] == diff || g.transcript.s[2] == -diff));
    }
  }

  TEST_CASE("functoriality: reduction commutes with subresultants") {
    Rng rng(37);
    for (unsigned long p : {2UL, 3UL, 5UL}) {
      const Ring ring(p);
      for (int t = 0; t < 70; ++t) {
        const int d = 2 + static_cast<int>(rng.below(5));
        const int64_t n = 1 + static_cast<int64_t>(rng.below(8));
        const ExactPoly a = random_monic(ring, d, 12, rng);
        const ExactPoly b = random_monic(ring, d, 12, rng);
        const auto exact = subresultants_minors(a, b, d, d);
        const ExactPoly ar = reduce_mod(a, ring.power(n));
        const ExactPoly br = reduce_mod(b, ring.power(n));
        for (int j = 0; j < d; ++j) {
          mpz_class want = exact.lead[static_cast<size_t>(j)];
          ring.reduce(want, n);
          CHECK(sylvester_truncated(ar, br, d, d, j).determinant_mod(ring, n) == want);
        }
      }
    }
  }

  TEST_CASE("worked example over Z_2") {
    const Fixture f22 = load_fixture(std::string(PADICRES_TEST_DATA) + "/quintic_pair.txt");
    const Fixture f25 = load_fixture(std::string(PADICRES_TEST_DATA) + "/quintic_pair_a2_7.txt");
    const auto s22 = subresultants_exact(lift_to_integers(f22.ball_poly("A")), lift_to_integers(f22.ball_poly("B")));
    const auto s25 = subresultants_exact(lift_to_integers(f25.ball_poly("A")), lift_to_integers(f25.ball_poly("B")));
    // R_4 = B - A: its X^2 coefficient is 12 - 5 = 7 on the first input.
    CHECK(reduce_mod(s22.r[4], mpz_class(32)) == ep({17, 17, 7, 14, 29}));
    CHECK(reduce_mod(s25.r[4], mpz_class(32)) == ep({17, 17, 5, 14, 29}));
    mpz_class r0 = s25.lead[0];
    Ring(2).reduce(r0, 5);
    CHECK(r0 == 9);
  }
}
