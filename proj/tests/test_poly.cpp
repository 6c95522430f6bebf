#include <doctest.h>

#include <sstream>

#include "padicres/errors.hpp"
#include "padicres/poly.hpp"
#include "padicres/poly_text.hpp"
#include "padicres/rng.hpp"

using namespace padicres;

namespace {

const Ring z2(2);

ExactPoly ep(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(std::move(v));
}

ExactPoly random_exact(Rng& rng, int deg, long bound) {
  std::vector<mpz_class> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng.below(static_cast<uint64_t>(2 * bound + 1))) - bound);
  if (c.back() == 0) c.back() = 1;
  return ExactPoly(std::move(c));
}

RationalPoly to_rational(const ExactPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RationalPoly(std::move(c));
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("euclidean division over the rationals") {
    const RationalPoly a = to_rational(ep({-1, 0, 1}));
    const RationalPoly b = to_rational(ep({-1, 1}));
    const auto [q, r] = euclid_divrem(a, b);
    CHECK(q == to_rational(ep({1, 1})));
    CHECK(r.empty());
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
      const RationalPoly x = to_rational(random_exact(rng, 6, 50));
      const RationalPoly y = to_rational(random_exact(rng, 3, 50));
      const auto [qq, rr] = euclid_divrem(x, y);
      CHECK(qq * y + rr == x);
      CHECK(rr.degree() < y.degree());
    }
  }

  TEST_CASE("pseudo-remainder") {
    // 4 (X^2 mod (2X + 1)) = 1.
    CHECK(prem(ep({0, 0, 1}), ep({1, 2})) == ep({1}));
    const ExactPoly a = ep({5, 3, 2, 1});
    CHECK(to_rational(prem(a, ep({4, 1}))) == to_rational(a) % to_rational(ep({4, 1})));
    CHECK(prem(ep({1, 2, 1}), ep({4, 5, 1})) == ep({-3, -3}));
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      const ExactPoly x = random_exact(rng, 2 + static_cast<int>(rng.below(7)), 100);
      const ExactPoly y = random_exact(rng, static_cast<int>(rng.below(static_cast<uint64_t>(x.degree() + 1))), 100);
      const ExactPoly p = prem(x, y);  // integral by construction of the type
      RationalPoly expect = to_rational(x) % to_rational(y);
      mpq_class scale = 1;
      for (int k = 0; k < x.degree() - y.degree() + 1; ++k) scale *= mpq_class(y.lc());
      std::vector<mpq_class> c;
      for (const auto& v : expect.coeffs()) c.push_back(v * scale);
      CHECK(to_rational(p) == RationalPoly(std::move(c)));
    }
  }

  TEST_CASE("monic divisor and equal degrees") {
    const ExactPoly a = ep({3, 1, 4, 1});
    const ExactPoly b = ep({2, 7, 1, 1});
    CHECK(prem(a, b) == a - b);
    const RationalPoly ra = to_rational(ep({3, 1, 4, 1, 5, 1}));
    CHECK(to_rational(prem(ep({3, 1, 4, 1, 5, 1}), b)) == ra % to_rational(b));
  }

  TEST_CASE("ball polynomial division matches scalar steps") {
    const BallPoly a = parse_ball_poly(z2, "X^3 + (5 + O(2^6))*X^2 + (3 + O(2^4))*X + (1 + O(2^5))");
    const BallPoly b = parse_ball_poly(z2, "(6 + O(2^5))*X + (1 + O(2^5))");
    const auto [q, r] = euclid_divrem(a, b);
    // Hand expansion of the long division with the same ball operations.
    const Ball lc = b[1];
    Ball c2 = a[3] / lc;
    Ball t2 = a[2] - c2 * b[0];
    Ball c1 = t2 / lc;
    Ball t1 = a[1] - c1 * b[0];
    Ball c0 = t1 / lc;
    Ball rem = a[0] - c0 * b[0];
    CHECK(q[2] == c2);
    CHECK(q[1] == c1);
    CHECK(q[0] == c0);
    CHECK(r[0] == rem);
    CHECK_THROWS_AS(euclid_divrem(a, parse_ball_poly(z2, "(O(2^3))*X + 1")), LeadingCoefficientUnknownZero);
  }

  TEST_CASE("gauss valuation and flattening") {
    CHECK(gauss_valuation(ep({6, 4}), z2) == 1);
    CHECK(gauss_valuation(ep({6, 4, 1}), z2) == 0);
    CHECK_THROWS_AS(gauss_valuation(ExactPoly{}, z2), ZeroPolynomial);
    const BallPoly r2 = parse_ball_poly(z2, "(5 + O(2^5))*X^2 + (20 + O(2^5))*X + O(2^5)");
    CHECK(gauss_valuation(r2) == 0);
    CHECK(r2[2].valuation() == 0);

    const BallPoly mixed = parse_ball_poly(z2, "(13 + O(2^5))*X + (7 + O(2^3))");
    const FlatPoly f = flatten(mixed);
    CHECK(f.abs_prec() == 3);
    CHECK(f.balls()[1] == Ball(z2, 5, 3));
    CHECK(flatten(f.balls()) == f);
    CHECK(flatten(parse_ball_poly(z2, "(13 + O(2^5))*X + (7 + O(2^5))")).abs_prec() == 5);
  }

  TEST_CASE("text format round trip") {
    const std::string s = "X^5 + (27 + O(2^5))*X^4 + (11 + O(2^5))*X^3 + (5 + O(2^5))*X^2 + (18 + O(2^5))*X + (25 + O(2^5))";
    const BallPoly p = parse_ball_poly(z2, s);
    CHECK(p.degree() == 5);
    CHECK(p[5].is_exact());
    CHECK(to_string(p) == s);
    const BallPoly gaps = parse_ball_poly(z2, "X^3 + (1 + O(2^4))");
    CHECK(gaps[1].is_exact());
    CHECK(gaps[1].is_known_zero());
    CHECK(to_string(parse_exact_poly("X^2 - 3*X + 7")) == "X^2 - 3*X + 7");
    CHECK_THROWS_AS(parse_ball_poly(z2, "X^2 + + 1"), ParseError);
  }

  TEST_CASE("fixtures") {
    std::istringstream in("# comment\np = 3\nA = X^2 + (1 + O(3^4))  # trailing\nB = X^2 + 2\n");
    const Fixture fx = parse_fixture(in);
    CHECK(fx.p == 3);
    CHECK(fx.ball_poly("A")[0] == Ball(Ring(3), 1, 4));
    CHECK_THROWS(fx.at("C"));
    const Fixture ex = load_fixture(std::string(PADICRES_TEST_DATA) + "/quintic_pair.txt");
    CHECK(ex.ball_poly("B").degree() == 5);
  }

  TEST_CASE("conversions") {
    const ExactPoly a = ep({-3, 5, 1});
    const BallPoly b = to_balls_monic(a, z2, 4);
    CHECK(b[0] == Ball(z2, 13, 4));
    CHECK(b[2].is_exact());
    CHECK(lift_to_integers(b) == ep({13, 5, 1}));
    CHECK(reduce_mod(a, mpz_class(4)) == ep({1, 1, 1}));
    const FloatPoly f = to_floats(ep({12, 1}), z2, 8);
    CHECK(f[0].exponent() == 2);
  }
}
