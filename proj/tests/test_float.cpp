#include <doctest.h>

#include "padicres/errors.hpp"
#include "padicres/padic_float.hpp"
#include "padicres/rng.hpp"

using namespace padicres;

namespace {

const Ring z2(2);

PadicFloat f2(int64_t n, int64_t e, long s) { return PadicFloat::make(z2, n, e, mpz_class(s)); }

}  // namespace

TEST_SUITE("float") {
  TEST_CASE("addition truncates after the valuation") {
    const PadicFloat s = f2(4, 0, 1) + f2(4, 0, 15);
    CHECK(s.exponent() == 4);
    CHECK(s.significand() == 1);
    const PadicFloat t = f2(3, 0, 7) + f2(3, 0, 3);
    CHECK(t.exponent() == 1);
    CHECK(t.significand() == 5);
    CHECK(f2(5, 2, 3) + PadicFloat::zero(z2, 5) == f2(5, 2, 3));
    CHECK((f2(4, 0, 3) - f2(4, 0, 3)).is_zero());
  }

  TEST_CASE("division") {
    const PadicFloat x = f2(6, 3, 21);
    const PadicFloat one = x / x;
    CHECK(one.exponent() == 0);
    CHECK(one.significand() == 1);
    const PadicFloat third = f2(3, 0, 1) / f2(3, 0, 3);
    CHECK(third.significand() == 3);
    CHECK((PadicFloat::zero(z2, 3) / f2(3, 0, 3)).is_zero());
    CHECK_THROWS_AS(f2(3, 0, 1) / PadicFloat::zero(z2, 3), DivisionByZero);
  }

  TEST_CASE("inverse by Newton iteration") {
    const Ring z5(5);
    for (long u : {1L, 2L, 3L, 7L, 1234567L}) {
      for (int64_t n : {1, 2, 7, 40}) {
        const mpz_class inv = inverse_mod_power(z5, mpz_class(u) * 5 + 1, n);
        mpz_class prod = inv * (mpz_class(u) * 5 + 1);
        z5.reduce(prod, n);
        CHECK(prod == 1);
      }
    }
  }

  TEST_CASE("valuations add and truncation error is bounded") {
    Rng rng(9);
    const Ring z3(3);
    const int64_t n = 12;
    for (int t = 0; t < 400; ++t) {
      const mpz_class a = rng.below(mpz_class(1000000)) + 1;
      const mpz_class b = rng.below(mpz_class(1000000)) + 1;
      const PadicFloat fa = PadicFloat::from_integer(z3, n, a);
      const PadicFloat fb = PadicFloat::from_integer(z3, n, b);
      const PadicFloat prod = fa * fb;
      CHECK(prod.exponent() == fa.exponent() + fb.exponent());
      const PadicFloat sum = fa + fb;
      if (!sum.is_zero()) {
        CHECK(sum.exponent() >= std::min(fa.exponent(), fb.exponent()));
        if (fa.exponent() != fb.exponent()) CHECK(sum.exponent() == std::min(fa.exponent(), fb.exponent()));
      }
      // Relative error at most p^-N.
      for (const auto& [approx, exact] : {std::pair{prod, mpq_class(fa.value() * fb.value())},
                                           std::pair{fa / fb, mpq_class(fa.value() / fb.value())}}) {
        const mpq_class err = approx.value() - exact;
        if (err == 0) continue;
        mpz_class num = err.get_num(), den = err.get_den();
        const int64_t v_err = z3.remove_p(num) - z3.remove_p(den);
        CHECK(v_err >= approx.exponent() + n);
      }
    }
  }

  TEST_CASE("rendering") {
    CHECK(f2(4, 2, 5).str() == "2^2 * (1 0 1 0)_2");
    CHECK(f2(4, 2, 5).csv() == "2,5,4");
    CHECK(PadicFloat::zero(z2, 4).str() == "0");
    CHECK(PadicFloat::from_rational(z2, 3, mpq_class(3, 4)).exponent() == -2);
  }
}
