#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "hankel/series.hpp"
#include "oracles.hpp"

using hankel::Rational;
using hankel::TruncatedSeries;
using RS = TruncatedSeries<Rational>;

TEST_CASE("construction and basic accessors") {
  auto z = RS::identity(5);
  CHECK(z.order() == 5);
  CHECK(z[0] == Rational(0));
  CHECK(z[1] == Rational(1));
  CHECK(z[5] == Rational(0));
  CHECK(z.is_normalized());

  auto s = RS::zero(3);
  CHECK_FALSE(s.is_normalized());
  s[1] = 1;
  CHECK(s.is_normalized());

  CHECK_THROWS_AS(RS::zero(0), std::invalid_argument);
  CHECK_THROWS_AS(RS::identity(-1), std::invalid_argument);
  CHECK_THROWS_AS(RS(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("ring operations against hand-expanded products") {
  // (z + z^2)^2 = z^2 + 2 z^3 + z^4
  auto f = RS::zero(4);
  f[1] = 1;
  f[2] = 1;
  const auto sq = mul(f, f);
  CHECK(sq[0] == Rational(0));
  CHECK(sq[1] == Rational(0));
  CHECK(sq[2] == Rational(1));
  CHECK(sq[3] == Rational(2));
  CHECK(sq[4] == Rational(1));

  const auto sum = f + f;
  CHECK(sum[1] == Rational(2));
  const auto diff = sum - f;
  CHECK(diff == f);

  auto other = RS::zero(6);
  CHECK_THROWS_AS(f + other, std::invalid_argument);
  CHECK_THROWS_AS(mul(f, other), std::invalid_argument);
}

TEST_CASE("derivative and resize") {
  // d/dz (z + 3 z^3) = 1 + 9 z^2, shape preserved with trailing zero
  auto f = RS::zero(3);
  f[1] = 1;
  f[3] = 3;
  const auto d = derive(f);
  CHECK(d.order() == 3);
  CHECK(d[0] == Rational(1));
  CHECK(d[1] == Rational(0));
  CHECK(d[2] == Rational(9));
  CHECK(d[3] == Rational(0));

  const auto longer = resized(f, 6);
  CHECK(longer.order() == 6);
  CHECK(longer[3] == Rational(3));
  CHECK(longer[6] == Rational(0));
  const auto shorter = resized(f, 2);
  CHECK(shorter.order() == 2);
  CHECK(shorter[1] == Rational(1));
  CHECK_THROWS_AS(resized(f, 0), std::invalid_argument);
}

TEST_CASE("composition matches direct expansion") {
  // f = z + z^2, g = z + 2 z^2: f(g) = g + g^2 = z + 3 z^2 + 4 z^3 + 4 z^4
  auto f = RS::zero(4);
  f[1] = 1;
  f[2] = 1;
  auto g = RS::zero(4);
  g[1] = 1;
  g[2] = 2;
  const auto h = compose(f, g);
  CHECK(h[1] == Rational(1));
  CHECK(h[2] == Rational(3));
  CHECK(h[3] == Rational(4));
  CHECK(h[4] == Rational(4));

  auto bad = g;
  bad[0] = 1;
  CHECK_THROWS_AS(compose(f, bad), std::invalid_argument);
}

TEST_CASE("evaluation is plain Horner") {
  auto f = RS::zero(3);
  f[0] = 2;
  f[1] = 1;
  f[3] = 4;
  // f(1/2) = 2 + 1/2 + 4/8 = 3
  CHECK(evaluate(f, Rational(1, 2)) == Rational(3));

  auto fd = TruncatedSeries<double>::zero(2);
  fd[0] = 1.0;
  fd[2] = 1.0;
  CHECK(evaluate(fd, 2.0) == doctest::Approx(5.0));
}

TEST_CASE("reversion of z/(1-z)^2 produces alternating Catalan numbers") {
  // k(z) = sum n z^n; the inverse has |coefficient n| = (2n)!/(n!(n+1)!)
  const int order = 8;
  auto k = RS::zero(order);
  for (int n = 1; n <= order; ++n) k[n] = n;
  const auto g = revert(k);
  const long expected[] = {2, 5, 14, 42, 132, 429, 1430};
  for (int n = 2; n <= order; ++n) {
    const Rational want = (n % 2 == 0) ? Rational(-expected[n - 2]) : Rational(expected[n - 2]);
    CHECK(g[n] == want);
  }
}

TEST_CASE("reversion round-trips through composition") {
  oracles::RationalSource src(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = src.normalized_series(8);
    const auto g = revert(f);
    CHECK(compose(f, g) == RS::identity(8));
    CHECK(compose(g, f) == RS::identity(8));
  }
}

TEST_CASE("reversion agrees with the Lagrange inversion oracle") {
  oracles::RationalSource src(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = src.normalized_series(7);
    const auto g = revert(f);
    for (int n = 2; n <= 7; ++n)
      CHECK(g[n] == oracles::lagrange_inverse_coefficient(f, n));
  }
}

TEST_CASE("reversion rejects non-normalized input") {
  auto f = RS::zero(4);
  f[1] = 2;
  CHECK_THROWS_AS(revert(f), std::invalid_argument);
  f[0] = 1;
  f[1] = 1;
  CHECK_THROWS_AS(revert(f), std::invalid_argument);
}
