#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hankel/caratheodory.hpp"
#include "hankel/sampling.hpp"
#include "oracles.hpp"

using namespace hankel;
using C = std::complex<double>;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(CaratheodoryParams(0.0, {0, 0}, {0, 0}, {0, 0}));
  CHECK_NOTHROW(CaratheodoryParams(2.0, {1, 0}, {0, 1}, {-1, 0}));
  CHECK_THROWS_AS(CaratheodoryParams(-0.1, {0, 0}, {0, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(2.1, {0, 0}, {0, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(1.0, {1.1, 0}, {0, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(1.0, {0, 0}, {0.8, 0.8}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CaratheodoryParams(1.0, {0, 0}, {0, 0}, {0, -1.5}), std::invalid_argument);

  using RP = RationalCaratheodoryParams;
  using CR = ComplexRational;
  CHECK_NOTHROW(RP(Rational(2), CR{Rational(1), Rational(0)}, CR{}, CR{}));
  CHECK_THROWS_AS(RP(Rational(5, 2), CR{}, CR{}, CR{}), std::invalid_argument);
  CHECK_THROWS_AS(RP(Rational(1), CR{Rational(1), Rational(1)}, CR{}, CR{}),
                  std::invalid_argument);
}

TEST_CASE("coefficient parametrization at pinned corners") {
  // c1 = 2 forces c2 = c3 = c4 = 2 regardless of the disk parameters
  {
    const auto c = c_from_params(CaratheodoryParams(2.0, {0.3, 0.4}, {-0.5, 0.1}, {0, 0.9}));
    CHECK(std::abs(c[0] - C(2, 0)) < 1e-12);
    CHECK(std::abs(c[1] - C(2, 0)) < 1e-12);
    CHECK(std::abs(c[2] - C(2, 0)) < 1e-12);
  }
  // c1 = 0, delta = 0, eta = 1: (c2, c3, c4) = (0, 2, 0)
  {
    const auto c = c_from_params(CaratheodoryParams(0.0, {0, 0}, {1, 0}, {0, 0}));
    CHECK(std::abs(c[0]) < 1e-15);
    CHECK(std::abs(c[1] - C(2, 0)) < 1e-15);
    CHECK(std::abs(c[2]) < 1e-15);
  }
  // c1 = 0, delta = 1: (c2, c3, c4) = (2, 0, 2)
  {
    const auto c = c_from_params(CaratheodoryParams(0.0, {1, 0}, {0.2, 0.1}, {0.5, 0}));
    CHECK(std::abs(c[0] - C(2, 0)) < 1e-15);
    CHECK(std::abs(c[1]) < 1e-15);
    CHECK(std::abs(c[2] - C(2, 0)) < 1e-15);
  }
}

TEST_CASE("rational and floating parametrizations agree") {
  oracles::RationalSource src(501);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalCaratheodoryParams rp(src.c1_value(), src.disk_value(), src.disk_value(),
                                        src.disk_value());
    const CaratheodoryParams dp(to_double(rp.c1), to_complex_double(rp.delta),
                                to_complex_double(rp.eta), to_complex_double(rp.rho));
    const auto rc = c_from_params(rp);
    const auto dc = c_from_params(dp);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(to_complex_double(rc[static_cast<size_t>(k)]) -
                     dc[static_cast<size_t>(k)]) < 1e-12);
  }
}

TEST_CASE("parametrized coefficients are always realizable") {
  for (uint64_t i = 0; i < 400; ++i) {
    const auto p = sample_params(11, i, i % 2 == 0 ? DiskBias::uniform : DiskBias::boundary);
    const auto c = c_from_params(p);
    CHECK(std::abs(c[0]) <= 2.0 + 1e-12);
    CHECK(std::abs(c[1]) <= 2.0 + 1e-12);
    CHECK(std::abs(c[2]) <= 2.0 + 1e-12);
    CHECK(toeplitz_min_eigenvalue({C(p.c1, 0), c[0], c[1], c[2]}) >= -1e-9);
  }
}

TEST_CASE("herglotz measures validate and expand correctly") {
  CHECK_THROWS_AS(HerglotzMeasure(std::vector<HerglotzAtom>{}), std::invalid_argument);
  CHECK_THROWS_AS(HerglotzMeasure(std::vector<HerglotzAtom>{{0.5, {1, 0}}}),
                  std::invalid_argument);  // weights must sum to 1
  CHECK_THROWS_AS(HerglotzMeasure(std::vector<HerglotzAtom>{{1.0, {0.5, 0}}}),
                  std::invalid_argument);  // point off the circle
  CHECK_THROWS_AS(
      HerglotzMeasure(std::vector<HerglotzAtom>{{-0.2, {1, 0}}, {1.2, {-1, 0}}}),
      std::invalid_argument);  // negative weight

  // single atom at 1: c_n = 2 for every n
  const HerglotzMeasure point(std::vector<HerglotzAtom>{{1.0, {1, 0}}});
  const auto p = p_from_measure(point, 6);
  CHECK(p[0] == C(1, 0));
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(p[n] - C(2, 0)) < 1e-15);

  // atoms at +-1 with equal weight: odd coefficients vanish, even ones are 2
  const HerglotzMeasure pm(std::vector<HerglotzAtom>{{0.5, {1, 0}}, {0.5, {-1, 0}}});
  const auto q = p_from_measure(pm, 6);
  for (int n = 1; n <= 6; ++n) {
    if (n % 2 == 1)
      CHECK(std::abs(q[n]) < 1e-15);
    else
      CHECK(std::abs(q[n] - C(2, 0)) < 1e-15);
  }
}

TEST_CASE("measure coefficients satisfy the classical modulus bound") {
  for (uint64_t i = 0; i < 200; ++i) {
    const auto m = sample_measure(19, i, static_cast<int>(i % 5) + 1);
    const auto p = p_from_measure(m, 8);
    for (int n = 1; n <= 8; ++n) CHECK(std::abs(p[n]) <= 2.0 + 1e-12);
  }
}

TEST_CASE("starlike generator on pinned driving functions") {
  // p = 1: the equation zf' = (p+1)f/2 with alpha = 1/2 forces f = z
  auto one = TruncatedSeries<C>::zero(6);
  one[0] = 1.0;
  const auto id = starlike_from_p(one, 1, 2, 6);
  CHECK(std::abs(id[1] - C(1, 0)) < 1e-15);
  for (int n = 2; n <= 6; ++n) CHECK(std::abs(id[n]) < 1e-15);

  // point mass at 1 (c_n = 2 for all n) generates z/(1 - z): a_n = 1
  const HerglotzMeasure point(std::vector<HerglotzAtom>{{1.0, {1, 0}}});
  const auto f = starlike_from_p(p_from_measure(point, 7), 1, 2, 8);
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(f[n] - C(1, 0)) < 1e-12);

  // alpha = 0 with the same p generates the half-plane extremal z/(1-z)^2
  const auto k = starlike_from_p(p_from_measure(point, 7), 0, 1, 8);
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(k[n] - C(n, 0)) < 1e-12);
}

TEST_CASE("starlike generator validates its inputs") {
  auto p = TruncatedSeries<C>::zero(6);
  p[0] = 1.0;
  CHECK_THROWS_AS(starlike_from_p(p, 1, 0, 6), std::invalid_argument);
  CHECK_THROWS_AS(starlike_from_p(p, 2, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(starlike_from_p(p, -1, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(starlike_from_p(p, 1, 2, 8), std::invalid_argument);  // p too short
  p[0] = 0.5;
  CHECK_THROWS_AS(starlike_from_p(p, 1, 2, 6), std::invalid_argument);
}

TEST_CASE("membership check accepts z/(1-z) and rejects z/(1-z)^2 at order 1/2") {
  const auto half_line = [](C z) { return z / (1.0 - z); };
  const auto half_line_d = [](C z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
  const auto rep = verify_membership(half_line, half_line_d, 0.5);
  CHECK(rep.pass);
  CHECK(rep.min_re > 0.5 - 1e-7);

  const auto koebe = [](C z) { return z / ((1.0 - z) * (1.0 - z)); };
  const auto koebe_d = [](C z) { return (1.0 + z) / ((1.0 - z) * (1.0 - z) * (1.0 - z)); };
  const auto rej = verify_membership(koebe, koebe_d, 0.5);
  CHECK_FALSE(rej.pass);
  CHECK(rej.min_re < 0.5);
  CHECK(rej.samples == 7 * 2048);
}

TEST_CASE("membership grid validation") {
  const auto f = [](C z) { return z; };
  const auto fd = [](C) { return C(1, 0); };
  MembershipGrid g;
  g.angular_samples = 0;
  CHECK_THROWS_AS(verify_membership(f, fd, 0.5, g), std::invalid_argument);
  g = MembershipGrid{};
  g.radii = {1.5};
  CHECK_THROWS_AS(verify_membership(f, fd, 0.5, g), std::invalid_argument);
}

TEST_CASE("toeplitz realizability oracle on pinned sections") {
  // c = 0: T = 2I, minimum eigenvalue 2
  CHECK(toeplitz_min_eigenvalue({C(0, 0), C(0, 0), C(0, 0), C(0, 0)}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // point mass at 1: rank-one section, minimum eigenvalue 0
  CHECK(std::abs(toeplitz_min_eigenvalue({C(2, 0), C(2, 0), C(2, 0), C(2, 0)})) < 1e-12);
  CHECK(caratheodory_realizable({C(2, 0), C(2, 0), C(2, 0), C(2, 0)}));
  // c1 beyond 2 is never realizable
  CHECK_FALSE(caratheodory_realizable({C(2.5, 0), C(0, 0), C(0, 0), C(0, 0)}));
  CHECK(toeplitz_min_eigenvalue({C(2.5, 0), C(0, 0), C(0, 0), C(0, 0)}) < -0.1);
}
