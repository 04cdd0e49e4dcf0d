#pragma once

// The sharpness witness z/(1 - z^3)^{1/3}, built two independent ways (direct
// binomial expansion; the starlike recurrence driven by (1 + z^3)/(1 - z^3)),
// its inverse both by series reversion and from the closed form
// w (1 + w^3)^{-1/3}, and the exact-rational Hankel values of both.

#include <stdexcept>

#include "hankel/caratheodory.hpp"
#include "hankel/functionals.hpp"
#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace hankel {

namespace detail {

// z (1 - s z^3)^{-1/3} expanded exactly: coefficient of z^{3k+1} is
// s^k (1/3)(1/3 + 1)...(1/3 + k - 1)/k!  (rising factorial over k!).
inline TruncatedSeries<Rational> cube_binomial_series(int order, int sign) {
  auto f = TruncatedSeries<Rational>::zero(order);
  Rational coeff = 1;
  f[1] = coeff;
  for (int k = 1; 3 * k + 1 <= order; ++k) {
    coeff *= Rational(1 + 3 * (k - 1), 3 * k);  // (1/3 + (k-1)) / k
    if (sign < 0 && k % 2 == 1)
      f[3 * k + 1] = -coeff;
    else
      f[3 * k + 1] = coeff;
  }
  return f;
}

}  // namespace detail

// z/(1 - z^3)^{1/3} via the binomial series
inline TruncatedSeries<Rational> extremal_series(int order) {
  if (order < 5) throw std::invalid_argument("extremal series needs order >= 5");
  return detail::cube_binomial_series(order, +1);
}

// the same function via the starlike recurrence with p = (1 + z^3)/(1 - z^3)
inline TruncatedSeries<Rational> extremal_series_via_recurrence(int order) {
  if (order < 5) throw std::invalid_argument("extremal series needs order >= 5");
  auto p = TruncatedSeries<Rational>::zero(order);
  p[0] = 1;
  for (int n = 3; n <= order; n += 3) p[n] = 2;
  return starlike_from_p(p, 1, 2, order);
}

// the inverse in closed form: w (1 + w^3)^{-1/3}
inline TruncatedSeries<Rational> extremal_inverse_series(int order) {
  if (order < 5) throw std::invalid_argument("extremal series needs order >= 5");
  return detail::cube_binomial_series(order, -1);
}

struct ExtremalReport {
  int order = 0;
  SchlichtCoefficients<Rational> a{};
  InverseCoefficients<Rational> big_a{};
  Rational h3_of_f{};
  Rational h3_of_inverse{};
  bool construction_routes_agree = false;  // binomial vs recurrence
  bool inverse_routes_agree = false;       // reversion vs closed form vs coefficient map
  bool attains_one_ninth = false;          // |H3| = 1/9 for both functionals
};

inline ExtremalReport extremal_report(int order = 8) {
  if (order < 5) throw std::invalid_argument("extremal report needs order >= 5");
  ExtremalReport rep;
  rep.order = order;

  const auto f = extremal_series(order);
  const auto f_alt = extremal_series_via_recurrence(order);
  rep.construction_routes_agree = (f == f_alt);

  const auto finv = revert(f);
  const auto finv_closed = extremal_inverse_series(order);
  rep.a = coefficients_of(f);
  rep.big_a = inverse_from_direct(rep.a);
  const auto from_revert = inverse_coefficients_of(finv);
  rep.inverse_routes_agree =
      finv == finv_closed && rep.big_a.A2 == from_revert.A2 && rep.big_a.A3 == from_revert.A3 &&
      rep.big_a.A4 == from_revert.A4 && rep.big_a.A5 == from_revert.A5;

  rep.h3_of_f = h3_direct(rep.a);
  rep.h3_of_inverse = h3_inverse(rep.big_a);
  const Rational ninth(1, 9);
  rep.attains_one_ninth =
      abs(rep.h3_of_f) == ninth && abs(rep.h3_of_inverse) == ninth;
  return rep;
}

}  // namespace hankel
