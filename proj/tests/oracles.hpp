#pragma once

// Shared test oracles. Everything here is deliberately written through a
// different algebraic route than the code under test:
//   - inverse coefficients via the Lagrange inversion formula
//     A_n = (1/n) [u^{n-1}] (u / f(u))^n, built from a series reciprocal,
//     instead of the composition identity that `revert` solves;
//   - seeded small-rational generators so exact-arithmetic properties can be
//     exercised over reproducible pseudo-random inputs.

#include <cstdint>
#include <vector>

#include "hankel/sampling.hpp"
#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace oracles {

// 1 / q for a series with constant term 1, solved order-by-order.
inline hankel::TruncatedSeries<hankel::Rational> reciprocal(
    const hankel::TruncatedSeries<hankel::Rational>& q) {
  if (q[0] != hankel::Rational(1))
    throw std::invalid_argument("reciprocal oracle expects constant term 1");
  auto r = hankel::TruncatedSeries<hankel::Rational>::zero(q.order());
  r[0] = 1;
  for (int m = 1; m <= q.order(); ++m) {
    hankel::Rational acc = 0;
    for (int k = 1; k <= m; ++k) acc += q[k] * r[m - k];
    r[m] = -acc;
  }
  return r;
}

// A_n = (1/n) [u^{n-1}] (u/f(u))^n for a normalized f.
inline hankel::Rational lagrange_inverse_coefficient(
    const hankel::TruncatedSeries<hankel::Rational>& f, int n) {
  if (!f.is_normalized())
    throw std::invalid_argument("lagrange oracle expects a normalized series");
  if (n < 1 || n > f.order())
    throw std::invalid_argument("lagrange oracle: n out of range");
  // f(u)/u as a series in u with constant term 1
  auto q = hankel::TruncatedSeries<hankel::Rational>::zero(f.order());
  for (int k = 0; k < f.order(); ++k) q[k] = f[k + 1];
  const auto base = reciprocal(q);  // u/f(u)
  auto pw = hankel::TruncatedSeries<hankel::Rational>::zero(f.order());
  pw[0] = 1;
  for (int i = 0; i < n; ++i) pw = mul(pw, base);
  return pw[n - 1] / n;
}

// Deterministic small rationals: numerators in [-range, range], denominators
// in [1, den_range]. Reuses the library splitmix64 so draws are reproducible.
class RationalSource {
 public:
  explicit RationalSource(uint64_t seed) : state_(seed) {}

  uint64_t bits() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return hankel::splitmix64(state_);
  }

  hankel::Rational value(int range = 12, int den_range = 6) {
    const auto span = static_cast<uint64_t>(2 * range + 1);
    const auto num = static_cast<long long>(bits() % span) - range;
    const auto den = static_cast<long long>(bits() % static_cast<uint64_t>(den_range)) + 1;
    return hankel::Rational(num, den);
  }

  // complex value with |re|, |im| <= 1/2, so the modulus never exceeds 1
  hankel::ComplexRational disk_value() {
    const auto part = [&] {
      const auto num = static_cast<long long>(bits() % 13) - 6;  // [-6, 6]
      return hankel::Rational(num, 12);
    };
    return hankel::ComplexRational{part(), part()};
  }

  // c1 in [0, 2] as a small rational
  hankel::Rational c1_value() {
    const auto num = static_cast<long long>(bits() % 25);  // [0, 24]
    return hankel::Rational(num, 12);
  }

  // normalized series with random small-rational tail coefficients
  hankel::TruncatedSeries<hankel::Rational> normalized_series(int order) {
    auto f = hankel::TruncatedSeries<hankel::Rational>::identity(order);
    for (int k = 2; k <= order; ++k) f[k] = value();
    return f;
  }

 private:
  uint64_t state_;
};

}  // namespace oracles
