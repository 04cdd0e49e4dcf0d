#pragma once

// Truncated formal power series: the algebraic substrate for every coefficient
// computation. All operations stay at the common truncation order; nothing is
// read past the order or silently extended.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/scalar.hpp"

namespace hankel {

template <class S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("truncated series needs at least the constant term");
  }

  static TruncatedSeries zero(int order) {
    check_order(order);
    return TruncatedSeries(std::vector<S>(static_cast<size_t>(order) + 1, S{}));
  }

  // the series z, padded with zeros to the requested order
  static TruncatedSeries identity(int order) {
    check_order(order);
    auto s = zero(order);
    s.coeffs_[1] = from_int<S>(1);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const S& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  S& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }

  const std::vector<S>& coeffs() const { return coeffs_; }

  // class-A shape: c_0 = 0, c_1 = 1
  bool is_normalized() const {
    return order() >= 1 && coeffs_[0] == S{} && coeffs_[1] == from_int<S>(1);
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  static void check_order(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
  }

  std::vector<S> coeffs_;
};

namespace detail {
template <class S>
void require_same_order(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b,
                        const char* what) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(what) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
}
}  // namespace detail

template <class S>
TruncatedSeries<S> operator+(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b, "series add");
  auto r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] += b[k];
  return r;
}

template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b, "series subtract");
  auto r = a;
  for (int k = 0; k <= a.order(); ++k) r[k] -= b[k];
  return r;
}

// Cauchy product truncated at the common order.
template <class S>
TruncatedSeries<S> mul(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  detail::require_same_order(a, b, "series mul");
  const int n = a.order();
  auto r = TruncatedSeries<S>::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == S{}) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Term-wise derivative, re-padded with a trailing zero so series keep a
// uniform shape through pipelines.
template <class S>
TruncatedSeries<S> derive(const TruncatedSeries<S>& a) {
  const int n = a.order();
  auto r = TruncatedSeries<S>::zero(n);
  for (int k = 1; k <= n; ++k) r[k - 1] = from_int<S>(k) * a[k];
  return r;
}

// Explicit order change: pads with zeros or drops tail coefficients. The only
// sanctioned way to move between truncation orders.
template <class S>
TruncatedSeries<S> resized(const TruncatedSeries<S>& a, int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  auto r = TruncatedSeries<S>::zero(order);
  for (int k = 0; k <= std::min(order, a.order()); ++k) r[k] = a[k];
  return r;
}

// f(g(z)) truncated at the common order; requires g(0) = 0 so the truncation
// is exact order-by-order (Horner over truncated products).
template <class S>
TruncatedSeries<S> compose(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  detail::require_same_order(f, g, "series compose");
  if (g[0] != S{})
    throw std::invalid_argument("series compose: inner series must have zero constant term");
  const int n = f.order();
  auto acc = TruncatedSeries<S>::zero(n);
  acc[0] = f[n];
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, g);
    acc[0] += f[k];
  }
  return acc;
}

// Compositional inverse of a normalized series: returns g with
// f(g(w)) = w + O(w^{N+1}), solved order-by-order from the composition
// identity. (The closed-form Lagrange inversion lives in test code as the
// independent oracle.)
template <class S>
TruncatedSeries<S> revert(const TruncatedSeries<S>& f) {
  if (!f.is_normalized())
    throw std::invalid_argument("series revert: input must be normalized (c0 = 0, c1 = 1)");
  const int n = f.order();
  auto g = TruncatedSeries<S>::identity(n);
  for (int m = 2; m <= n; ++m) {
    // with g known through order m-1, coefficient m of f(g) is linear in g[m]
    g[m] = -compose(f, g)[m];
  }
  return g;
}

// Horner evaluation at a point of the same scalar kind.
template <class S>
S evaluate(const TruncatedSeries<S>& a, const S& z) {
  S acc = a[a.order()];
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

}  // namespace hankel
