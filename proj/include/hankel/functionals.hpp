#pragma once

// Coefficient functionals: direct and inverse coefficient maps, general Hankel
// determinants, and the degree-six polynomial giving 9216*H3(1) of the inverse
// in terms of c1..c4. Everything is a pure algebraic map over any scalar kind;
// the exact-rational instantiation is the authority in tests.

#include <stdexcept>
#include <vector>

#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace hankel {

template <class S>
struct SchlichtCoefficients {
  S a2{}, a3{}, a4{}, a5{};  // a1 = 1 implicit
};

template <class S>
struct InverseCoefficients {
  S A2{}, A3{}, A4{}, A5{};  // A1 = 1 implicit
};

// a2..a5 of f from c1..c4 of the driving positive-real-part function: the
// order-1/2 starlike recurrence zf' = (p+1)f/2 solved in closed form.
template <class S>
SchlichtCoefficients<S> a_from_c(const S& c1, const S& c2, const S& c3, const S& c4) {
  SchlichtCoefficients<S> a;
  a.a2 = c1 * from_ratio<S>(1, 2);
  a.a3 = (from_int<S>(2) * c2 + c1 * c1) * from_ratio<S>(1, 8);
  a.a4 = (from_int<S>(8) * c3 + from_int<S>(6) * c1 * c2 + c1 * c1 * c1) * from_ratio<S>(1, 48);
  a.a5 = (from_int<S>(48) * c4 + from_int<S>(32) * c1 * c3 + from_int<S>(12) * c2 * c2 +
          from_int<S>(12) * c1 * c1 * c2 + c1 * c1 * c1 * c1) *
         from_ratio<S>(1, 384);
  return a;
}

// A2..A5 from a2..a5 by comparing coefficients in f(f^{-1}(w)) = w.
template <class S>
InverseCoefficients<S> inverse_from_direct(const SchlichtCoefficients<S>& a) {
  InverseCoefficients<S> r;
  const S& a2 = a.a2;
  const S& a3 = a.a3;
  const S& a4 = a.a4;
  const S& a5 = a.a5;
  r.A2 = -a2;
  r.A3 = from_int<S>(2) * a2 * a2 - a3;
  r.A4 = from_int<S>(5) * a2 * a3 - from_int<S>(5) * a2 * a2 * a2 - a4;
  r.A5 = from_int<S>(14) * a2 * a2 * a2 * a2 - from_int<S>(21) * a3 * a2 * a2 +
         from_int<S>(6) * a2 * a4 + from_int<S>(3) * a3 * a3 - a5;
  return r;
}

// A2..A5 straight from c1..c4 (composition of the two maps above, expanded).
template <class S>
InverseCoefficients<S> A_from_c(const S& c1, const S& c2, const S& c3, const S& c4) {
  InverseCoefficients<S> r;
  r.A2 = -c1 * from_ratio<S>(1, 2);
  r.A3 = from_ratio<S>(3, 8) * c1 * c1 - from_ratio<S>(1, 4) * c2;
  r.A4 = -from_ratio<S>(1, 3) * c1 * c1 * c1 + from_ratio<S>(1, 2) * c1 * c2 -
         from_ratio<S>(1, 6) * c3;
  r.A5 = from_ratio<S>(125, 384) * c1 * c1 * c1 * c1 - from_ratio<S>(25, 32) * c1 * c1 * c2 +
         from_ratio<S>(5, 32) * c2 * c2 + from_ratio<S>(5, 12) * c1 * c3 -
         from_ratio<S>(1, 8) * c4;
  return r;
}

namespace detail {

// Laplace cofactor expansion on a dense dim x dim matrix (row-major). The
// determinants here are tiny (q <= 6), so O(q!) is perfectly fine and keeps
// the arithmetic division-free for exact scalars.
template <class S>
S det_laplace(const std::vector<S>& m, int dim) {
  if (dim == 1) return m[0];
  if (dim == 2) return m[0] * m[3] - m[1] * m[2];
  S acc{};
  std::vector<S> minor(static_cast<size_t>(dim - 1) * (dim - 1));
  for (int col = 0; col < dim; ++col) {
    if (m[static_cast<size_t>(col)] == S{}) continue;
    size_t w = 0;
    for (int i = 1; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (j != col) minor[w++] = m[static_cast<size_t>(i) * dim + j];
    const S term = m[static_cast<size_t>(col)] * det_laplace(minor, dim - 1);
    if (col % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

}  // namespace detail

// q x q Hankel matrix [a_{n+i+j}] from a coefficient list with a1 at index 0.
template <class S>
std::vector<S> hankel_matrix(const std::vector<S>& coeffs, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("hankel_det: q and n must be >= 1");
  const int top = n + 2 * (q - 1);  // largest coefficient subscript used
  if (static_cast<int>(coeffs.size()) < top)
    throw std::invalid_argument("hankel_det: need coefficients a1..a" + std::to_string(top) +
                                ", got " + std::to_string(coeffs.size()));
  std::vector<S> m(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      m[static_cast<size_t>(i) * q + j] = coeffs[static_cast<size_t>(n + i + j) - 1];
  return m;
}

template <class S>
S hankel_det(const std::vector<S>& coeffs, int q, int n) {
  return detail::det_laplace(hankel_matrix(coeffs, q, n), q);
}

// 9216*H3(1) of the inverse as a polynomial in c1..c4, divided back by 9216.
template <class S>
S h3_inverse_poly(const S& c1, const S& c2, const S& c3, const S& c4) {
  const S c1_2 = c1 * c1;
  const S c1_3 = c1_2 * c1;
  const S p = from_int<S>(17) * c1_3 * c1_3 - from_int<S>(102) * c1_2 * c1_2 * c2 +
              from_int<S>(32) * c1_3 * c3 + from_int<S>(180) * c1_2 * c2 * c2 -
              from_int<S>(144) * c1_2 * c4 + from_int<S>(192) * c1 * c2 * c3 -
              from_int<S>(216) * c2 * c2 * c2 + from_int<S>(288) * c2 * c4 -
              from_int<S>(256) * c3 * c3;
  return p * from_ratio<S>(1, 9216);
}

// H3(1) of f itself (a1 = 1).
template <class S>
S h3_direct(const SchlichtCoefficients<S>& a) {
  return hankel_det(std::vector<S>{from_int<S>(1), a.a2, a.a3, a.a4, a.a5}, 3, 1);
}

// H3(1) of the inverse (A1 = 1).
template <class S>
S h3_inverse(const InverseCoefficients<S>& a) {
  return hankel_det(std::vector<S>{from_int<S>(1), a.A2, a.A3, a.A4, a.A5}, 3, 1);
}

// coefficient views of a normalized series (order >= 5)
template <class S>
SchlichtCoefficients<S> coefficients_of(const TruncatedSeries<S>& f) {
  if (f.order() < 5)
    throw std::invalid_argument("coefficient view needs a series of order >= 5");
  return SchlichtCoefficients<S>{f[2], f[3], f[4], f[5]};
}

template <class S>
InverseCoefficients<S> inverse_coefficients_of(const TruncatedSeries<S>& g) {
  if (g.order() < 5)
    throw std::invalid_argument("coefficient view needs a series of order >= 5");
  return InverseCoefficients<S>{g[2], g[3], g[4], g[5]};
}

}  // namespace hankel
