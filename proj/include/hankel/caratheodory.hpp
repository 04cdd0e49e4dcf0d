#pragma once

// The Caratheodory class P: the three-parameter coefficient parametrization
// (c2, c3, c4 from c1, delta, eta, rho), atomic Herglotz measures as concrete
// generators, the recurrence producing starlike-of-order-alpha coefficients,
// a sampling membership check, and the Toeplitz realizability oracle.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace hankel {

namespace detail {
template <class R>
R validation_slack() {
  if constexpr (scalar_traits<R>::is_exact)
    return R(0);
  else
    return R(1e-12);
}
}  // namespace detail

// (c1, delta, eta, rho) with c1 in [0, 2] (rotation-normalized) and the three
// parameters in the closed unit disk. Modulus constraints are checked on
// construction: exactly for exact scalars, with 1e-12 slack for floats.
template <class R, class C>
struct BasicCaratheodoryParams {
  R c1{};
  C delta{}, eta{}, rho{};

  BasicCaratheodoryParams() = default;
  BasicCaratheodoryParams(R c1_in, C delta_in, C eta_in, C rho_in)
      : c1(std::move(c1_in)),
        delta(std::move(delta_in)),
        eta(std::move(eta_in)),
        rho(std::move(rho_in)) {
    const R slack = detail::validation_slack<R>();
    const R disk = (R(1) + slack) * (R(1) + slack);
    if (c1 < -slack || c1 > R(2) + slack)
      throw std::invalid_argument("caratheodory params: c1 must lie in [0, 2]");
    if (abs_sq(delta) > disk)
      throw std::invalid_argument("caratheodory params: |delta| must be <= 1");
    if (abs_sq(eta) > disk)
      throw std::invalid_argument("caratheodory params: |eta| must be <= 1");
    if (abs_sq(rho) > disk)
      throw std::invalid_argument("caratheodory params: |rho| must be <= 1");
  }
};

using CaratheodoryParams = BasicCaratheodoryParams<double, std::complex<double>>;
using RationalCaratheodoryParams = BasicCaratheodoryParams<Rational, ComplexRational>;

// c2, c3, c4 from the parametrization of realizable Caratheodory coefficients
// (the classical |c1| <= 2 chain of Schur-complement conditions, solved):
//   2c2 = c1^2 + delta(4 - c1^2)
//   4c3 = c1^3 + 2(4 - c1^2)c1 delta - (4 - c1^2)c1 delta^2
//         + 2(4 - c1^2)(1 - |delta|^2) eta
//   8c4 = c1^4 + (4 - c1^2) delta (c1^2(delta^2 - 3delta + 3) + 4delta)
//         - 4(4 - c1^2)(1 - |delta|^2)(c1(delta - 1)eta + conj(delta)eta^2
//         - (1 - |eta|^2)rho)
template <class R, class C>
std::array<C, 3> c_from_params(const BasicCaratheodoryParams<R, C>& p) {
  const C one = from_int<C>(1);
  const C c1{p.c1};
  const C t = from_int<C>(4) - c1 * c1;
  const C d = p.delta;
  const C e = p.eta;
  const C r = p.rho;
  const C dd{abs_sq(d)};
  const C ee{abs_sq(e)};

  const C c2 = (c1 * c1 + d * t) * from_ratio<C>(1, 2);
  const C c3 = (c1 * c1 * c1 + from_int<C>(2) * t * c1 * d - t * c1 * d * d +
                from_int<C>(2) * t * (one - dd) * e) *
               from_ratio<C>(1, 4);
  const C c4 =
      (c1 * c1 * c1 * c1 +
       t * d * (c1 * c1 * (d * d - from_int<C>(3) * d + from_int<C>(3)) + from_int<C>(4) * d) -
       from_int<C>(4) * t * (one - dd) *
           (c1 * (d - one) * e + conjugate(d) * e * e - (one - ee) * r)) *
      from_ratio<C>(1, 8);
  return {c2, c3, c4};
}

// --- finite atomic Herglotz measures -----------------------------------------

struct HerglotzAtom {
  double weight;                // >= 0
  std::complex<double> point;   // |point| = 1
};

class HerglotzMeasure {
 public:
  explicit HerglotzMeasure(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("herglotz measure: needs at least one atom");
    double total = 0.0;
    for (const auto& a : atoms_) {
      if (a.weight < -1e-12)
        throw std::invalid_argument("herglotz measure: atom weights must be nonnegative");
      if (std::fabs(std::abs(a.point) - 1.0) > 1e-12)
        throw std::invalid_argument("herglotz measure: atom points must lie on the unit circle");
      total += a.weight;
    }
    if (std::fabs(total - 1.0) > 1e-12)
      throw std::invalid_argument("herglotz measure: atom weights must sum to 1");
  }

  const std::vector<HerglotzAtom>& atoms() const { return atoms_; }

 private:
  std::vector<HerglotzAtom> atoms_;
};

// p(z) = sum_k w_k (1 + x_k z)/(1 - x_k z), truncated: c0 = 1, c_n = 2 sum w_k x_k^n.
inline TruncatedSeries<std::complex<double>> p_from_measure(const HerglotzMeasure& m,
                                                            int order) {
  auto p = TruncatedSeries<std::complex<double>>::zero(order);
  p[0] = 1.0;
  for (const auto& atom : m.atoms()) {
    std::complex<double> pw = 1.0;
    for (int n = 1; n <= order; ++n) {
      pw *= atom.point;
      p[n] += 2.0 * atom.weight * pw;
    }
  }
  return p;
}

// --- starlike-of-order-alpha generator ---------------------------------------

// Solves zf' = (alpha + (1 - alpha) p) f order-by-order:
//   a_n = ((1 - alpha)/(n - 1)) sum_{k=1}^{n-1} c_{n-k} a_k,  a_1 = 1.
// alpha is passed as a ratio so the exact instantiation stays exact.
template <class S>
TruncatedSeries<S> starlike_from_p(const TruncatedSeries<S>& p, long long alpha_num,
                                   long long alpha_den, int order) {
  if (p[0] != from_int<S>(1))
    throw std::invalid_argument("starlike_from_p: p must have constant term 1");
  if (alpha_den <= 0 || alpha_num < 0 || alpha_num >= alpha_den)
    throw std::invalid_argument("starlike_from_p: alpha must lie in [0, 1)");
  if (p.order() < order - 1)
    throw std::invalid_argument("starlike_from_p: p truncated too early for requested order");
  const S one_minus_alpha = from_ratio<S>(alpha_den - alpha_num, alpha_den);
  auto f = TruncatedSeries<S>::identity(order);
  for (int n = 2; n <= order; ++n) {
    S acc{};
    for (int k = 1; k < n; ++k) acc += p[n - k] * f[k];
    f[n] = one_minus_alpha * from_ratio<S>(1, n - 1) * acc;
  }
  return f;
}

// --- sampling membership check ------------------------------------------------

struct MembershipGrid {
  std::vector<double> radii{0.25, 0.5, 0.75, 0.9, 0.95, 0.99, 0.999};
  int angular_samples = 2048;
  double tolerance = 1e-7;
};

struct MembershipReport {
  double min_re = 0.0;            // min over the grid of Re(z f'/f)
  std::complex<double> arg_z{};   // where the minimum occurred
  long samples = 0;
  double alpha = 0.0;
  bool pass = false;              // min_re > alpha - tolerance
};

using PointFunction = std::function<std::complex<double>(std::complex<double>)>;

// Samples Re(z f'(z)/f(z)) on concentric circles. A falsification check, not a
// membership proof: it can only ever reject.
inline MembershipReport verify_membership(const PointFunction& f, const PointFunction& fprime,
                                          double alpha, const MembershipGrid& grid = {}) {
  if (grid.angular_samples < 1 || grid.radii.empty())
    throw std::invalid_argument("membership grid needs radii and at least one angle");
  MembershipReport rep;
  rep.alpha = alpha;
  rep.min_re = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("membership radii must lie in (0, 1)");
    for (int k = 0; k < grid.angular_samples; ++k) {
      const double th = 2.0 * std::numbers::pi * k / grid.angular_samples;
      const std::complex<double> z = std::polar(r, th);
      const std::complex<double> fz = f(z);
      if (!(std::abs(fz) > 1e-14) || !std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
        throw std::domain_error("membership check: f vanishes or blows up on the grid");
      const double re = (z * fprime(z) / fz).real();
      if (!std::isfinite(re))
        throw std::domain_error("membership check: z f'/f not finite on the grid");
      ++rep.samples;
      if (re < rep.min_re) {
        rep.min_re = re;
        rep.arg_z = z;
      }
    }
  }
  rep.pass = rep.min_re > alpha - grid.tolerance;
  return rep;
}

// Series overload: evaluates the truncation directly, so keep radii small
// enough that the tail is negligible at the chosen order.
inline MembershipReport verify_membership(const TruncatedSeries<std::complex<double>>& f,
                                          double alpha, const MembershipGrid& grid = {}) {
  const auto fp = derive(f);
  return verify_membership([&](std::complex<double> z) { return evaluate(f, z); },
                           [&](std::complex<double> z) { return evaluate(fp, z); }, alpha,
                           grid);
}

// --- Toeplitz realizability oracle --------------------------------------------

// Minimum eigenvalue of the 5x5 Hermitian Toeplitz section T_{jk} = c_{j-k}
// with c_0 = 2 and c_{-m} = conj(c_m): the classical characterization of
// realizable initial Caratheodory coefficients is T >= 0.
inline double toeplitz_min_eigenvalue(const std::array<std::complex<double>, 4>& c) {
  Eigen::Matrix<std::complex<double>, 5, 5> t;
  for (int j = 0; j < 5; ++j) {
    for (int k = 0; k < 5; ++k) {
      const int m = j - k;
      if (m == 0)
        t(j, k) = 2.0;
      else if (m > 0)
        t(j, k) = c[static_cast<size_t>(m) - 1];
      else
        t(j, k) = std::conj(c[static_cast<size_t>(-m) - 1]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, 5, 5>> solver(t);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("toeplitz eigenvalue solve failed");
  return solver.eigenvalues().minCoeff();
}

inline bool caratheodory_realizable(const std::array<std::complex<double>, 4>& c,
                                    double tolerance = 1e-9) {
  return toeplitz_min_eigenvalue(c) >= -tolerance;
}

}  // namespace hankel
