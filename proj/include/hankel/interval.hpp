#pragma once

// Outward-rounded interval arithmetic and forward-mode derivatives, the
// machinery behind the certified grid scan and the cell-exclusion checks.
//
// Rounding model: ordinary double arithmetic rounds to nearest (error at most
// half an ulp per operation), so widening each computed endpoint by one ulp
// with nextafter gives a sound enclosure without touching the FPU rounding
// mode. Only +, -, * and abs are provided; the polynomials here need nothing
// else.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hankel {

class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  Interval(double point) : lo_(point), hi_(point) {}  // NOLINT: exact embedding
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("interval endpoints out of order");
  }

  static Interval widened(double lo, double hi) {
    return Interval(step_down(lo), step_up(hi));
  }
  static Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  // largest absolute value over the interval
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return widened(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return widened(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    const double p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                   std::max(std::max(p1, p2), std::max(p3, p4)));
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

 private:
  static double step_up(double v) {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
  }
  static double step_down(double v) {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
  }

  double lo_, hi_;
};

// |.| is exact on endpoints, no widening needed
inline Interval abs(const Interval& a) {
  if (a.lo() >= 0.0) return a;
  if (a.hi() <= 0.0) return -a;
  return Interval(0.0, std::max(-a.lo(), a.hi()));
}

inline double abs(double x) { return std::fabs(x); }

// Value plus three partial derivatives, propagated forward through +, -, *.
// Instantiated with T = Interval it encloses a gradient over a box; with
// T = double it is plain algorithmic differentiation at a point.
template <class T>
struct Dual3 {
  T v{};
  std::array<T, 3> d{};

  Dual3() = default;
  Dual3(double constant) : v(constant) {}  // NOLINT: constants have zero gradient
  Dual3(T value, std::array<T, 3> grad) : v(value), d(grad) {}

  static Dual3 variable(T value, int axis) {
    Dual3 r(value, {});
    r.d[static_cast<size_t>(axis)] = T(1.0);
    return r;
  }

  friend Dual3 operator+(const Dual3& a, const Dual3& b) {
    return {a.v + b.v, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2]}};
  }
  friend Dual3 operator-(const Dual3& a, const Dual3& b) {
    return {a.v - b.v, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2]}};
  }
  friend Dual3 operator-(const Dual3& a) { return {-a.v, {-a.d[0], -a.d[1], -a.d[2]}}; }
  friend Dual3 operator*(const Dual3& a, const Dual3& b) {
    return {a.v * b.v,
            {a.v * b.d[0] + a.d[0] * b.v, a.v * b.d[1] + a.d[1] * b.v,
             a.v * b.d[2] + a.d[2] * b.v}};
  }
  Dual3& operator+=(const Dual3& o) { return *this = *this + o; }
  Dual3& operator-=(const Dual3& o) { return *this = *this - o; }
  Dual3& operator*=(const Dual3& o) { return *this = *this * o; }
};

// |u|' = sign(u) u' away from zero; across zero the derivative enclosure is
// the hull of both signs, which is sound since |d|u|| <= |u'|.
inline Dual3<Interval> abs(const Dual3<Interval>& a) {
  if (a.v.lo() >= 0.0) return a;
  if (a.v.hi() <= 0.0) return -a;
  return {abs(a.v),
          {Interval::hull(a.d[0], -a.d[0]), Interval::hull(a.d[1], -a.d[1]),
           Interval::hull(a.d[2], -a.d[2])}};
}

inline Dual3<double> abs(const Dual3<double>& a) {
  return a.v >= 0.0 ? a : -a;
}

}  // namespace hankel
