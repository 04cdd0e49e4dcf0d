#pragma once

// Scalar layer: exact rationals, a minimal complex-over-field template, and a
// small trait surface so the same algebra templates run in exact-rational and
// complex-double mode.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hankel {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// std::complex<T> is only specified for built-in floating types, so exact
// complex arithmetic uses this instead (Gaussian rationals and friends).
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT: implicit real embedding is the point
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const T n = b.re * b.re + b.im * b.im;
    if (n == T{}) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

using ComplexRational = Complex<Rational>;

// --- conjugation / squared modulus / real part, uniform over scalar kinds ---

inline double conjugate(double x) { return x; }
inline Rational conjugate(const Rational& q) { return q; }
inline std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
template <class T>
Complex<T> conjugate(const Complex<T>& z) {
  return {z.re, -z.im};
}

inline double abs_sq(double x) { return x * x; }
inline Rational abs_sq(const Rational& q) { return q * q; }
inline double abs_sq(const std::complex<double>& z) { return std::norm(z); }
template <class T>
T abs_sq(const Complex<T>& z) {
  return z.re * z.re + z.im * z.im;
}

inline double real_part(double x) { return x; }
inline Rational real_part(const Rational& q) { return q; }
inline double real_part(const std::complex<double>& z) { return z.real(); }
template <class T>
T real_part(const Complex<T>& z) {
  return z.re;
}

// --- uniform construction from small integer ratios -------------------------

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  using real_type = double;
  static constexpr bool is_exact = false;
  static double from_ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

template <>
struct scalar_traits<Rational> {
  using real_type = Rational;
  static constexpr bool is_exact = true;
  static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
};

template <>
struct scalar_traits<std::complex<double>> {
  using real_type = double;
  static constexpr bool is_exact = false;
  static std::complex<double> from_ratio(long long num, long long den) {
    return {scalar_traits<double>::from_ratio(num, den), 0.0};
  }
};

template <class T>
struct scalar_traits<Complex<T>> {
  using real_type = T;
  static constexpr bool is_exact = scalar_traits<T>::is_exact;
  static Complex<T> from_ratio(long long num, long long den) {
    return {scalar_traits<T>::from_ratio(num, den), T{}};
  }
};

template <class S>
S from_ratio(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("from_ratio: zero denominator");
  return scalar_traits<S>::from_ratio(num, den);
}

template <class S>
S from_int(long long n) {
  return scalar_traits<S>::from_ratio(n, 1);
}

// --- float projections (reporting / scanning only) --------------------------

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.template convert_to<double>(); }
inline std::complex<double> to_complex_double(double x) { return {x, 0.0}; }
inline std::complex<double> to_complex_double(const std::complex<double>& z) { return z; }
inline std::complex<double> to_complex_double(const Rational& q) { return {to_double(q), 0.0}; }
template <class T>
std::complex<double> to_complex_double(const Complex<T>& z) {
  return {to_double(z.re), to_double(z.im)};
}

// --- "p/q" serialization for exact results ----------------------------------

inline std::string fraction_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail();
  const std::string_view body = text.substr(begin, end - begin + 1);
  const size_t slash = body.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(body)));
    const BigInt num(std::string(body.substr(0, slash)));
    const BigInt den(std::string(body.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    fail();
  }
  return Rational();  // unreachable
}

}  // namespace hankel
