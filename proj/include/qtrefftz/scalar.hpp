#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace qt {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Relative magnitude below which float coefficients are treated as zero by
/// the normalization pass.
inline constexpr double kDefaultZeroTolerance = 1e-12;

template <class S>
struct ScalarTraits;

// Exact field. Real-valued, so conjugation is the identity.
template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_integer(const mpz_class& z) { return Rational(z); }
  static Rational from_u64(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }
  static Rational conj(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_integer(const mpz_class& z) { return {z.get_d(), 0.0}; }
  static Complex from_u64(std::uint64_t v) { return {static_cast<double>(v), 0.0}; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return x.real() == 0.0 && x.imag() == 0.0; }
  static double magnitude(const Complex& x) { return std::abs(x); }
};

template <class S>
concept Field = requires(const S& a, const S& b) {
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
};

/// Converts between the two scalar instantiations. Rational -> Complex is
/// rounding; Complex -> Rational is exact on the real part and requires a zero
/// imaginary part.
template <class To, class From>
To scalar_cast(const From& x);

template <>
inline Rational scalar_cast<Rational, Rational>(const Rational& x) {
  return x;
}
template <>
inline Complex scalar_cast<Complex, Complex>(const Complex& x) {
  return x;
}
template <>
inline Complex scalar_cast<Complex, Rational>(const Rational& x) {
  return {x.get_d(), 0.0};
}
template <>
Rational scalar_cast<Rational, Complex>(const Complex& x);

/// "num/den" in lowest terms; integers still carry "/1".
std::string format_rational(const Rational& q);

/// Accepts "a/b" or "a" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace qt
