#pragma once

// Scalar flavors shared by every geometric type in the library:
//   Rational  - normalized arbitrary-precision fraction, exact equality
//   Integer   - arbitrary-precision integer (exact integer matrices/vectors)
//   double    - IEEE binary64
//   BigFloat  - MPFR float, 50 significant decimal digits (fixed per type,
//               so values never depend on a process-wide default)
//
// Generic code is written against the small set of free functions below
// (floor_of, round_nearest, sqrt_of, to_double, convert<U>) so that each
// algorithm is instantiated once per flavor.

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdyn {

using Integer = mpz_class;
using Rational = mpq_class;
using BigFloat = boost::multiprecision::mpfr_float_50;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "rational";
  static unsigned precision_bits(const Rational&) { return 0; }
};

template <>
struct ScalarTraits<Integer> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "integer";
  static unsigned precision_bits(const Integer&) { return 0; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool is_exact = false;
  static constexpr const char* name = "double";
  static unsigned precision_bits(double) { return 53; }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool is_exact = false;
  static constexpr const char* name = "mpfr";
  static unsigned precision_bits(const BigFloat& x) {
    return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
  }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::is_exact;

// --- conversions -----------------------------------------------------------

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const Integer& x) { return x.get_d(); }
inline double to_double(const BigFloat& x) {
  return mpfr_get_d(x.backend().data(), MPFR_RNDN);
}

template <class U>
struct Convert;

template <>
struct Convert<double> {
  template <class T>
  static double from(const T& x) { return to_double(x); }
};

template <>
struct Convert<Rational> {
  static Rational from(const Rational& x) { return x; }
  static Rational from(const Integer& x) { return Rational(x); }
  // Exact: every finite double is a dyadic rational.
  static Rational from(double x) { return Rational(x); }
};

template <>
struct Convert<Integer> {
  static Integer from(const Integer& x) { return x; }
  static Integer from(const Rational& x);
};

template <>
struct Convert<BigFloat> {
  static BigFloat from(const BigFloat& x) { return x; }
  static BigFloat from(double x) { return BigFloat(x); }
  static BigFloat from(const Rational& x) {
    BigFloat r;
    mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat from(const Integer& x) {
    BigFloat r;
    mpfr_set_z(r.backend().data(), x.get_mpz_t(), MPFR_RNDN);
    return r;
  }
};

template <class U, class T>
U convert(const T& x) {
  return Convert<U>::from(x);
}

// --- rounding --------------------------------------------------------------

inline double floor_of(double x) { return std::floor(x); }
inline Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}
inline Integer floor_of(const Integer& x) { return x; }
inline BigFloat floor_of(const BigFloat& x) { return boost::multiprecision::floor(x); }

// Nearest integer with ties rounded up (floor(x + 1/2)).
inline double round_nearest(double x) { return std::floor(x + 0.5); }
inline Integer round_nearest(const Rational& x) { return floor_of(Rational(x + Rational(1, 2))); }
inline Integer round_nearest(const Integer& x) { return x; }
inline BigFloat round_nearest(const BigFloat& x) {
  return boost::multiprecision::floor(x + BigFloat(0.5));
}

inline Integer Convert<Integer>::from(const Rational& x) {
  if (x.get_den() != 1) throw std::invalid_argument("rational is not an integer");
  return x.get_num();
}

inline double sqrt_of(double x) { return std::sqrt(x); }
inline BigFloat sqrt_of(const BigFloat& x) { return boost::multiprecision::sqrt(x); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const BigFloat& x) { return x == 0; }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

// Parses "a", "-a" or "a/b" into a normalized rational.
Rational parse_rational(const std::string& text);

}  // namespace latdyn
