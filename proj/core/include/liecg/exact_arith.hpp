#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>

#include "liecg/errors.hpp"

namespace liecg {

using Integer = mpz_class;
using Rational = mpq_class;

// sign * sqrt(radicand); zero is (0, 0).
class SignedRadical {
 public:
  SignedRadical() = default;
  SignedRadical(int sign, Rational radicand);

  int sign() const { return sign_; }
  const Rational& radicand() const { return rad_; }
  bool is_zero() const { return sign_ == 0; }
  double to_double() const { return sign_ * std::sqrt(rad_.get_d()); }
  // "+sqrt(p/q)", "-sqrt(p/q)" or "0".
  std::string str() const;

  bool operator==(const SignedRadical& o) const { return sign_ == o.sign_ && rad_ == o.rad_; }
  bool operator!=(const SignedRadical& o) const { return !(*this == o); }

 private:
  int sign_ = 0;
  Rational rad_ = 0;
};

SignedRadical srad_from_signed_rational(const Rational& x);
SignedRadical srad_mul(const SignedRadical& a, const SignedRadical& b);
// a/b as an exact rational; throws NotCommensurable when irrational.
Rational srad_ratio_as_rational(const SignedRadical& a, const SignedRadical& b);
// Parses "+sqrt(p/q)", "-sqrt(p)", "0".
SignedRadical parse_srad(const std::string& s);

bool exact_sqrt(const Rational& x, Rational& root);
bool is_canonical(const Rational& x);

// Numeric-field traits used to instantiate the engine over exact rationals and over doubles.
template <class F>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static bool zero(const Rational& x) { return sgn(x) == 0; }
  static int sign(const Rational& x) { return sgn(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static std::size_t cost(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  }
};

template <>
struct Field<double> {
  static constexpr bool exact = false;
  static constexpr double tol = 1e-9;
  static bool zero(double x) { return std::fabs(x) < tol; }
  static int sign(double x) { return zero(x) ? 0 : (x > 0 ? 1 : -1); }
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double abs(double x) { return std::fabs(x); }
  static std::size_t cost(double) { return 0; }
};

}  // namespace liecg
