#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "dsu/rational.hpp"

namespace dsu {

// Working precision in bits.
using Precision = unsigned;
inline constexpr Precision kDefaultPrecision = 256;

// Number of significant decimal digits that a value of `bits` precision carries.
unsigned decimal_digits(Precision bits);

// Value-semantic owner of an mpfr_t. Binary operations produce a result at the
// larger of the two operand precisions; all rounding is to nearest.
class Real {
 public:
  explicit Real(Precision bits = kDefaultPrecision);
  Real(long value, Precision bits);
  Real(const Rational& value, Precision bits);
  Real(const mpz_class& value, Precision bits);
  static Real from_long_double(long double value, Precision bits);
  // Parses a decimal string (MPFR syntax) at the given precision.
  Real(std::string_view decimal, Precision bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return static_cast<Precision>(mpfr_get_prec(value_)); }
  // Same value rounded to `bits`.
  Real with_precision(Precision bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // Scientific notation with `digits` significant digits; 0 selects the
  // digits implied by the precision.
  std::string str(unsigned digits = 0) const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs);
  friend Real operator-(Real lhs, long rhs);
  friend Real operator*(Real lhs, long rhs);
  friend Real operator/(Real lhs, long rhs);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) > 0; }

 private:
  mpfr_t value_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real exp2(const Real& x);
Real tgamma(const Real& x);
Real max(const Real& a, const Real& b);
Real pi(Precision bits);
// 10^exponent at the given precision (exponent may be negative).
Real pow10(long exponent, Precision bits);

}  // namespace dsu
