#include "dsu/real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsu/errors.hpp"

namespace dsu {

unsigned decimal_digits(Precision bits) {
  return static_cast<unsigned>(std::floor(bits * 0.30102999566398120));
}

Real::Real(Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::from_long_double(long double value, Precision bits) {
  Real out(bits);
  mpfr_set_ld(out.value_, value, MPFR_RNDN);
  return out;
}

Real::Real(std::string_view decimal, Precision bits) {
  mpfr_init2(value_, bits);
  std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw UsageError("malformed real '" + text + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // mpfr_swap needs an initialised target; a 2-bit placeholder is cheapest.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real operator+(Real lhs, long rhs) {
  mpfr_add_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

Real operator-(Real lhs, long rhs) {
  mpfr_sub_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

Real operator*(Real lhs, long rhs) {
  mpfr_mul_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

Real operator/(Real lhs, long rhs) {
  mpfr_div_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::str(unsigned digits) const {
  if (digits == 0) digits = std::max(1u, decimal_digits(precision()));
  if (mpfr_zero_p(value_)) return "0";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", static_cast<int>(digits - 1), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

#define DSU_UNARY(name, fn)                   \
  Real name(const Real& x) {                  \
    Real out(x.precision());                  \
    fn(out.get(), x.get(), MPFR_RNDN);        \
    return out;                               \
  }

DSU_UNARY(sqrt, mpfr_sqrt)
DSU_UNARY(abs, mpfr_abs)
DSU_UNARY(exp, mpfr_exp)
DSU_UNARY(log, mpfr_log)
DSU_UNARY(exp2, mpfr_exp2)
DSU_UNARY(tgamma, mpfr_gamma)

#undef DSU_UNARY

Real pow(const Real& base, const Real& exponent) {
  Real out(std::max(base.precision(), exponent.precision()));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(Precision bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real pow10(long exponent, Precision bits) {
  Real out(bits);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

}  // namespace dsu
