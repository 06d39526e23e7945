#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "dsu/errors.hpp"
#include "dsu/rational.hpp"
#include "dsu/real.hpp"

namespace dsu {

// Element a + b·r of a quadratic extension Base(r), r² = modulus ∈ Base, with
// r the positive square root under embedding into the reals.
//
// An element whose b part is zero may be left unbound (no modulus); it then
// behaves as an element of Base and combines with any bound element. Two bound
// elements must share the same modulus, otherwise UsageError.
template <class Base>
class Quadratic;

template <class Base>
bool is_zero(const Quadratic<Base>& x);

template <class Base>
class Quadratic {
 public:
  using base_type = Base;

  Quadratic() = default;
  Quadratic(long value) : a_(Base(value)), b_(Base(0L)) {}  // NOLINT(google-explicit-constructor)
  Quadratic(const Base& a) : a_(a), b_(Base(0L)) {}         // NOLINT(google-explicit-constructor)
  Quadratic(const Rational& a) requires(!std::is_same_v<Base, Rational>)  // NOLINT(google-explicit-constructor)
      : a_(Base(a)), b_(Base(0L)) {}
  Quadratic(Base a, Base b, Base modulus)
      : a_(std::move(a)), b_(std::move(b)), modulus_(std::make_shared<const Base>(std::move(modulus))) {}
  Quadratic(Base a, Base b, std::shared_ptr<const Base> modulus)
      : a_(std::move(a)), b_(std::move(b)), modulus_(std::move(modulus)) {
    if (!modulus_ && !is_zero(b_)) throw UsageError("irrational part without a modulus");
  }

  // The generator r itself.
  static Quadratic generator(Base modulus) { return Quadratic(Base(0L), Base(1L), std::move(modulus)); }

  const Base& a() const { return a_; }
  const Base& b() const { return b_; }
  const Base* modulus() const { return modulus_.get(); }
  const std::shared_ptr<const Base>& modulus_handle() const { return modulus_; }
  bool is_bound() const { return modulus_ != nullptr; }

  Quadratic conjugate() const { return Quadratic(a_, -b_, modulus_); }

  // a² − b²·modulus; zero exactly when the element has no inverse.
  Base norm() const {
    Base n = a_ * a_;
    if (modulus_) n -= b_ * b_ * *modulus_;
    return n;
  }

  Quadratic inverse() const {
    Base n = norm();
    if (is_zero(n)) throw DivisionError("element has no inverse in the quadratic extension");
    Base inv = Base(1L) / n;
    return Quadratic(a_ * inv, -(b_ * inv), modulus_);
  }

  Quadratic operator-() const { return Quadratic(-a_, -b_, modulus_); }

  Quadratic& operator+=(const Quadratic& rhs) {
    adopt(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
  }
  Quadratic& operator-=(const Quadratic& rhs) {
    adopt(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
  }
  Quadratic& operator*=(const Quadratic& rhs) {
    adopt(rhs);
    Base a = a_ * rhs.a_;
    if (modulus_) a += b_ * rhs.b_ * *modulus_;
    Base b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Quadratic& operator/=(const Quadratic& rhs) { return *this *= rhs.inverse(); }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    if (x.modulus_ && y.modulus_ && !same_modulus(*x.modulus_, *y.modulus_, x.modulus_, y.modulus_)) return false;
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  static bool same_modulus(const Base& m1, const Base& m2, const std::shared_ptr<const Base>& p1,
                           const std::shared_ptr<const Base>& p2) {
    return p1 == p2 || m1 == m2;
  }

  void adopt(const Quadratic& rhs) {
    if (!rhs.modulus_) return;
    if (!modulus_) {
      modulus_ = rhs.modulus_;
      return;
    }
    if (!same_modulus(*modulus_, *rhs.modulus_, modulus_, rhs.modulus_)) {
      throw UsageError("operands belong to different quadratic extensions");
    }
  }

  Base a_{};
  Base b_{};
  std::shared_ptr<const Base> modulus_;
};

template <class Base>
bool is_zero(const Quadratic<Base>& x) {
  return is_zero(x.a()) && is_zero(x.b());
}

// Q(s): a + b·s with s² rational.
using QsNumber = Quadratic<Rational>;
// Q(s)(M): a + b·M with M² ∈ Q(s); used where the on-shell energy enters.
using TowerNumber = Quadratic<QsNumber>;

inline Real embed(const Rational& x, Precision bits) { return Real(x, bits); }

template <class Base>
Real embed(const Quadratic<Base>& x, Precision bits) {
  Real out = embed(x.a(), bits);
  if (x.modulus() && !is_zero(x.b())) {
    Real root = sqrt(embed(*x.modulus(), bits));
    out += embed(x.b(), bits) * root;
  }
  return out;
}

// Sign of the embedded value. Exact zero is detected symbolically; otherwise
// the embedding is evaluated with enough headroom that rounding cannot flip it.
int sign(const Rational& x);
int sign(const QsNumber& x);
int sign(const TowerNumber& x);

// Exact non-negative square root when one exists in the same field.
std::optional<Rational> exact_sqrt(const Rational& x);
std::optional<QsNumber> exact_sqrt(const QsNumber& x);

// The positive root of `square` in the tower: folded into Q(s) when `square`
// is a perfect square there, otherwise the symbolic generator.
TowerNumber tower_root(const QsNumber& square);

// Textual form "a + (b)s [s²=m]" with a, b, m written as "p/q" or "p".
std::string to_string(const QsNumber& x);
// Exact inverse of to_string. The bare rational form "p/q" is also accepted
// (an unbound element).
QsNumber parse_qs_number(std::string_view text);

// "(a) + (b)M [M²=m]" where a, b, m are QsNumber texts.
std::string to_string(const TowerNumber& x);

std::ostream& operator<<(std::ostream& os, const QsNumber& x);

}  // namespace dsu
