#pragma once

#include "dsu/real.hpp"

namespace dsu {

// Exact complex numbers over a field F (Gaussian extension F(i)).
template <class F>
struct Gaussian {
  F re{};
  F im{};

  static Gaussian i() { return {F(0L), F(1L)}; }

  Gaussian conj() const { return {re, -im}; }
  Gaussian times_i() const { return {-im, re}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    F r = re * o.re - im * o.im;
    F m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

// Complex value over high-precision reals.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision bits = kDefaultPrecision) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.norm2();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline Real abs(const Complex& z) { return sqrt(z.norm2()); }

}  // namespace dsu
