#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "dsu/quadratic.hpp"
#include "dsu/real.hpp"

namespace dsu {

// Dense univariate polynomial in ρ with coefficients in a field F
// (coefficient k multiplies ρ^k). Trailing zero coefficients are trimmed, so
// the zero polynomial has no coefficients and degree −1.
template <class F>
class Polynomial {
 public:
  using coefficient_type = F;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(F value) { return Polynomial(std::vector<F>{std::move(value)}); }
  static Polynomial monomial(F value, std::size_t power) {
    std::vector<F> c(power + 1);
    c[power] = std::move(value);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<F>& coefficients() const { return c_; }
  F coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : F{}; }
  const F& leading() const { return c_.back(); }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const F& scalar) {
    for (auto& x : c_) x *= scalar;
    trim();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const F& s) { return p *= s; }
  friend Polynomial operator*(const F& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<F> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  // ρ·p(ρ)
  Polynomial times_rho() const {
    if (is_zero()) return {};
    std::vector<F> out;
    out.reserve(c_.size() + 1);
    out.emplace_back();
    out.insert(out.end(), c_.begin(), c_.end());
    return Polynomial(std::move(out));
  }

  // dp/dρ
  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * F(static_cast<long>(k));
    return Polynomial(std::move(out));
  }

  // ρ·dp/dρ, the Euler operator d/dx for ρ = e^x.
  Polynomial euler() const {
    std::vector<F> out(c_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= F(static_cast<long>(k));
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && dsu::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

using QsPolynomial = Polynomial<QsNumber>;
using TowerPolynomial = Polynomial<TowerNumber>;

template <class F>
std::vector<Real> embed_coefficients(const Polynomial<F>& p, Precision bits) {
  std::vector<Real> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(embed(c, bits));
  return out;
}

// Horner evaluation of real coefficients.
inline Real horner(const std::vector<Real>& coeffs, const Real& rho) {
  Real acc(rho.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= rho;
    acc += *it;
  }
  return acc;
}

// Horner evaluation at the precision of `rho`.
template <class F>
Real evaluate(const Polynomial<F>& p, const Real& rho) {
  return horner(embed_coefficients(p, rho.precision()), rho);
}

inline TowerPolynomial lift(const QsPolynomial& p) {
  std::vector<TowerNumber> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return TowerPolynomial(std::move(out));
}

// Largest |coefficient| after embedding; zero for the zero polynomial.
template <class F>
Real max_abs_embedded(const Polynomial<F>& p, Precision bits) {
  Real best(bits);
  for (const auto& c : p.coefficients()) best = max(best, abs(embed(c, bits)));
  return best;
}

}  // namespace dsu
