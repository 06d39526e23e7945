#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "dsu/complex.hpp"
#include "dsu/params.hpp"
#include "dsu/polynomial.hpp"

namespace dsu {

using GaussQs = Gaussian<QsNumber>;

// A polynomial with exact complex Q(s) coefficients, q = re + i·im.
struct GaussPolynomial {
  QsPolynomial re;
  QsPolynomial im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussPolynomial times_i() const { return {-im, re}; }
  GaussPolynomial& operator+=(const GaussPolynomial& o);
  GaussPolynomial& operator-=(const GaussPolynomial& o);
  friend GaussPolynomial operator*(const GaussQs& scale, const GaussPolynomial& p);
  friend bool operator==(const GaussPolynomial& a, const GaussPolynomial& b) { return a.re == b.re && a.im == b.im; }
};

// V(x, φ) = e^{iμφ} ρ^s e^{−ρ} q(ρ) with ρ = e^x and μ = λ + offset.
// φ is never discretised: the mode is carried by `offset` and ∂/∂φ acts as iμ.
struct FamilyFunction {
  std::shared_ptr<const Channel> channel;
  int offset = 0;
  QsPolynomial poly;

  QsNumber mu() const;
};

// scale · func, with the scale an exact complex number over Q(s).
struct ScaledFamilyFunction {
  GaussQs scale;
  FamilyFunction func;
};

// Finite superposition over φ-modes: Σ_offset e^{i(λ+offset)φ} ρ^s e^{−ρ} q_offset(ρ).
// Every operator below maps a FamilySum to a FamilySum (closure of the family).
class FamilySum {
 public:
  explicit FamilySum(std::shared_ptr<const Channel> channel) : channel_(std::move(channel)) {}
  FamilySum(const FamilyFunction& f);            // NOLINT(google-explicit-constructor)
  FamilySum(const ScaledFamilyFunction& f);      // NOLINT(google-explicit-constructor)

  const std::shared_ptr<const Channel>& channel() const { return channel_; }
  const std::map<int, GaussPolynomial>& modes() const { return modes_; }
  bool is_zero() const { return modes_.empty(); }

  void add(int offset, const GaussPolynomial& q);
  FamilySum& operator+=(const FamilySum& o);
  FamilySum& operator-=(const FamilySum& o);
  FamilySum scaled(const GaussQs& s) const;

  friend FamilySum operator+(FamilySum a, const FamilySum& b) { return a += b; }
  friend FamilySum operator-(FamilySum a, const FamilySum& b) { return a -= b; }

 private:
  std::shared_ptr<const Channel> channel_;
  std::map<int, GaussPolynomial> modes_;
};

// Polynomial parts of the operators at mode μ; the weight ρ^s e^{−ρ} is implicit.
// ρ d/dρ acting through the weight: ρq′ + (s − ρ)q.
QsPolynomial weighted_euler(const Channel& ch, const QsPolynomial& q);
// Ξ₊: ρq′ + (s + μ + ½)q − 2ρq (then times i, mode μ+1).
QsPolynomial raising_poly(const Channel& ch, const QsNumber& mu, const QsPolynomial& q);
// Ξ₋: ρq′ + (s − μ + ½)q (then times i, mode μ−1).
QsPolynomial lowering_poly(const Channel& ch, const QsNumber& mu, const QsPolynomial& q);
// Ξ_c in explicit form ∂²/∂x² − e^{2x} − 2ie^x∂/∂φ − ¼ at mode μ.
QsPolynomial casimir_poly(const Channel& ch, const QsNumber& mu, const QsPolynomial& q);

ScaledFamilyFunction apply_xi3(const FamilyFunction& f);
ScaledFamilyFunction apply_xi_plus(const FamilyFunction& f);
ScaledFamilyFunction apply_xi_minus(const FamilyFunction& f);
// Explicit-form Casimir; the mode is preserved and the scale is 1.
ScaledFamilyFunction apply_casimir(const FamilyFunction& f);
// The exact eigenvalue when Ξ_c f is a multiple of f, otherwise nullopt.
std::optional<QsNumber> casimir_eigenvalue(const FamilyFunction& f);

FamilySum xi3(const FamilySum& f);
FamilySum xi_plus(const FamilySum& f);
FamilySum xi_minus(const FamilySum& f);
FamilySum xi1(const FamilySum& f);  // (Ξ₊ + Ξ₋)/2
FamilySum xi2(const FamilySum& f);  // (Ξ₊ − Ξ₋)/2i
// −Ξ₁² − Ξ₂² + Ξ₃² by composition.
FamilySum casimir_composed(const FamilySum& f);
// The explicit differential form, mode by mode.
FamilySum casimir_explicit(const FamilySum& f);

enum class Commutator {
  Xi3XiPlus,      // [Ξ₃,Ξ₊] = Ξ₊
  Xi3XiMinus,     // [Ξ₃,Ξ₋] = −Ξ₋
  XiPlusXiMinus,  // [Ξ₊,Ξ₋] = −2Ξ₃
  Xi1Xi2,         // [Ξ₁,Ξ₂] = −iΞ₃
  Xi2Xi3,         // [Ξ₂,Ξ₃] = iΞ₁
  Xi3Xi1,         // [Ξ₃,Ξ₁] = iΞ₂
};
inline constexpr Commutator kAllCommutators[] = {Commutator::Xi3XiPlus, Commutator::Xi3XiMinus,
                                                 Commutator::XiPlusXiMinus, Commutator::Xi1Xi2,
                                                 Commutator::Xi2Xi3, Commutator::Xi3Xi1};
std::string_view name(Commutator which);

// ([A,B] − RHS) f, exactly. Zero for every f when the relation holds.
FamilySum commutator_check(const FamilySum& f, Commutator which);

// ∫₀^∞ ρ^{2s+m−1} e^{−2ρ} dρ = Γ(2s+m)/2^{2s+m}, m ≥ 0, tabulated by recurrence
// from a single Γ(2s) evaluation.
class MomentTable {
 public:
  MomentTable(const Channel& channel, Precision bits);
  const Real& operator()(std::size_t m);
  Precision precision() const { return bits_; }
  const Real& s() const { return s_; }

 private:
  Precision bits_;
  Real s_;
  std::vector<Real> moments_;
};

// Guard bits carried by moment sums to absorb cancellation between terms.
inline constexpr Precision kGuardBits = 96;

struct InnerProduct {
  Complex value;
  bool exact_zero = false;  // no common φ-mode: zero from the φ-integral alone
};

// ⟨f, g⟩ = ∫dφ/2π ∫dx f* g, evaluated in closed form through Γ-moments.
InnerProduct inner_product(const FamilySum& f, const FamilySum& g, Precision bits = kDefaultPrecision);

}  // namespace dsu
