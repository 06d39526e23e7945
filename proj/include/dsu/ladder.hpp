#pragma once

#include <optional>

#include "dsu/algebra.hpp"
#include "dsu/params.hpp"
#include "dsu/polynomial.hpp"

namespace dsu {

inline constexpr int kDefaultMaxLadder = 64;

enum class Direction { Up, Down };

// One rung of the physical ladder. psi_plus is the polynomial part of the
// mode-μ component and psi_minus that of the mode-(μ−1) component; the weight
// ρ^s e^{−ρ} is implicit. Both stay unnormalised and exact in Q(s).
struct LadderState {
  SpectralPoint spectral;
  QsPolynomial psi_plus;
  QsPolynomial psi_minus;
  // Relative weight of psi_minus in the radial pair, −(M + τ), exact in Q(s)(M).
  TowerNumber minus_weight;
  // ⟨P,P⟩/⟨1,1⟩ = Π (C⁺)² over the rungs climbed, exact.
  QsNumber ladder_norm_squared;
  std::optional<Real> norm_constant;  // set by normalize()
  bool zero = false;                  // annihilated below the bottom rung

  int n() const { return spectral.n; }
  const Channel& channel() const { return spectral.channel; }
  std::shared_ptr<const Channel> channel_handle() const { return std::make_shared<const Channel>(spectral.channel); }
};

// Exact radicand μ(μ±1) − λ(λ−1).
QsNumber ladder_radicand(const QsNumber& lambda, const QsNumber& mu, Direction dir);
// C_μ^± = ±sqrt(radicand); DomainError when the radicand is negative.
Real ladder_coefficient(const QsNumber& lambda, const QsNumber& mu, Direction dir,
                        Precision bits = kDefaultPrecision);

// −(M + τ) in the tower over Q(s) with M² = (s+n)² + ζ².
TowerNumber minus_weight(const Channel& channel, int n);

LadderState ground_state(const Channel& channel, Precision precision = kDefaultPrecision);
LadderState raise(const LadderState& state);
// At n = 0 (or on the zero state) returns the zero state.
LadderState lower(const LadderState& state);
LadderState build_state(const Channel& channel, int n, Precision precision = kDefaultPrecision,
                        int max_n = kDefaultMaxLadder);

// The exact factor produced by Ξ± on the ψ₊ component: Ξ± ψ₊(n) = factor · ψ₊(n±1).
struct LadderStep {
  LadderState state;
  GaussQs factor;
};
LadderStep raise_step(const LadderState& state);
LadderStep lower_step(const LadderState& state);

// ψ₊ as a member of the algebra's function family.
FamilyFunction plus_component(const LadderState& state);
FamilyFunction minus_component(const LadderState& state);

}  // namespace dsu
