#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsu/ladder.hpp"

namespace dsu {

struct RadialSample {
  Real rho;
  Real F;
  Real G;
};

// F = f_scale · W · f(ρ), G = g_scale · W · g(ρ) with W = ρ^s e^{−ρ} and
// f = ψ₋ + ψ₊, g = ψ₋ − ψ₊ (ψ₋ carrying its relative weight −(M + τ)).
struct RadialPair {
  LadderState state;
  TowerPolynomial f_poly;
  TowerPolynomial g_poly;
  Real f_scale;  // √(c² + E), times the normalization once applied
  Real g_scale;  // √(c² − E), likewise
  bool normalized = false;
  std::vector<RadialSample> samples;

  const SpectralPoint& spectral() const { return state.spectral; }
};

// DomainError when (channel, n) has no bound state.
RadialPair assemble(const LadderState& state, Precision precision = kDefaultPrecision);

// ∫₀^∞ (F² + G²) dρ for the current scales, through Γ-moments.
Real radial_norm_integral(const RadialPair& pair, Precision precision = kDefaultPrecision);

RadialPair normalize(const RadialPair& pair, Precision precision = kDefaultPrecision);

// Constants of the ground-state normalization: N = 1/√(2c²s) and
// N_λ = 2^s/√Γ(2s), whose product is the Γ-moment normalization.
struct GroundConstants {
  Real N;
  Real N_lambda;
};
GroundConstants ground_constants(const Channel& channel, Precision precision = kDefaultPrecision);

// L_n^α(2ρ) from the three-term recurrence, exact in Q(s).
QsPolynomial laguerre_poly(int n, const QsNumber& alpha);

// Γ(α+n+1)/(n! Γ(α+1)) ₁F₁(−n, α+1; 2ρ), with the Γ ratio taken as (α+1)_n.
QsPolynomial hypergeometric_laguerre(int n, const QsNumber& alpha);

struct LaguerreReport {
  int n = 0;
  QsNumber alpha;
  QsNumber ratio_plus;                 // ψ₊ / L_n^{2s}(2ρ)
  std::optional<QsNumber> ratio_minus;  // ψ₋ / L_{n−1}^{2s}(2ρ), n ≥ 1
  // Scalars of the Laguerre representation: a on the mode-μ component and
  // b on the mode-(μ−1) component, including its relative weight.
  TowerNumber a;
  TowerNumber b;
  // The two linear relations between the scalars, in the form
  // b(τ + s − X + n) − a(n + 2s) and −a(τ − s + X − n) − b n with X = ζ/ν.
  TowerNumber line1;
  TowerNumber line2;
  bool system_applicable = false;  // needs the mode-(μ−1) component, n ≥ 1
  bool system_exact_zero = false;
  TowerNumber determinant;    // of the 2×2 coefficient matrix, on shell
  Real E_eliminated;          // energy recovered from the singular system
  Real E_difference;          // E_eliminated − E
  Real off_shell_residual;    // |line1| + |line2| (|det| at n = 0) at E(1 ± 10⁻⁶)
  Real sonine_residual;       // max |L − (−1)^n Γ(α+n+1) T_α^{(n)}| at sample points
  bool hypergeometric_match = false;
};

LaguerreReport laguerre_cross_check(const LadderState& state, Precision precision = kDefaultPrecision);

// The default grid: geometric from 10⁻³ to 5(n + s + 1), 400 points.
std::vector<Real> default_grid(const SpectralPoint& point, Precision precision = kDefaultPrecision);
std::vector<Real> geometric_grid(const Real& lo, const Real& hi, int count);

RadialPair sample(const RadialPair& pair, const std::vector<Real>& grid);
RadialSample evaluate_pair(const RadialPair& pair, const Real& rho);

// Sign changes of F on (0, ∞), counted exactly with a Sturm sequence.
int node_count(const RadialPair& pair);

// "rho,F,G" with `digits` significant digits.
std::string samples_csv(const RadialPair& pair, unsigned digits);

}  // namespace dsu
