#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsu/wavefunctions.hpp"

namespace dsu {

enum class Equation { FirstA, FirstB, CoupledA, CoupledB, SecondA, SecondB };
std::string_view name(Equation eq);

struct ResidualReport {
  Equation which;
  TowerPolynomial residual;  // coefficients in Q(s)(M)
  bool is_exact_zero = false;
  Real max_abs_embedded;
};

// Optional off-shell displacement: s + n is replaced by s + n + shift while
// the polynomials are kept, and M, ν and the relative weight are recomputed.
struct ShellShift {
  Rational shift;
};

// The coupled first-order radial system for F and G, multiplied through by ρ.
std::vector<ResidualReport> first_order_residual(const RadialPair& pair,
                                                 std::optional<ShellShift> shift = std::nullopt);
// The ψ± first-order system and the two uncoupled second-order equations.
std::vector<ResidualReport> second_order_residual(const LadderState& state,
                                                  std::optional<ShellShift> shift = std::nullopt);

// The second-order operator for ψ₊ at mode μ, written out independently of
// the algebra module: q ↦ D²q + 2μρq − ρ²q − ¼q − ξq, D the weighted Euler operator.
QsPolynomial second_order_operator(const Channel& ch, const QsNumber& mu, const QsPolynomial& q);

struct OracleResult {
  Real E_oracle;
  Real binding_oracle;
  Real E_lo;  // final bracket
  Real E_hi;
  long steps = 0;          // integrator steps over the whole search
  long evaluations = 0;    // mismatch evaluations
  double mismatch = 0;     // normalized Wronskian at the returned energy
  int root_index = 0;      // position among the bracketed eigenvalues
};

struct OracleOptions {
  double rho_start = 1e-6;
  double rtol = 1e-14;
  double scan_step = 0.05;  // in ζ/(2ν)
};

// Shooting solution of the coupled first-order system, with no input from
// the algebraic spectrum. NumericalError when no bracket is found.
OracleResult shooting_oracle(const Channel& channel, int n, Precision precision = kDefaultPrecision,
                             const OracleOptions& options = {});
// All levels 0..n_max of a channel from a single scan (unphysical n skipped).
std::vector<OracleResult> shooting_levels(const Channel& channel, int n_max, Precision precision = kDefaultPrecision,
                                          const OracleOptions& options = {});

// |E_oracle − E| / |E − c²|
Real relative_binding_error(const OracleResult& oracle, const SpectralPoint& point);

struct GramEntry {
  Complex value;
  bool exact_zero = false;
};
using GramMatrix = std::vector<std::vector<GramEntry>>;

// Inner products of ladder states. With `normalized` each state is scaled by
// N_λ/√(Π(C⁺)²) from the tracked ladder scalars.
GramMatrix orthonormality_matrix(const std::vector<LadderState>& states, Precision precision = kDefaultPrecision,
                                 bool normalized = true);

std::string negative_branch_divergence_note();

struct CheckResult {
  std::string group;
  std::string name;
  bool exact = false;  // exact identity rather than a numeric tolerance
  bool passed = false;
  std::string detail;
};

struct VerificationConfig {
  Rational c;
  std::vector<int> Z{1, 80};
  Rational j_max = Rational(5, 2);
  int n_max = 5;
  Precision precision = kDefaultPrecision;
  bool negative_control = false;
  int commutator_samples = 20;
  bool oracle = true;
};

struct VerificationReport {
  VerificationConfig config;
  std::vector<CheckResult> checks;
  std::string divergence_note;
  bool passed() const;
  std::size_t failures() const;
};

VerificationReport run_verification(const VerificationConfig& config);

}  // namespace dsu
