#pragma once

#include <array>
#include <string>
#include <vector>

#include "dsu/complex.hpp"
#include "dsu/ladder.hpp"

namespace dsu {

enum class JLBasis { FG, Psi };

struct JLMatrix {
  JLBasis basis = JLBasis::FG;
  std::array<std::array<Complex, 2>, 2> m{{{Complex(), Complex()}, {Complex(), Complex()}}};
  Complex determinant() const;
};

// On-shell action on (F, iG): diagonal ζ, off-diagonal ∓iτ(c² ± E)/c².
JLMatrix jl_fg_matrix(const SpectralPoint& point, Precision precision = kDefaultPrecision);

struct PsiAction {
  Real coeff_plus;   // on ψ₊: ζ − kτ/c²
  Real coeff_minus;  // on ψ₋: ζ + kτ/c²
  JLMatrix transformed;  // T⁻¹ J T with (F, iG) = T (ψ₊, ψ₋)
  Real deviation;        // largest entry of |T⁻¹ J T − diag(coeff_plus, coeff_minus)|
};

// IdentityError when the two paths differ beyond 10^{−precision/4}.
PsiAction jl_psi_action(const LadderState& state, Precision precision = kDefaultPrecision);

struct DiagonalityRecord {
  Rational j;
  int eps = -1;
  int n = 0;
  long N = 1;
  int l = 0;
  std::string label;
  Real coeff_minus;  // ζ[1 − τ/M]
  Real coeff_plus;   // ζ[1 + τ/M]
  bool physical = true;
  bool is_diagonal = false;
};

std::string spectroscopic_label(long N, int l);

std::vector<DiagonalityRecord> diagonality_scan(const PhysicalParams& params, const Rational& j_max, int n_max,
                                                Precision precision = kDefaultPrecision);

}  // namespace dsu
