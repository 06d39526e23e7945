#include "dsu/jl.hpp"

#include "dsu/errors.hpp"

namespace dsu {

Complex JLMatrix::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

JLMatrix jl_fg_matrix(const SpectralPoint& p, Precision precision) {
  const Channel& ch = p.channel;
  Real c2(Rational(ch.params.c * ch.params.c), precision);
  Real zeta(ch.params.zeta, precision), tau(ch.tau, precision);
  Real E = p.E.with_precision(precision);
  Real minus = -p.binding.with_precision(precision);  // c² − E
  Real zero(precision);
  JLMatrix j;
  j.basis = JLBasis::FG;
  j.m[0][0] = Complex(zeta, zero);
  j.m[0][1] = Complex(zero, -(tau * (c2 + E) / c2));
  j.m[1][0] = Complex(zero, tau * minus / c2);
  j.m[1][1] = Complex(zeta, zero);
  return j;
}

PsiAction jl_psi_action(const LadderState& state, Precision precision) {
  const Precision work = precision + kGuardBits;
  const SpectralPoint p = spectral_point(state.channel(), state.n(), work);
  const Channel& ch = p.channel;
  Real c2(Rational(ch.params.c * ch.params.c), work);
  Real zeta(ch.params.zeta, work), tau(ch.tau, work);
  Real kt = p.k * tau / c2;

  PsiAction out{(zeta - kt).with_precision(precision), (zeta + kt).with_precision(precision), JLMatrix(),
                Real(precision)};

  // (F, iG) = T (ψ₊, ψ₋), T = [[A, A], [−iB, iB]]
  Real A = sqrt(c2 * 2 + p.binding), B = sqrt(-p.binding);
  Real zero(work);
  std::array<std::array<Complex, 2>, 2> T{{{Complex(A, zero), Complex(A, zero)}, {Complex(zero, -B), Complex(zero, B)}}};
  Complex det = T[0][0] * T[1][1] - T[0][1] * T[1][0];
  std::array<std::array<Complex, 2>, 2> Ti{{{T[1][1] / det, Complex(zero, zero) - T[0][1] / det},
                                            {Complex(zero, zero) - T[1][0] / det, T[0][0] / det}}};
  JLMatrix J = jl_fg_matrix(p, work);
  const Complex cz(zero, zero);
  std::array<std::array<Complex, 2>, 2> JT{{{cz, cz}, {cz, cz}}}, R = JT;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      JT[a][b] = J.m[a][0] * T[0][b] + J.m[a][1] * T[1][b];
    }
  }
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      R[a][b] = Ti[a][0] * JT[0][b] + Ti[a][1] * JT[1][b];
    }
  }
  out.transformed.basis = JLBasis::Psi;
  Real worst(work);
  const Real expected[2][2] = {{zeta - kt, zero}, {zero, zeta + kt}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      worst = max(worst, abs(R[a][b] - Complex(expected[a][b], zero)));
      out.transformed.m[a][b] = Complex(R[a][b].re.with_precision(precision), R[a][b].im.with_precision(precision));
    }
  }
  out.deviation = worst.with_precision(precision);
  if (out.deviation > pow10(-static_cast<long>(precision / 4), precision)) {
    throw IdentityError("psi-basis action disagrees with the transformed (F, iG) matrix");
  }
  return out;
}

std::string spectroscopic_label(long N, int l) {
  static const char letters[] = "spdfghiklmnoqrtuv";
  std::string out = std::to_string(N);
  if (l >= 0 && l < static_cast<int>(sizeof(letters) - 1)) {
    out += letters[l];
  } else {
    out += "[l=" + std::to_string(l) + "]";
  }
  return out;
}

std::vector<DiagonalityRecord> diagonality_scan(const PhysicalParams& params, const Rational& j_max, int n_max,
                                                Precision precision) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  std::vector<DiagonalityRecord> out;
  for (long tj = 1; Rational(tj, 2) <= j_max; tj += 2) {
    for (int eps : {-1, 1}) {
      const Channel ch = make_channel(params, make_rational(tj, 2), eps);
      for (int n = 0; n <= n_max; ++n) {
        SpectralPoint p = spectral_point(ch, n, precision);
        DiagonalityRecord r;
        r.j = ch.j;
        r.eps = eps;
        r.n = n;
        r.N = p.N;
        r.l = ch.orbital_l();
        r.label = spectroscopic_label(r.N, r.l);
        Real zeta(ch.params.zeta, precision), tau(ch.tau, precision);
        Real ratio = tau / p.apparent_principal;
        r.coeff_minus = zeta * (Real(1L, precision) - ratio);
        r.coeff_plus = zeta * (Real(1L, precision) + ratio);
        r.physical = has_bound_state(ch, n);
        // one coefficient vanishes exactly when M² = τ²
        r.is_diagonal = r.physical && apparent_principal_squared(ch, n) == QsNumber(Rational(ch.tau * ch.tau));
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace dsu
