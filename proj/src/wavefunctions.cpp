#include "dsu/wavefunctions.hpp"

#include <sstream>

#include "dsu/errors.hpp"

namespace dsu {

namespace {

QsNumber qs(long v) { return QsNumber(Rational(v)); }

Precision working_bits(Precision precision, int degree) {
  return precision + kGuardBits + 4 * static_cast<Precision>(degree > 0 ? degree : 0);
}

Real c_squared(const Channel& ch, Precision bits) { return Real(Rational(ch.params.c * ch.params.c), bits); }

// ∫ρ^{2s} e^{−2ρ} p(ρ) dρ for a polynomial p, by Γ-moments.
template <class F>
Real weighted_integral(const Polynomial<F>& p, MomentTable& moments) {
  Real acc(moments.precision());
  for (std::size_t m = 0; m < p.size(); ++m) acc += embed(p.coefficient(m), moments.precision()) * moments(m + 1);
  return acc;
}

// Sign of p at 0⁺: the sign of its lowest nonzero coefficient.
template <class F>
int sign_at_zero(const Polynomial<F>& p) {
  for (const auto& c : p.coefficients()) {
    if (!is_zero(c)) return sign(c);
  }
  return 0;
}

template <class F>
Polynomial<F> remainder(Polynomial<F> num, const Polynomial<F>& den) {
  const F inv = den.leading().inverse();
  while (!num.is_zero() && num.degree() >= den.degree()) {
    F q = num.leading() * inv;
    num -= Polynomial<F>::monomial(q, static_cast<std::size_t>(num.degree() - den.degree())) * den;
  }
  return num;
}

template <class F>
Polynomial<F> positive_monic(const Polynomial<F>& p) {
  F lc = p.leading();
  F scale = lc.inverse();
  if (sign(lc) < 0) scale = -scale;
  return p * scale;
}

template <class F>
int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Distinct roots of p on (0, ∞).
template <class F>
int positive_roots(const Polynomial<F>& p) {
  if (p.degree() <= 0) return 0;
  std::vector<Polynomial<F>> chain{positive_monic(p)};
  Polynomial<F> d = p.derivative();
  if (!d.is_zero()) chain.push_back(positive_monic(d));
  while (chain.size() >= 2 && chain.back().degree() > 0) {
    Polynomial<F> r = remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(positive_monic(-r));
  }
  std::vector<int> at_zero, at_inf;
  for (const auto& q : chain) {
    at_zero.push_back(sign_at_zero(q));
    at_inf.push_back(sign(q.leading()));
  }
  return sign_changes<F>(at_zero) - sign_changes<F>(at_inf);
}

}  // namespace

RadialPair assemble(const LadderState& state, Precision precision) {
  if (state.zero) throw DomainError("cannot assemble the zero state");
  const Channel& ch = state.channel();
  if (!has_bound_state(ch, state.n())) {
    throw DomainError("no bound state for tau > 0 at n = 0: the lowest physical member has n = 1");
  }
  RadialPair pair{state, {}, {}, Real(precision), Real(precision)};
  TowerPolynomial plus = lift(state.psi_plus);
  TowerPolynomial minus = lift(state.psi_minus) * state.minus_weight;
  pair.f_poly = minus + plus;
  pair.g_poly = minus - plus;
  const SpectralPoint p = state.spectral.precision == precision ? state.spectral : spectral_point(ch, state.n(), precision);
  Real c2 = c_squared(ch, precision);
  // c² − E = −binding, without cancellation
  pair.f_scale = sqrt(c2 * 2 + p.binding);
  pair.g_scale = sqrt(-p.binding);
  pair.state.norm_constant.reset();
  return pair;
}

Real radial_norm_integral(const RadialPair& pair, Precision precision) {
  const Precision work = working_bits(precision, pair.f_poly.degree());
  MomentTable moments(pair.state.channel(), work);
  Real f2 = weighted_integral(pair.f_poly * pair.f_poly, moments);
  Real g2 = weighted_integral(pair.g_poly * pair.g_poly, moments);
  Real fs = pair.f_scale.with_precision(work), gs = pair.g_scale.with_precision(work);
  return (fs * fs * f2 + gs * gs * g2).with_precision(precision);
}

RadialPair normalize(const RadialPair& pair, Precision precision) {
  RadialPair out = pair;
  const Precision work = working_bits(precision, pair.f_poly.degree());
  Real integral = radial_norm_integral(pair, work);
  Real k = Real(1L, work) / sqrt(integral);
  out.f_scale = (pair.f_scale.with_precision(work) * k).with_precision(precision);
  out.g_scale = (pair.g_scale.with_precision(work) * k).with_precision(precision);
  Real previous = pair.state.norm_constant ? pair.state.norm_constant->with_precision(work) : Real(1L, work);
  out.state.norm_constant = (previous * k).with_precision(precision);
  out.normalized = true;
  out.samples.clear();
  return out;
}

GroundConstants ground_constants(const Channel& ch, Precision precision) {
  Real s = sqrt(Real(ch.s2, precision));
  Real c2 = c_squared(ch, precision);
  return {Real(1L, precision) / sqrt(c2 * s * 2), exp2(s) / sqrt(tgamma(s * 2))};
}

QsPolynomial laguerre_poly(int n, const QsNumber& alpha) {
  if (n < 0) throw DomainError("Laguerre degree must be non-negative");
  QsPolynomial prev = QsPolynomial::constant(qs(1));
  if (n == 0) return prev;
  const QsPolynomial two_rho = QsPolynomial::monomial(qs(2), 1);
  QsPolynomial cur = QsPolynomial::constant(alpha + qs(1)) - two_rho;
  for (int k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k + 1 + α − y) L_k − (k + α) L_{k−1}, y = 2ρ
    QsPolynomial next = cur * (qs(2 * k + 1) + alpha) - two_rho * cur - prev * (qs(k) + alpha);
    next *= QsNumber(make_rational(1, k + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QsPolynomial hypergeometric_laguerre(int n, const QsNumber& alpha) {
  if (n < 0) throw DomainError("Laguerre degree must be non-negative");
  const QsNumber a1 = alpha + qs(1);
  QsNumber coeff = qs(1);
  for (int k = 0; k < n; ++k) coeff = coeff * (a1 + qs(k)) * QsNumber(make_rational(1, k + 1));
  std::vector<QsNumber> out{coeff};
  for (int k = 0; k < n; ++k) {
    // (−n)_k 2^k / ((α+1)_k k!)
    coeff = coeff * qs(2L * (k - n)) * ((a1 + qs(k)) * qs(k + 1)).inverse();
    out.push_back(coeff);
  }
  return QsPolynomial(std::move(out));
}

LaguerreReport laguerre_cross_check(const LadderState& state, Precision precision) {
  if (state.zero) throw DomainError("the zero state has no Laguerre form");
  const Channel& ch = state.channel();
  const int n = state.n();
  LaguerreReport r;
  r.n = n;
  r.alpha = ch.s() * qs(2);

  auto ratio = [](const QsPolynomial& p, const QsPolynomial& l, const char* which) {
    QsNumber k = p.leading() * l.leading().inverse();
    if (!(p == l * k)) throw IdentityError(std::string(which) + " is not a constant multiple of its Laguerre polynomial");
    return k;
  };
  const QsPolynomial ln = laguerre_poly(n, r.alpha);
  r.hypergeometric_match = hypergeometric_laguerre(n, r.alpha) == ln;
  r.ratio_plus = ratio(state.psi_plus, ln, "psi_plus");
  r.a = TowerNumber(r.ratio_plus);
  if (n >= 1) {
    r.ratio_minus = ratio(state.psi_minus, laguerre_poly(n - 1, r.alpha), "psi_minus");
    r.b = state.minus_weight * TowerNumber(*r.ratio_minus);
  } else {
    r.b = TowerNumber(Rational(0));
  }

  // X = ζ/ν with ν = (M − s − n)/ζ exact in the tower.
  const TowerNumber M = apparent_principal(ch, n);
  const TowerNumber sn(ch.s() + qs(n));
  const TowerNumber zeta(ch.params.zeta);
  const TowerNumber nu = (M - sn) * zeta.inverse();
  const TowerNumber X = zeta * nu.inverse();
  const TowerNumber tau{ch.tau}, s{ch.s()}, nn{Rational(n)}, two_s_n{qs(n) + ch.s() * qs(2)};
  const TowerNumber m11 = tau + s - X + nn, m22 = tau - s + X - nn;
  r.determinant = m11 * m22 + nn * two_s_n;
  r.system_applicable = n >= 1;
  if (r.system_applicable) {
    r.line1 = r.b * m11 - r.a * two_s_n;
    r.line2 = -(r.a * m22) - r.b * nn;
    r.system_exact_zero = is_zero(r.line1) && is_zero(r.line2);
  } else {
    r.line1 = r.line2 = TowerNumber(Rational(0));
  }

  // Elimination: the singular system fixes X − s − n = √(τ² + n² + 2ns).
  const Precision work = precision + kGuardBits;
  const SpectralPoint p = spectral_point(ch, n, work);
  Real c2 = c_squared(ch, work);
  Real sv = sqrt(Real(ch.s2, work));
  Real Y = sqrt(Real(Rational(ch.tau * ch.tau + n * n), work) + sv * (2L * n));
  Real nu_e = Real(ch.params.zeta, work) / (sv + n + Y);
  Real E_e = c2 * (Real(1L, work) - nu_e * nu_e) / (Real(1L, work) + nu_e * nu_e);
  r.E_eliminated = E_e.with_precision(precision);
  r.E_difference = (E_e - p.E).with_precision(precision);

  Real factor = Real(1L, work) + pow10(-6, work);
  Real E_off = p.E * factor;
  if (!(E_off < c2)) E_off = p.E * (Real(2L, work) - factor);
  Real nu_off = sqrt((c2 - E_off) / (c2 + E_off));
  Real X_off = Real(ch.params.zeta, work) / nu_off;
  Real t = Real(ch.tau, work), nr(static_cast<long>(n), work);
  Real o11 = t + sv - X_off + nr, o22 = t - sv + X_off - nr;
  if (r.system_applicable) {
    Real a = embed(r.a, work), b = embed(r.b, work);
    r.off_shell_residual = (abs(b * o11 - a * (nr + sv * 2)) + abs(-(a * o22) - b * nr)).with_precision(precision);
  } else {
    r.off_shell_residual = abs(o11 * o22).with_precision(precision);
  }

  // Sonine form: L_n^α(y) = (−1)^n Γ(α+n+1) T_α^{(n)}(y),
  // T_α^{(n)}(y) = (−1)^n Σ_k (−y)^k / (Γ(α+k+1) (n−k)! k!).
  Real alpha = sv * 2;
  Real g0 = tgamma(alpha + 1);
  std::vector<Real> gam{g0};  // Γ(α+k+1)
  for (int k = 0; k < n; ++k) gam.push_back(gam.back() * (alpha + (k + 1)));
  std::vector<Real> fact{Real(1L, work)};
  for (int k = 1; k <= n; ++k) fact.push_back(fact.back() * k);
  const Real gamma_n = gam.back();
  Real worst(precision);
  for (long y2 : {1L, 2L, 4L, 10L, 20L}) {
    Real y = Real(y2, work) / 2;
    Real L = evaluate(ln, y / 2);
    Real T(work), power(1L, work);
    for (int k = 0; k <= n; ++k) {
      T += power / (gam[k] * fact[n - k] * fact[k]);
      power = -(power * y);
    }
    if (n % 2) T = -T;
    Real sonine = gamma_n * T;
    if (n % 2) sonine = -sonine;
    Real rel = abs(L - sonine) / max(Real(1L, work), abs(L));
    worst = max(worst, rel.with_precision(precision));
  }
  r.sonine_residual = worst;
  return r;
}

std::vector<Real> geometric_grid(const Real& lo, const Real& hi, int count) {
  if (count < 2 || !(lo > 0) || !(hi > lo)) throw DomainError("grid needs 0 < lo < hi and at least two points");
  std::vector<Real> out;
  out.reserve(count);
  Real ratio = log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(lo * exp(ratio * i));
  out.back() = hi;
  return out;
}

std::vector<Real> default_grid(const SpectralPoint& point, Precision precision) {
  Real s = sqrt(Real(point.channel.s2, precision));
  return geometric_grid(pow10(-3, precision), (s + (point.n + 1)) * 5, 400);
}

RadialSample evaluate_pair(const RadialPair& pair, const Real& rho) {
  if (!(rho > 0)) throw DomainError("sample points must satisfy rho > 0");
  const Precision bits = rho.precision();
  Real s = sqrt(Real(pair.state.channel().s2, bits));
  Real w = pow(rho, s) * exp(-rho);
  Real F = pair.f_scale.with_precision(bits) * w * evaluate(pair.f_poly, rho);
  Real G = pair.g_scale.with_precision(bits) * w * evaluate(pair.g_poly, rho);
  return {rho, F, G};
}

RadialPair sample(const RadialPair& pair, const std::vector<Real>& grid) {
  RadialPair out = pair;
  out.samples.clear();
  out.samples.reserve(grid.size());
  for (const Real& rho : grid) out.samples.push_back(evaluate_pair(pair, rho));
  return out;
}

int node_count(const RadialPair& pair) { return positive_roots(pair.f_poly); }

std::string samples_csv(const RadialPair& pair, unsigned digits) {
  std::ostringstream os;
  os << "rho,F,G\n";
  for (const auto& s : pair.samples) os << s.rho.str(digits) << ',' << s.F.str(digits) << ',' << s.G.str(digits) << '\n';
  return os.str();
}

}  // namespace dsu
