#include "dsu/ladder.hpp"

#include <string>

#include "dsu/errors.hpp"

namespace dsu {

namespace {

QsNumber qs(long v) { return QsNumber(Rational(v)); }

// n(n + 2s): the exact magnitude of L₋ acting on P_n.
QsNumber lowering_scalar(const Channel& ch, int n) { return qs(n) * (qs(n) + ch.s() * qs(2)); }

void check_casimir(const LadderState& st) {
  if (st.zero) return;
  auto ev = casimir_eigenvalue(plus_component(st));
  if (!ev || !(*ev == QsNumber(st.channel().xi))) {
    throw IdentityError("Casimir eigenvalue changed along the ladder at n = " + std::to_string(st.n()));
  }
}

LadderState zero_state(const LadderState& from) {
  LadderState z = from;
  z.psi_plus = {};
  z.psi_minus = {};
  z.ladder_norm_squared = qs(0);
  z.norm_constant.reset();
  z.zero = true;
  return z;
}

}  // namespace

QsNumber ladder_radicand(const QsNumber& lambda, const QsNumber& mu, Direction dir) {
  QsNumber step = dir == Direction::Up ? qs(1) : qs(-1);
  return mu * (mu + step) - lambda * (lambda - qs(1));
}

Real ladder_coefficient(const QsNumber& lambda, const QsNumber& mu, Direction dir, Precision bits) {
  QsNumber r = ladder_radicand(lambda, mu, dir);
  if (sign(r) < 0) throw DomainError("ladder coefficient radicand is negative: outside the representation");
  Real root = sqrt(embed(r, bits + kGuardBits)).with_precision(bits);
  return dir == Direction::Up ? root : -root;
}

TowerNumber minus_weight(const Channel& channel, int n) {
  return -(apparent_principal(channel, n) + TowerNumber(channel.tau));
}

LadderState ground_state(const Channel& channel, Precision precision) {
  LadderState st;
  st.spectral = spectral_point(channel, 0, precision);
  st.psi_plus = QsPolynomial::constant(qs(1));
  st.minus_weight = minus_weight(channel, 0);
  st.ladder_norm_squared = qs(1);
  return st;
}

LadderStep raise_step(const LadderState& state) {
  if (state.zero) return {state, GaussQs{}};
  const Channel& ch = state.channel();
  const int n = state.n();
  LadderState next;
  next.spectral = spectral_point(ch, n + 1, state.spectral.precision);
  next.psi_plus = raising_poly(ch, state.spectral.mu, state.psi_plus);
  // Ξ₊ carries old ψ₋ (mode μ−1) into mode μ; at the bottom ψ₋ vanishes, so
  // the new lower component is seeded from the old upper one, which it equals
  // for n ≥ 1.
  next.psi_minus = state.psi_plus;
  next.minus_weight = minus_weight(ch, n + 1);
  next.ladder_norm_squared = state.ladder_norm_squared * ladder_radicand(ch.lambda(), state.spectral.mu, Direction::Up);
  check_casimir(next);
  return {std::move(next), GaussQs::i()};
}

LadderStep lower_step(const LadderState& state) {
  if (state.zero || state.n() == 0) return {zero_state(state), GaussQs{}};
  const Channel& ch = state.channel();
  const int n = state.n();
  QsPolynomial image = lowering_poly(ch, state.spectral.mu, state.psi_plus);
  QsNumber k = lowering_scalar(ch, n);
  if (!(image == state.psi_minus * (-k))) {
    throw IdentityError("lowering does not map psi_plus onto psi_minus at n = " + std::to_string(n));
  }
  LadderState prev;
  prev.spectral = spectral_point(ch, n - 1, state.spectral.precision);
  prev.psi_plus = state.psi_minus;
  if (n >= 2) {
    QsPolynomial below = lowering_poly(ch, prev.spectral.mu, prev.psi_plus);
    prev.psi_minus = below * (-lowering_scalar(ch, n - 1)).inverse();
  }
  prev.minus_weight = minus_weight(ch, n - 1);
  prev.ladder_norm_squared =
      state.ladder_norm_squared * ladder_radicand(ch.lambda(), prev.spectral.mu, Direction::Up).inverse();
  check_casimir(prev);
  // Ξ₋ = i L₋ and L₋ P_n = −n(n+2s) P_{n−1}.
  return {std::move(prev), GaussQs{qs(0), -k}};
}

LadderState raise(const LadderState& state) { return raise_step(state).state; }
LadderState lower(const LadderState& state) { return lower_step(state).state; }

LadderState build_state(const Channel& channel, int n, Precision precision, int max_n) {
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  if (n > max_n) throw DomainError("n = " + std::to_string(n) + " exceeds the ladder cap " + std::to_string(max_n));
  LadderState st = ground_state(channel, precision);
  for (int k = 0; k < n; ++k) st = raise(st);
  return st;
}

FamilyFunction plus_component(const LadderState& state) {
  return {state.channel_handle(), state.n(), state.psi_plus};
}

FamilyFunction minus_component(const LadderState& state) {
  return {state.channel_handle(), state.n() - 1, state.psi_minus};
}

}  // namespace dsu
