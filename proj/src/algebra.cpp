#include "dsu/algebra.hpp"

namespace dsu {

namespace {

QsNumber half() { return QsNumber(Rational(1, 2)); }

GaussPolynomial apply_real_linear(const GaussPolynomial& q, auto&& op) { return {op(q.re), op(q.im)}; }

}  // namespace

GaussPolynomial& GaussPolynomial::operator+=(const GaussPolynomial& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussPolynomial& GaussPolynomial::operator-=(const GaussPolynomial& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussPolynomial operator*(const GaussQs& scale, const GaussPolynomial& p) {
  return {p.re * scale.re - p.im * scale.im, p.re * scale.im + p.im * scale.re};
}

QsNumber FamilyFunction::mu() const { return channel->lambda() + QsNumber(Rational(offset)); }

FamilySum::FamilySum(const FamilyFunction& f) : channel_(f.channel) { add(f.offset, {f.poly, {}}); }

FamilySum::FamilySum(const ScaledFamilyFunction& f) : channel_(f.func.channel) {
  add(f.func.offset, f.scale * GaussPolynomial{f.func.poly, {}});
}

void FamilySum::add(int offset, const GaussPolynomial& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = modes_.try_emplace(offset, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) modes_.erase(it);
  }
}

FamilySum& FamilySum::operator+=(const FamilySum& o) {
  for (const auto& [off, q] : o.modes_) add(off, q);
  return *this;
}

FamilySum& FamilySum::operator-=(const FamilySum& o) {
  for (const auto& [off, q] : o.modes_) add(off, {-q.re, -q.im});
  return *this;
}

FamilySum FamilySum::scaled(const GaussQs& s) const {
  FamilySum out(channel_);
  for (const auto& [off, q] : modes_) out.add(off, s * q);
  return out;
}

QsPolynomial weighted_euler(const Channel& ch, const QsPolynomial& q) {
  return q.euler() + q * ch.s() - q.times_rho();
}

QsPolynomial raising_poly(const Channel& ch, const QsNumber& mu, const QsPolynomial& q) {
  QsPolynomial two_rho_q = q.times_rho() * QsNumber(2L);
  return q.euler() + q * (ch.s() + mu + half()) - two_rho_q;
}

QsPolynomial lowering_poly(const Channel& ch, const QsNumber& mu, const QsPolynomial& q) {
  return q.euler() + q * (ch.s() - mu + half());
}

QsPolynomial casimir_poly(const Channel& ch, const QsNumber& mu, const QsPolynomial& q) {
  QsPolynomial second = weighted_euler(ch, weighted_euler(ch, q));
  QsPolynomial rho_q = q.times_rho();
  return second - rho_q.times_rho() + rho_q * (QsNumber(2L) * mu) - q * QsNumber(Rational(1, 4));
}

ScaledFamilyFunction apply_xi3(const FamilyFunction& f) { return {GaussQs{f.mu(), QsNumber(0L)}, f}; }

ScaledFamilyFunction apply_xi_plus(const FamilyFunction& f) {
  return {GaussQs::i(), FamilyFunction{f.channel, f.offset + 1, raising_poly(*f.channel, f.mu(), f.poly)}};
}

ScaledFamilyFunction apply_xi_minus(const FamilyFunction& f) {
  return {GaussQs::i(), FamilyFunction{f.channel, f.offset - 1, lowering_poly(*f.channel, f.mu(), f.poly)}};
}

ScaledFamilyFunction apply_casimir(const FamilyFunction& f) {
  return {GaussQs{QsNumber(1L), QsNumber(0L)}, FamilyFunction{f.channel, f.offset, casimir_poly(*f.channel, f.mu(), f.poly)}};
}

std::optional<QsNumber> casimir_eigenvalue(const FamilyFunction& f) {
  if (f.poly.is_zero()) return std::nullopt;
  QsPolynomial image = casimir_poly(*f.channel, f.mu(), f.poly);
  QsNumber ratio = image.coefficient(f.poly.size() - 1) / f.poly.leading();
  if (image == f.poly * ratio) return ratio;
  return std::nullopt;
}

FamilySum xi3(const FamilySum& f) {
  FamilySum out(f.channel());
  for (const auto& [off, q] : f.modes()) {
    QsNumber mu = f.channel()->lambda() + QsNumber(Rational(off));
    out.add(off, {q.re * mu, q.im * mu});
  }
  return out;
}

FamilySum xi_plus(const FamilySum& f) {
  FamilySum out(f.channel());
  const Channel& ch = *f.channel();
  for (const auto& [off, q] : f.modes()) {
    QsNumber mu = ch.lambda() + QsNumber(Rational(off));
    out.add(off + 1, apply_real_linear(q, [&](const QsPolynomial& p) { return raising_poly(ch, mu, p); }).times_i());
  }
  return out;
}

FamilySum xi_minus(const FamilySum& f) {
  FamilySum out(f.channel());
  const Channel& ch = *f.channel();
  for (const auto& [off, q] : f.modes()) {
    QsNumber mu = ch.lambda() + QsNumber(Rational(off));
    out.add(off - 1, apply_real_linear(q, [&](const QsPolynomial& p) { return lowering_poly(ch, mu, p); }).times_i());
  }
  return out;
}

FamilySum xi1(const FamilySum& f) { return (xi_plus(f) + xi_minus(f)).scaled({half(), QsNumber(0L)}); }

FamilySum xi2(const FamilySum& f) { return (xi_plus(f) - xi_minus(f)).scaled({QsNumber(0L), -half()}); }

FamilySum casimir_composed(const FamilySum& f) {
  FamilySum out = xi3(xi3(f));
  out -= xi1(xi1(f));
  out -= xi2(xi2(f));
  return out;
}

FamilySum casimir_explicit(const FamilySum& f) {
  FamilySum out(f.channel());
  const Channel& ch = *f.channel();
  for (const auto& [off, q] : f.modes()) {
    QsNumber mu = ch.lambda() + QsNumber(Rational(off));
    out.add(off, apply_real_linear(q, [&](const QsPolynomial& p) { return casimir_poly(ch, mu, p); }));
  }
  return out;
}

std::string_view name(Commutator which) {
  switch (which) {
    case Commutator::Xi3XiPlus: return "[Xi3,Xi+]=Xi+";
    case Commutator::Xi3XiMinus: return "[Xi3,Xi-]=-Xi-";
    case Commutator::XiPlusXiMinus: return "[Xi+,Xi-]=-2Xi3";
    case Commutator::Xi1Xi2: return "[Xi1,Xi2]=-iXi3";
    case Commutator::Xi2Xi3: return "[Xi2,Xi3]=iXi1";
    case Commutator::Xi3Xi1: return "[Xi3,Xi1]=iXi2";
  }
  return "?";
}

FamilySum commutator_check(const FamilySum& f, Commutator which) {
  const GaussQs i = GaussQs::i();
  switch (which) {
    case Commutator::Xi3XiPlus:
      return xi3(xi_plus(f)) - xi_plus(xi3(f)) - xi_plus(f);
    case Commutator::Xi3XiMinus:
      return xi3(xi_minus(f)) - xi_minus(xi3(f)) + xi_minus(f);
    case Commutator::XiPlusXiMinus:
      return xi_plus(xi_minus(f)) - xi_minus(xi_plus(f)) + xi3(f).scaled({QsNumber(2L), QsNumber(0L)});
    case Commutator::Xi1Xi2:
      return xi1(xi2(f)) - xi2(xi1(f)) + xi3(f).scaled(i);
    case Commutator::Xi2Xi3:
      return xi2(xi3(f)) - xi3(xi2(f)) - xi1(f).scaled(i);
    case Commutator::Xi3Xi1:
      return xi3(xi1(f)) - xi1(xi3(f)) - xi2(f).scaled(i);
  }
  throw UsageError("unknown commutator");
}

MomentTable::MomentTable(const Channel& channel, Precision bits) : bits_(bits), s_(sqrt(Real(channel.s2, bits))) {
  Real two_s = s_ * 2;
  if (!(two_s > 0)) throw DomainError("divergent moment: 2s must be positive");
  moments_.push_back(tgamma(two_s) / exp2(two_s));
}

const Real& MomentTable::operator()(std::size_t m) {
  while (moments_.size() <= m) {
    const long k = static_cast<long>(moments_.size()) - 1;
    // Γ(2s+k+1)/2^{2s+k+1} = Γ(2s+k)/2^{2s+k} · (2s+k)/2
    moments_.push_back(moments_.back() * (s_ * 2 + k) / 2);
  }
  return moments_[m];
}

InnerProduct inner_product(const FamilySum& f, const FamilySum& g, Precision bits) {
  if (f.channel()->s2 != g.channel()->s2) throw UsageError("inner product of functions from different channels");
  InnerProduct out{Complex(bits), true};
  const Precision work = bits + kGuardBits;
  std::optional<MomentTable> moments;
  Real re(work), im(work);
  for (const auto& [off, p] : f.modes()) {
    auto it = g.modes().find(off);
    if (it == g.modes().end()) continue;
    out.exact_zero = false;
    if (!moments) moments.emplace(*f.channel(), work);
    const GaussPolynomial& q = it->second;
    // conj(a + ib)(c + id) = (ac + bd) + i(ad − bc)
    QsPolynomial real_part = p.re * q.re + p.im * q.im;
    QsPolynomial imag_part = p.re * q.im - p.im * q.re;
    for (std::size_t m = 0; m < real_part.size(); ++m) re += embed(real_part.coefficient(m), work) * (*moments)(m);
    for (std::size_t m = 0; m < imag_part.size(); ++m) im += embed(imag_part.coefficient(m), work) * (*moments)(m);
  }
  out.value = Complex(re.with_precision(bits), im.with_precision(bits));
  return out;
}

}  // namespace dsu
