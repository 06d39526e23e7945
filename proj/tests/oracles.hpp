#pragma once

#include "dsu/ladder.hpp"
#include "dsu/polynomial.hpp"

namespace dsu::test {

// c² 2^{−2s} [β² (n−1)! Γ(n+2s) + n! Γ(n+2s+1)] from Laguerre orthogonality.
inline Real norm_oracle(const LadderState& st, Precision bits) {
  const Channel& ch = st.channel();
  const int n = st.n();
  Real s = sqrt(Real(ch.s2, bits));
  Real c2(Rational(ch.params.c * ch.params.c), bits);
  Real fact(1L, bits);
  for (int k = 2; k < n; ++k) fact = fact * k;
  Real plus = fact * (n > 0 ? n : 1) * tgamma(s * 2 + (n + 1));
  Real minus(bits);
  if (n > 0) {
    Real beta = embed(st.minus_weight, bits);
    minus = beta * beta * fact * tgamma(s * 2 + n);
  }
  return c2 * (plus + minus) / exp2(s * 2);
}

// ₁F₁(−n, α+1; y) Γ(α+n+1)/(n! Γ(α+1)) coefficient by coefficient.
inline QsPolynomial hypergeometric_oracle(int n, const QsNumber& alpha) {
  std::vector<QsNumber> out;
  for (int k = 0; k <= n; ++k) {
    // binom(n+α, n−k) (−1)^k 2^k / k!
    QsNumber c(1L);
    for (int i = 1; i <= n - k; ++i) c = c * (alpha + QsNumber(Rational(k + i))) * QsNumber(make_rational(1, i));
    for (int i = 1; i <= k; ++i) c = c * QsNumber(make_rational(-2, i));
    out.push_back(c);
  }
  return QsPolynomial(out);
}


}  // namespace dsu::test
