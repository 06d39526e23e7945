#pragma once

#include <random>

#include "dsu/algebra.hpp"
#include "dsu/params.hpp"
#include "dsu/quadratic.hpp"

namespace dsu::test {

inline const Rational kCodata = parse_rational("137.035999084");

inline Channel channel(const Rational& c, int Z, long twice_j, int eps) {
  return make_channel(make_params(c, Z), make_rational(twice_j, 2), eps);
}

inline Channel hydrogen(long twice_j, int eps) { return channel(kCodata, 1, twice_j, eps); }

inline Rational random_rational(std::mt19937_64& rng, long span = 20) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return make_rational(num(rng), den(rng));
}

inline QsNumber random_qs(std::mt19937_64& rng, const std::shared_ptr<const Rational>& modulus) {
  return QsNumber(random_rational(rng), random_rational(rng), modulus);
}

// Sum of one to three family functions with random Q(s) coefficients.
inline FamilySum random_member(std::mt19937_64& rng, const std::shared_ptr<const Channel>& ch) {
  std::uniform_int_distribution<int> deg(0, 4), off(-2, 3), modes(1, 3);
  FamilySum f(ch);
  const int count = modes(rng);
  for (int m = 0; m < count; ++m) {
    std::vector<QsNumber> re, im;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
      re.push_back(random_qs(rng, ch->s2_handle));
      im.push_back(random_qs(rng, ch->s2_handle));
    }
    f.add(off(rng), {QsPolynomial(re), QsPolynomial(im)});
  }
  return f;
}

// |a − b| ≤ tol·max(1, |b|)
inline bool close(const Real& a, const Real& b, const Real& tol) {
  return abs(a - b) <= tol * max(Real(1L, b.precision()), abs(b));
}

}  // namespace dsu::test
