#include <random>

#include "doctest.h"
#include "dsu/algebra.hpp"
#include "dsu/ladder.hpp"
#include "support.hpp"

using namespace dsu;
using dsu::test::close;

namespace {

std::shared_ptr<const Channel> handle(const Channel& c) { return std::make_shared<const Channel>(c); }

using test::random_member;

std::vector<Channel> channels() {
  return {test::hydrogen(1, -1), test::hydrogen(1, 1),  test::hydrogen(3, -1),
          test::hydrogen(5, 1),  test::channel(Rational(10), 1, 1, -1), test::channel(test::kCodata, 80, 3, -1),
          test::channel(test::kCodata, 80, 7, 1)};
}

}  // namespace

TEST_CASE("xi3 acts by the mode") {
  auto ch = handle(test::hydrogen(1, -1));
  FamilyFunction g{ch, 0, QsPolynomial::constant(QsNumber(1L))};
  auto r = apply_xi3(g);
  CHECK(r.scale.re == ch->lambda());
  CHECK(r.func.poly == g.poly);
  FamilyFunction g2{ch, 2, g.poly};
  CHECK(apply_xi3(g2).scale.re == ch->lambda() + QsNumber(2L));
  FamilyFunction z{ch, 1, {}};
  CHECK(FamilySum(apply_xi3(z)).is_zero());
}

TEST_CASE("raising and lowering on the ground state") {
  for (const auto& c : channels()) {
    auto ch = handle(c);
    FamilyFunction g{ch, 0, QsPolynomial::constant(QsNumber(1L))};
    CHECK(apply_xi_minus(g).func.poly.is_zero());
    auto up = apply_xi_plus(g);
    CHECK(up.scale == GaussQs::i());
    CHECK(up.func.offset == 1);
    QsPolynomial expected(std::vector<QsNumber>{c.s() * QsNumber(2L) + QsNumber(1L), QsNumber(-2L)});
    CHECK(up.func.poly == expected);
    CHECK(xi_plus(xi_minus(FamilySum(g))).is_zero());
  }
}

TEST_CASE("raising operator matches finite differences of the raw operator") {
  // Ξ₊ = i e^{iφ}(∂x − e^x − i∂φ + ½) applied to sampled values in x.
  const Precision bits = 256;
  auto c = test::hydrogen(3, -1);
  auto ch = handle(c);
  QsPolynomial q(std::vector<QsNumber>{QsNumber(1L), c.s(), QsNumber(make_rational(-1, 3))});
  FamilyFunction f{ch, 1, q};
  QsPolynomial image = raising_poly(c, f.mu(), q);
  Real s = sqrt(Real(c.s2, bits));
  Real mu = embed(f.mu(), bits);
  auto value = [&](const QsPolynomial& p, const Real& x) {
    Real rho = exp(x);
    return pow(rho, s) * exp(-rho) * evaluate(p, rho);
  };
  Real h = pow10(-12, bits);
  for (long k = -3; k <= 3; ++k) {
    Real x = Real(make_rational(k, 2), bits);
    Real deriv = (value(q, x + h) - value(q, x - h)) / (h * 2);
    // −i∂φ on e^{iμφ} gives μ
    Real raw = deriv - exp(x) * value(q, x) + mu * value(q, x) + value(q, x) / 2;
    CHECK(close(raw, value(image, x), pow10(-20, bits)));
  }
}

TEST_CASE("casimir: composed and explicit forms agree") {
  std::mt19937_64 rng(3);
  for (const auto& c : channels()) {
    auto ch = handle(c);
    for (int t = 0; t < 5; ++t) {
      FamilySum f = random_member(rng, ch);
      CHECK((casimir_composed(f) - casimir_explicit(f)).is_zero());
    }
    FamilyFunction g{ch, 0, QsPolynomial::constant(QsNumber(1L))};
    auto ev = casimir_eigenvalue(g);
    REQUIRE(ev.has_value());
    CHECK(*ev == QsNumber(c.j * (c.j + 1) - c.params.zeta * c.params.zeta));
    auto st = build_state(c, 3);
    auto ev3 = casimir_eigenvalue(plus_component(st));
    REQUIRE(ev3.has_value());
    CHECK(*ev3 == QsNumber(c.xi));
    CHECK(*ev3 == c.lambda() * (c.lambda() - QsNumber(1L)));
  }
}

TEST_CASE("commutators vanish on random family members") {
  std::mt19937_64 rng(2024);
  int members = 0;
  for (const auto& c : channels()) {
    auto ch = handle(c);
    for (int t = 0; t < 16; ++t) {
      FamilySum f = random_member(rng, ch);
      ++members;
      for (Commutator which : kAllCommutators) {
        INFO(name(which));
        CHECK(commutator_check(f, which).is_zero());
      }
    }
  }
  CHECK(members >= 100);
}

TEST_CASE("commutator examples") {
  auto c = test::hydrogen(3, -1);
  auto st = build_state(c, 4);
  FamilySum f = plus_component(st);
  CHECK(commutator_check(f, Commutator::XiPlusXiMinus).is_zero());
  FamilySum g = plus_component(ground_state(c));
  CHECK(commutator_check(g, Commutator::Xi3XiPlus).is_zero());
  // a deliberately wrong relation is caught
  FamilySum wrong = xi_plus(xi_minus(f)) - xi_minus(xi_plus(f)) - xi3(f).scaled({QsNumber(2L), QsNumber(0L)});
  CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("inner product") {
  const Precision bits = 256;
  auto c = test::hydrogen(1, -1);
  auto ch = handle(c);
  FamilyFunction g{ch, 0, QsPolynomial::constant(QsNumber(1L))};
  FamilyFunction g1{ch, 1, QsPolynomial::constant(QsNumber(1L))};
  auto z = inner_product(g, g1, bits);
  CHECK(z.exact_zero);
  auto n = inner_product(g, g, bits);
  CHECK_FALSE(n.exact_zero);
  Real s = sqrt(Real(c.s2, bits));
  Real lam = s + Real(make_rational(1, 2), bits);
  Real expected = tgamma(lam * 2 - 1) / exp2(lam * 2 - 1);
  CHECK(close(n.value.re, expected, pow10(-70, bits)));
  CHECK(n.value.im.is_zero());
  Real N_lambda = exp2(lam - Real(make_rational(1, 2), bits)) / sqrt(tgamma(lam * 2 - 1));
  CHECK(close(n.value.re * N_lambda * N_lambda, Real(1L, bits), pow10(-70, bits)));
}

TEST_CASE("hermiticity of xi1, xi2, xi3 and adjointness of xi+") {
  const Precision bits = 256;
  const Real tol = pow10(-static_cast<long>(bits / 4), bits);
  std::mt19937_64 rng(99);
  for (const auto& c : channels()) {
    auto ch = handle(c);
    for (int t = 0; t < 3; ++t) {
      FamilySum f = random_member(rng, ch), g = random_member(rng, ch);
      for (auto op : {&xi1, &xi2, &xi3}) {
        Complex lhs = inner_product(op(f), g, bits).value;
        Complex rhs = inner_product(f, op(g), bits).value;
        Real scale = max(Real(1L, bits), abs(lhs));
        CHECK(abs(lhs - rhs) <= tol * scale);
      }
      Complex lhs = inner_product(xi_plus(f), g, bits).value;
      Complex rhs = inner_product(f, xi_minus(g), bits).value;
      CHECK(abs(lhs - rhs) <= tol * max(Real(1L, bits), abs(lhs)));
    }
  }
}

TEST_CASE("k raises then k lowerings give the product of squared ladder coefficients") {
  for (const auto& c : channels()) {
    auto ch = handle(c);
    FamilyFunction g{ch, 0, QsPolynomial::constant(QsNumber(1L))};
    for (int k = 1; k <= 5; ++k) {
      FamilySum f = g;
      for (int i = 0; i < k; ++i) f = xi_plus(f);
      for (int i = 0; i < k; ++i) f = xi_minus(f);
      REQUIRE(f.modes().size() == 1);
      const auto& q = f.modes().begin()->second;
      CHECK(q.im.is_zero());
      QsNumber product(1L);
      for (int i = 0; i < k; ++i) {
        QsNumber mu = c.lambda() + QsNumber(Rational(i));
        product = product * ladder_radicand(c.lambda(), mu, Direction::Up);
      }
      CHECK(q.re == QsPolynomial::constant(product));
      CHECK(build_state(c, k).ladder_norm_squared == product);
    }
  }
}
