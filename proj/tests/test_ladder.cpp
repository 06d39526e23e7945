#include "doctest.h"
#include "dsu/errors.hpp"
#include "dsu/ladder.hpp"
#include "support.hpp"

using namespace dsu;
using dsu::test::close;

TEST_CASE("ladder coefficients") {
  const Precision bits = 256;
  auto c = test::hydrogen(1, -1);
  QsNumber lam = c.lambda();
  CHECK(ladder_coefficient(lam, lam, Direction::Down, bits).is_zero());
  Real up = ladder_coefficient(lam, lam, Direction::Up, bits);
  CHECK(close(up, sqrt(embed(lam, bits) * 2), pow10(-70, bits)));
  Real down = ladder_coefficient(lam, lam + QsNumber(1L), Direction::Down, bits);
  CHECK(down < 0);
  CHECK(close(-down, up, pow10(-70, bits)));
  CHECK_THROWS_AS(ladder_coefficient(lam, lam - QsNumber(1L), Direction::Down, bits), DomainError);
}

TEST_CASE("ground state") {
  auto c = test::hydrogen(1, -1);
  auto g = ground_state(c);
  CHECK(g.n() == 0);
  CHECK(g.psi_plus == QsPolynomial::constant(QsNumber(1L)));
  CHECK(g.psi_minus.is_zero());
  CHECK(lower(g).zero);
  CHECK(lower(lower(g)).zero);
  CHECK(lower(lower(g)).psi_plus.is_zero());
  CHECK(raise(lower(g)).zero);
}

TEST_CASE("raise from ground") {
  auto c = test::hydrogen(1, -1);
  auto r = raise(ground_state(c));
  CHECK(r.n() == 1);
  CHECK(r.psi_plus == QsPolynomial(std::vector<QsNumber>{c.s() * QsNumber(2L) + QsNumber(1L), QsNumber(-2L)}));
  CHECK(r.psi_minus.degree() == 0);
  auto back = lower_step(r);
  CHECK(back.state.psi_plus == QsPolynomial::constant(QsNumber(1L)));
  CHECK(back.state.psi_minus.is_zero());
  // Ξ₋Ξ₊ on the ground gives the positive scalar (C⁺)² = 2λ
  GaussQs total = raise_step(ground_state(c)).factor * back.factor;
  CHECK(total.im == QsNumber(0L));
  CHECK(total.re == c.lambda() * QsNumber(2L));
}

TEST_CASE("degrees, exactness and round trips") {
  for (long tj = 1; tj <= 7; tj += 2) {
    for (int eps : {-1, 1}) {
      for (int Z : {1, 80}) {
        auto c = test::channel(test::kCodata, Z, tj, eps);
        LadderState st = ground_state(c);
        for (int n = 1; n <= 20; ++n) {
          LadderState next = raise(st);
          CHECK(next.psi_plus.degree() == n);
          CHECK(next.psi_minus.degree() == n - 1);
          CHECK(lower(next).psi_plus == st.psi_plus);
          CHECK(lower(next).psi_minus == st.psi_minus);
          // leading coefficient (−2)^n: real with sign (−1)^n
          CHECK(sign(next.psi_plus.leading()) == (n % 2 ? -1 : 1));
          st = std::move(next);
        }
        CHECK(st.psi_plus.coefficients().front().modulus_handle() == c.s2_handle);
      }
    }
  }
}

TEST_CASE("raise-lower scalar matches ladder coefficients") {
  const Precision bits = 256;
  auto c = test::hydrogen(3, -1);
  LadderState st = ground_state(c);
  for (int n = 0; n <= 10; ++n) {
    auto up = raise_step(st);
    auto down = lower_step(up.state);
    GaussQs f = up.factor * down.factor;
    CHECK(f.im == QsNumber(0L));
    Real cp = ladder_coefficient(c.lambda(), st.spectral.mu, Direction::Up, bits);
    Real cm = ladder_coefficient(c.lambda(), up.state.spectral.mu, Direction::Down, bits);
    // i·i·L₋L₊ = −C⁺_μ C⁻_{μ+1}
    CHECK(close(embed(f.re, bits), -(cp * cm), pow10(-60, bits)));
    // ⟨Ξ₊Ξ₋⟩ at μ+1 = μ(μ+1) − λ(λ−1) exactly
    QsNumber mu1 = up.state.spectral.mu;
    CHECK(ladder_radicand(c.lambda(), mu1, Direction::Down) ==
          mu1 * (mu1 - QsNumber(1L)) - c.lambda() * (c.lambda() - QsNumber(1L)));
    st = up.state;
  }
}

TEST_CASE("build_state") {
  auto c = test::hydrogen(1, -1);
  CHECK(build_state(c, 0).psi_plus == ground_state(c).psi_plus);
  auto s2 = build_state(c, 2);
  CHECK(s2.psi_plus.degree() == 2);
  CHECK(s2.psi_minus.degree() == 1);
  CHECK_THROWS_AS(build_state(c, 65), DomainError);
  CHECK_NOTHROW(build_state(c, 8, 128, 8));
  CHECK_THROWS_AS(build_state(c, -1), DomainError);
  auto s20 = build_state(test::hydrogen(7, -1), 20);
  for (const auto& k : s20.psi_plus.coefficients()) CHECK((!k.is_bound() || k.modulus_handle() == s20.channel().s2_handle));
}

TEST_CASE("states with different n are orthogonal") {
  auto c = test::hydrogen(1, -1);
  auto a = build_state(c, 2), b = build_state(c, 3);
  CHECK(inner_product(plus_component(a), plus_component(b)).exact_zero);
}
