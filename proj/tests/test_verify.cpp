#include <chrono>

#include "doctest.h"
#include "dsu/errors.hpp"
#include "dsu/verify.hpp"
#include "support.hpp"

using namespace dsu;
using dsu::test::close;

namespace {

bool all_zero(const std::vector<ResidualReport>& rs) {
  for (const auto& r : rs) {
    if (!r.is_exact_zero) return false;
  }
  return true;
}

bool none_zero(const std::vector<ResidualReport>& rs) {
  for (const auto& r : rs) {
    if (r.is_exact_zero) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ground residuals") {
  auto ch = test::hydrogen(1, -1);
  auto st = ground_state(ch);
  CHECK(all_zero(first_order_residual(assemble(st))));
  auto second = second_order_residual(st);
  CHECK(all_zero(second));
  CHECK(second[3].residual.is_zero());  // ψ₋ vanishes
}

TEST_CASE("excited residuals and off-shell control") {
  auto ch = test::hydrogen(5, -1);
  auto st = build_state(ch, 3);
  CHECK(all_zero(first_order_residual(assemble(st))));
  CHECK(all_zero(second_order_residual(st)));
  auto off = first_order_residual(assemble(st), ShellShift{make_rational(1, 10)});
  CHECK(none_zero(off));
  for (const auto& r : off) CHECK(r.max_abs_embedded > 0);
  auto off2 = second_order_residual(st, ShellShift{make_rational(1, 10)});
  CHECK(none_zero(off2));
}

TEST_CASE("unphysical member fails the coupled system") {
  auto st = ground_state(test::hydrogen(1, 1));
  auto r = second_order_residual(st);
  CHECK_FALSE(r[1].is_exact_zero);
  CHECK(r[2].is_exact_zero);
}

TEST_CASE("second-order operator equals the casimir at fixed mode") {
  for (long tj : {1L, 3L, 7L}) {
    auto ch = test::hydrogen(tj, -1);
    for (int off = 0; off < 4; ++off) {
      QsNumber mu = ch.lambda() + QsNumber(Rational(off));
      QsPolynomial q(std::vector<QsNumber>{QsNumber(3L), ch.s(), QsNumber(make_rational(-2, 7)), QsNumber(1L)});
      CHECK(second_order_operator(ch, mu, q) == casimir_poly(ch, mu, q) - q * QsNumber(ch.xi));
    }
  }
}

TEST_CASE("residual suite, n <= 20") {
  auto t0 = std::chrono::steady_clock::now();
  for (int Z : {1, 40, 80}) {
    for (long tj = 1; tj <= 7; tj += 2) {
      for (int eps : {-1, 1}) {
        auto ch = test::channel(test::kCodata, Z, tj, eps);
        LadderState st = ground_state(ch);
        for (int n = 0; n <= 20; ++n) {
          if (n > 0) st = raise(st);
          if (!has_bound_state(ch, n)) continue;
          INFO("Z=" << Z << " 2j=" << tj << " eps=" << eps << " n=" << n);
          CHECK(all_zero(first_order_residual(assemble(st))));
          CHECK(all_zero(second_order_residual(st)));
        }
      }
    }
  }
  MESSAGE("residual suite seconds: "
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

TEST_CASE("shooting oracle") {
  for (auto [Z, tj, eps, n] : {std::tuple{1, 1L, -1, 0}, std::tuple{1, 1L, -1, 1}, std::tuple{1, 1L, 1, 1},
                               std::tuple{80, 1L, -1, 0}, std::tuple{40, 3L, 1, 3}}) {
    auto ch = test::channel(test::kCodata, Z, tj, eps);
    auto o = shooting_oracle(ch, n);
    auto p = spectral_point(ch, n);
    INFO("Z=" << Z << " 2j=" << tj << " eps=" << eps << " n=" << n);
    CHECK(relative_binding_error(o, p) < pow10(-10, 256));
    CHECK(o.E_lo <= o.E_hi);
    CHECK(o.steps > 0);
  }
  // the oracle knows the binding independently
  auto o = shooting_oracle(test::hydrogen(1, -1), 0);
  CHECK(std::abs(o.binding_oracle.to_double() + 0.5000066566) < 1e-9);
  CHECK_THROWS_AS(shooting_oracle(test::hydrogen(1, 1), 0), DomainError);
}

TEST_CASE("oracle disagrees with a displaced spectrum") {
  auto ch = test::hydrogen(1, -1);
  auto o = shooting_oracle(ch, 1);
  Real sn = sqrt(Real(ch.s2, 256)) + 1 + Real(make_rational(1, 10), 256);
  SpectralPoint p = spectral_point(ch, 1);
  p.E = dirac_energy(ch.params.c, ch.params.zeta, sn);
  p.binding = p.E - Real(Rational(ch.params.c * ch.params.c), 256);
  CHECK(relative_binding_error(o, p) > pow10(-3, 256));
}

TEST_CASE("orthonormality") {
  const Precision bits = 256;
  const Real tol = pow10(-60, bits);
  auto ch = test::hydrogen(1, -1);
  auto g = orthonormality_matrix({ground_state(ch)}, bits);
  REQUIRE(g.size() == 1);
  CHECK(abs(g[0][0].value.re - 1) < tol);
  std::vector<LadderState> states;
  for (int n = 0; n <= 5; ++n) states.push_back(build_state(ch, n, bits));
  auto m = orthonormality_matrix(states, bits);
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (a == b) {
        CHECK(abs(m[a][b].value.re - 1) < tol);
        CHECK(abs(m[a][b].value.im) < tol);
      } else {
        CHECK(m[a][b].exact_zero);
      }
    }
  }
  auto raw = orthonormality_matrix(states, bits, false);
  Real s = sqrt(Real(ch.s2, bits));
  Real ground_norm = tgamma(s * 2) / exp2(s * 2);
  for (std::size_t a = 0; a < raw.size(); ++a) {
    CHECK(close(raw[a][a].value.re, embed(states[a].ladder_norm_squared, bits) * ground_norm, tol));
  }
}

TEST_CASE("divergence note") {
  auto note = negative_branch_divergence_note();
  CHECK(note.find("diverges") != std::string::npos);
  CHECK(note.find("square") != std::string::npos);
}

TEST_CASE("verification aggregate") {
  VerificationConfig cfg;
  cfg.c = test::kCodata;
  cfg.Z = {1};
  cfg.j_max = make_rational(3, 2);
  cfg.n_max = 2;
  cfg.commutator_samples = 3;
  auto rep = run_verification(cfg);
  for (const auto& c : rep.checks) {
    INFO(c.group << " " << c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(rep.passed());
  cfg.negative_control = true;
  cfg.oracle = false;
  auto bad = run_verification(cfg);
  CHECK_FALSE(bad.passed());
}
