#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "dsu/errors.hpp"
#include "dsu/wavefunctions.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dsu;
using dsu::test::close;

using test::hypergeometric_oracle;
using test::norm_oracle;

TEST_CASE("ground pair has G/F = −nu") {
  const Precision bits = 256;
  auto ch = test::hydrogen(1, -1);
  auto pair = assemble(ground_state(ch, bits), bits);
  for (long k : {1L, 3L, 10L}) {
    auto smp = evaluate_pair(pair, Real(make_rational(k, 4), bits));
    CHECK(smp.F > 0);
    CHECK(close(smp.G / smp.F, -pair.spectral().nu, pow10(-70, bits)));
  }
  CHECK(pair.f_poly.degree() == 0);
  CHECK(pair.g_poly == -pair.f_poly);
}

TEST_CASE("unphysical member rejected") {
  CHECK_THROWS_AS(assemble(ground_state(test::hydrogen(1, 1))), DomainError);
  CHECK_NOTHROW(assemble(build_state(test::hydrogen(1, 1), 1)));
}

TEST_CASE("normalization") {
  const Precision bits = 256;
  const Real tol = pow10(-60, bits);
  for (long tj : {1L, 3L}) {
    for (int eps : {-1, 1}) {
      for (int Z : {1, 80}) {
        auto ch = test::channel(test::kCodata, Z, tj, eps);
        for (int n = has_bound_state(ch, 0) ? 0 : 1; n <= 10; ++n) {
          auto st = build_state(ch, n, bits);
          auto pair = assemble(st, bits);
          CHECK(close(radial_norm_integral(pair, bits), norm_oracle(st, bits), tol));
          auto normed = normalize(pair, bits);
          CHECK(abs(radial_norm_integral(normed, bits) - 1) < tol);
          REQUIRE(normed.state.norm_constant.has_value());
        }
      }
    }
  }
}

TEST_CASE("normalization against numerical quadrature") {
  auto ch = test::hydrogen(3, -1);
  for (int n : {0, 2, 5}) {
    auto pair = normalize(assemble(build_state(ch, n, 128), 128), 128);
    boost::math::quadrature::tanh_sinh<double> q;
    double total = q.integrate(
        [&](double rho) {
          if (rho <= 0) return 0.0;
          auto smp = evaluate_pair(pair, Real::from_long_double(rho, 128));
          double F = smp.F.to_double(), G = smp.G.to_double();
          return F * F + G * G;
        },
        0.0, std::numeric_limits<double>::infinity());
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("ground normalization constants") {
  const Precision bits = 256;
  for (int Z : {1, 40}) {
    auto ch = test::channel(test::kCodata, Z, 1, -1);
    auto normed = normalize(assemble(ground_state(ch, bits), bits), bits);
    auto k = ground_constants(ch, bits);
    CHECK(close(*normed.state.norm_constant, k.N * k.N_lambda, pow10(-70, bits)));
    Real c(test::kCodata, bits);
    Real s = sqrt(Real(ch.s2, bits));
    CHECK(close(k.N, Real(1L, bits) / sqrt(c * c * s * 2), pow10(-70, bits)));
  }
}

TEST_CASE("laguerre polynomials") {
  auto ch = test::hydrogen(1, -1);
  QsNumber a = ch.s() * QsNumber(2L);
  CHECK(laguerre_poly(0, a) == QsPolynomial::constant(QsNumber(1L)));
  CHECK(laguerre_poly(1, a) == QsPolynomial(std::vector<QsNumber>{a + QsNumber(1L), QsNumber(-2L)}));
  // L₂^α(y) = (α+1)(α+2)/2 − (α+2)y + y²/2 at y = 2ρ
  QsNumber a1 = a + QsNumber(1L), a2 = a + QsNumber(2L);
  QsPolynomial l2(std::vector<QsNumber>{a1 * a2 * QsNumber(make_rational(1, 2)), -(a2 * QsNumber(2L)), QsNumber(2L)});
  CHECK(laguerre_poly(2, a) == l2);
  for (int n = 0; n <= 20; ++n) {
    CHECK(laguerre_poly(n, a) == hypergeometric_oracle(n, a));
    CHECK(hypergeometric_laguerre(n, a) == hypergeometric_oracle(n, a));
  }
}

TEST_CASE("laguerre cross check") {
  const Precision bits = 256;
  for (long tj : {1L, 3L, 5L, 7L}) {
    for (int eps : {-1, 1}) {
      auto ch = test::hydrogen(tj, eps);
      LadderState st = ground_state(ch, bits);
      Rational fact(1);
      for (int n = 0; n <= 20; ++n) {
        if (n > 0) {
          st = raise(st);
          fact *= n;
        }
        auto r = laguerre_cross_check(st, bits);
        CHECK(r.ratio_plus == QsNumber(fact));
        CHECK(r.hypergeometric_match);
        CHECK(is_zero(r.determinant));
        CHECK(abs(r.E_difference) < pow10(-30, bits));
        CHECK(r.off_shell_residual > pow10(-20, bits));
        CHECK(r.sonine_residual < pow10(-60, bits));
        if (n >= 1) {
          REQUIRE(r.ratio_minus.has_value());
          CHECK(*r.ratio_minus == QsNumber(Rational(fact / n)));
          CHECK(r.system_exact_zero);
        }
      }
    }
  }
}

TEST_CASE("node counts") {
  for (long tj : {1L, 3L, 5L}) {
    for (int eps : {-1, 1}) {
      auto ch = test::hydrogen(tj, eps);
      for (int n = has_bound_state(ch, 0) ? 0 : 1; n <= 10; ++n) {
        auto pair = assemble(build_state(ch, n, 128), 128);
        const int expected = eps < 0 ? n : n - 1;
        CHECK(node_count(pair) == expected);
        // grid sign changes as a cross-check
        auto sampled = sample(pair, geometric_grid(Real(make_rational(1, 1000), 128), Real(80L, 128), 800));
        int changes = 0;
        for (std::size_t i = 1; i < sampled.samples.size(); ++i) {
          if ((sampled.samples[i].F > 0) != (sampled.samples[i - 1].F > 0)) ++changes;
        }
        CHECK(changes == expected);
      }
    }
  }
}

TEST_CASE("sampling") {
  const Precision bits = 256;
  auto ch = test::hydrogen(1, -1);
  auto pair = normalize(assemble(ground_state(ch, bits), bits), bits);
  auto near0 = evaluate_pair(pair, pow10(-30, bits));
  CHECK(abs(near0.F) < pow10(-25, bits));
  auto far = evaluate_pair(pair, Real(200L, bits));
  CHECK(abs(far.F) < pow10(-80, bits));
  Real s = sqrt(Real(ch.s2, bits));
  Real h = pow10(-3, bits);
  Real peak = evaluate_pair(pair, s).F;
  CHECK(evaluate_pair(pair, s + h).F < peak);
  CHECK(evaluate_pair(pair, s - h).F < peak);
  CHECK_THROWS_AS(evaluate_pair(pair, Real(0L, bits)), DomainError);

  auto grid = default_grid(pair.spectral(), bits);
  CHECK(grid.size() == 400);
  CHECK(close(grid.front(), pow10(-3, bits), pow10(-70, bits)));
  CHECK(close(grid.back(), (s + 1) * 5, pow10(-70, bits)));
  auto sampled = sample(pair, grid);
  std::string csv = samples_csv(sampled, 20);
  CHECK(csv.rfind("rho,F,G\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 401);
}
