#include <set>

#include "doctest.h"
#include "dsu/jl.hpp"
#include "support.hpp"

using namespace dsu;
using dsu::test::close;

TEST_CASE("FG matrix structure") {
  const Precision bits = 256;
  auto ch = test::hydrogen(1, 1);
  auto p = spectral_point(ch, 0, bits);
  auto J = jl_fg_matrix(p, bits);
  Real c(test::kCodata, bits), c2 = c * c;
  CHECK(close(J.m[0][0].re, Real(1L, bits) / c, pow10(-70, bits)));
  CHECK(J.m[0][0].im.is_zero());
  CHECK(close(J.m[0][1].im, -(c2 + p.E) / c2, pow10(-70, bits)));
  CHECK(close(J.m[1][0].im, (c2 - p.E) / c2, pow10(-60, bits)));
  // det = ζ² − τ²k²/c⁴
  Real zeta(ch.params.zeta, bits);
  Real expected = zeta * zeta - p.k * p.k / (c2 * c2);
  CHECK(close(J.determinant().re, expected, pow10(-60, bits)));

  auto Jm = jl_fg_matrix(spectral_point(test::hydrogen(1, -1), 0, bits), bits);
  CHECK(Jm.m[0][0].re == J.m[0][0].re);
  CHECK(Jm.m[0][1].im == -J.m[0][1].im);
  CHECK(Jm.m[1][0].im == -J.m[1][0].im);

  // E → c²: the lower off-diagonal vanishes
  auto far = jl_fg_matrix(spectral_point(ch, 60, bits), bits);
  CHECK(abs(far.m[1][0].im) < pow10(-6, bits));
}

TEST_CASE("psi action agrees with the similarity transform") {
  const Precision bits = 256;
  for (int Z : {1, 80}) {
    for (long tj : {1L, 3L, 5L}) {
      for (int eps : {-1, 1}) {
        auto ch = test::channel(test::kCodata, Z, tj, eps);
        for (int n = 0; n <= 3; ++n) {
          auto a = jl_psi_action(build_state(ch, n, bits), bits);
          CHECK(a.deviation < pow10(-60, bits));
          // text form ζ[1 ∓ τ/M]
          auto p = spectral_point(ch, n, bits);
          Real zeta(ch.params.zeta, bits), tau(ch.tau, bits);
          CHECK(close(a.coeff_plus, zeta * (Real(1L, bits) - tau / p.apparent_principal), pow10(-60, bits)));
          CHECK(close(a.coeff_minus, zeta * (Real(1L, bits) + tau / p.apparent_principal), pow10(-60, bits)));
          if (n >= 1) {
            CHECK_FALSE(a.coeff_plus.is_zero());
            CHECK(abs(a.coeff_minus) > pow10(-40, bits));
            CHECK(abs(a.coeff_plus) > pow10(-40, bits));
          }
        }
      }
    }
  }
  auto g = jl_psi_action(ground_state(test::hydrogen(1, -1)));
  CHECK(abs(g.coeff_minus) < pow10(-70, 256));
}

TEST_CASE("diagonal set") {
  for (int Z : {1, 80}) {
    auto rows = diagonality_scan(make_params(test::kCodata, Z), make_rational(5, 2), 3);
    CHECK(rows.size() == 3 * 2 * 4);
    std::set<std::string> diagonal;
    for (const auto& r : rows) {
      if (r.is_diagonal) diagonal.insert(r.label);
      if (r.n >= 1) CHECK_FALSE(r.is_diagonal);
    }
    CHECK(diagonal == std::set<std::string>{"1s", "2p", "3d"});
  }
  auto zero = diagonality_scan(make_params(test::kCodata, 1), make_rational(5, 2), 0);
  for (const auto& r : zero) CHECK(r.is_diagonal == (r.eps < 0));
}

TEST_CASE("labels") {
  CHECK(spectroscopic_label(1, 0) == "1s");
  CHECK(spectroscopic_label(3, 2) == "3d");
  CHECK(spectroscopic_label(5, 4) == "5g");
  auto rows = diagonality_scan(make_params(test::kCodata, 1), make_rational(1, 2), 1);
  // j = ½: ε = −1 gives s states, ε = +1 gives p states
  CHECK(rows[0].label == "1s");
  CHECK(rows[1].label == "2s");
  CHECK(rows[2].label == "1p");
  CHECK_FALSE(rows[2].physical);
  CHECK(rows[3].label == "2p");
  CHECK(rows[1].coeff_plus.to_double() > 0);
}
