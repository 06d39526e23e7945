#include "doctest.h"
#include "dsu/serialize.hpp"
#include "support.hpp"

using namespace dsu;
using nlohmann::json;

TEST_CASE("spectrum table ordering and degeneracy") {
  auto rows = spectrum_table(make_params(test::kCodata, 1), 3, 256);
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    CHECK((a.N < b.N || (a.N == b.N && a.channel.j <= b.channel.j)));
    if (a.N == b.N && a.channel.j == b.channel.j) CHECK(a.E.str(80) == b.E.str(80));
  }
  auto one = spectrum_table(make_params(test::kCodata, 1), 1, 256);
  REQUIRE(one.size() == 1);
  CHECK(one[0].channel.eps == -1);
  CHECK(one[0].channel.orbital_l() == 0);
}

TEST_CASE("spectrum JSON round-trips") {
  for (Precision bits : {128u, 256u}) {
    auto doc = json::parse(spectrum_json(make_params(test::kCodata, 80), 4, bits).dump());
    CHECK(doc["schema"] == "dirac-su11/1");
    auto params = make_params(parse_rational(doc["c"].get<std::string>()), doc["Z"].get<int>());
    for (const auto& r : doc["rows"]) {
      auto ch = make_channel(params, parse_half_integer(r["j"].get<std::string>()), r["eps"].get<int>());
      auto again = to_json(spectral_point(ch, r["n"].get<int>(), r["precision"].get<unsigned>()));
      CHECK(again == r);
    }
  }
}

TEST_CASE("CSV layout") {
  auto csv = spectrum_csv(make_params(test::kCodata, 1), 2, 128);
  CHECK(csv.rfind("N,j,eps,l,n,mu,E,binding\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find(';') == std::string::npos);

  auto table = nonrelativistic_limit_table(make_rational(1, 2), -1, 0, {Rational(100)}, 128, 1);
  auto lim = limit_csv(table, 128);
  CHECK(lim.rfind("c,binding,bohr,difference,c2_difference\n", 0) == 0);
  CHECK(std::count(lim.begin(), lim.end(), '\n') == 2);
  CHECK(to_json(table, 128)["fitted_exponent"].is_null());
}

TEST_CASE("state JSON") {
  auto ch = test::hydrogen(1, -1);
  auto pair = normalize(assemble(build_state(ch, 2)));
  auto doc = state_json(pair, laguerre_cross_check(pair.state, 256), node_count(pair));
  CHECK(doc["kind"] == "state");
  CHECK(doc["nodes"] == 2);
  CHECK(doc["laguerre"]["ratio_plus"] == "2");
  CHECK(doc["laguerre"]["hypergeometric_match"] == true);
  CHECK(doc["psi_plus"].size() == 3);
}
