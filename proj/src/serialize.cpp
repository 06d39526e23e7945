#include "dsu/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace dsu {

using nlohmann::json;

namespace {

std::string dec(const Real& x, Precision bits) { return x.str(decimal_digits(bits)); }

json header(const PhysicalParams& p, Precision precision) {
  return {{"schema", kSchema}, {"c", to_string(p.c)}, {"Z", p.Z}, {"precision", precision}};
}

}  // namespace

std::vector<SpectralPoint> spectrum_table(const PhysicalParams& params, int N_max, Precision precision) {
  std::vector<SpectralPoint> out;
  for (long N = 1; N <= N_max; ++N) {
    for (long tj = 1; tj <= 2 * N - 1; tj += 2) {
      const int n = static_cast<int>(N - (tj + 1) / 2);
      for (int eps : {-1, 1}) {
        Channel ch = make_channel(params, make_rational(tj, 2), eps);
        if (!has_bound_state(ch, n)) continue;
        out.push_back(spectral_point(ch, n, precision));
      }
    }
  }
  return out;
}

json to_json(const SpectralPoint& p) {
  const Precision bits = p.precision;
  const Channel& ch = p.channel;
  return {{"j", to_string(ch.j)},
          {"eps", ch.eps},
          {"l", ch.orbital_l()},
          {"n", p.n},
          {"N", p.N},
          {"mu", dec(p.mu_value, bits)},
          {"E", dec(p.E, bits)},
          {"binding", dec(p.binding, bits)},
          {"quantum_defect", dec(p.eps_j, bits)},
          {"precision", bits}};
}

json spectrum_json(const PhysicalParams& params, int N_max, Precision precision) {
  json out = header(params, precision);
  out["kind"] = "spectrum";
  out["rows"] = json::array();
  for (const auto& p : spectrum_table(params, N_max, precision)) out["rows"].push_back(to_json(p));
  return out;
}

std::string spectrum_csv(const PhysicalParams& params, int N_max, Precision precision) {
  std::ostringstream os;
  os << "N,j,eps,l,n,mu,E,binding\n";
  for (const auto& p : spectrum_table(params, N_max, precision)) {
    os << p.N << ',' << to_string(p.channel.j) << ',' << p.channel.eps << ',' << p.channel.orbital_l() << ',' << p.n
       << ',' << dec(p.mu_value, precision) << ',' << dec(p.E, precision) << ',' << dec(p.binding, precision) << '\n';
  }
  return os.str();
}

json to_json(const LaguerreReport& r, Precision precision) {
  json out{{"n", r.n},
           {"alpha", to_string(r.alpha)},
           {"ratio_plus", to_string(r.ratio_plus)},
           {"ratio_minus", r.ratio_minus ? json(to_string(*r.ratio_minus)) : json(nullptr)},
           {"a", to_string(r.a)},
           {"b", to_string(r.b)},
           {"linear_system_applicable", r.system_applicable},
           {"linear_system_exact_zero", r.system_exact_zero},
           {"determinant_exact_zero", is_zero(r.determinant)},
           {"E_eliminated", dec(r.E_eliminated, precision)},
           {"E_difference", r.E_difference.str(6)},
           {"off_shell_residual", r.off_shell_residual.str(6)},
           {"sonine_residual", r.sonine_residual.str(6)},
           {"hypergeometric_match", r.hypergeometric_match}};
  return out;
}

json state_json(const RadialPair& pair, const LaguerreReport& report, int nodes) {
  const SpectralPoint& p = pair.spectral();
  const Precision bits = p.precision;
  json out = header(p.channel.params, bits);
  out["kind"] = "state";
  out["spectral"] = to_json(p);
  auto poly = [](const QsPolynomial& q) {
    json arr = json::array();
    for (const auto& c : q.coefficients()) arr.push_back(to_string(c));
    return arr;
  };
  out["psi_plus"] = poly(pair.state.psi_plus);
  out["psi_minus"] = poly(pair.state.psi_minus);
  out["minus_weight"] = to_string(pair.state.minus_weight);
  out["f_scale"] = dec(pair.f_scale, bits);
  out["g_scale"] = dec(pair.g_scale, bits);
  out["norm_constant"] = pair.state.norm_constant ? json(dec(*pair.state.norm_constant, bits)) : json(nullptr);
  if (p.n == 0) {
    auto k = ground_constants(p.channel, bits);
    out["ground_N"] = dec(k.N, bits);
    out["ground_N_lambda"] = dec(k.N_lambda, bits);
  }
  out["nodes"] = nodes;
  out["laguerre"] = to_json(report, bits);
  return out;
}

json to_json(const VerificationReport& rep) {
  json out{{"schema", kSchema},
           {"kind", "verify"},
           {"c", to_string(rep.config.c)},
           {"Z", rep.config.Z},
           {"j_max", to_string(rep.config.j_max)},
           {"n_max", rep.config.n_max},
           {"precision", rep.config.precision},
           {"negative_control", rep.config.negative_control},
           {"passed", rep.passed()},
           {"failures", rep.failures()},
           {"divergence_note", rep.divergence_note}};
  out["checks"] = json::array();
  for (const auto& c : rep.checks) {
    out["checks"].push_back(
        {{"group", c.group}, {"name", c.name}, {"exact", c.exact}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out;
}

json to_json(const std::vector<DiagonalityRecord>& rows, const PhysicalParams& params, Precision precision) {
  json out = header(params, precision);
  out["kind"] = "jl";
  out["rows"] = json::array();
  for (const auto& r : rows) {
    out["rows"].push_back({{"label", r.label},
                           {"j", to_string(r.j)},
                           {"eps", r.eps},
                           {"n", r.n},
                           {"coeff_plus", dec(r.coeff_plus, precision)},
                           {"coeff_minus", dec(r.coeff_minus, precision)},
                           {"physical", r.physical},
                           {"is_diagonal", r.is_diagonal}});
  }
  return out;
}

std::string diagonality_csv(const std::vector<DiagonalityRecord>& rows, Precision precision) {
  std::ostringstream os;
  os << "label,j,eps,n,coeff_plus,coeff_minus,is_diagonal\n";
  for (const auto& r : rows) {
    os << r.label << ',' << to_string(r.j) << ',' << r.eps << ',' << r.n << ',' << dec(r.coeff_plus, precision) << ','
       << dec(r.coeff_minus, precision) << ',' << (r.is_diagonal ? "true" : "false") << '\n';
  }
  return os.str();
}

json to_json(const LimitTable& t, Precision precision) {
  json out{{"schema", kSchema}, {"kind", "limit"}, {"N", t.N}, {"precision", precision}};
  out["rows"] = json::array();
  for (const auto& r : t.rows) {
    out["rows"].push_back({{"c", to_string(r.c)},
                           {"binding", dec(r.binding, precision)},
                           {"bohr", dec(r.bohr, precision)},
                           {"difference", dec(r.difference, precision)},
                           {"c2_difference", dec(r.difference * Real(Rational(r.c * r.c), precision), precision)}});
  }
  out["fitted_exponent"] = t.fitted_exponent ? json(*t.fitted_exponent) : json(nullptr);
  return out;
}

std::string limit_csv(const LimitTable& t, Precision precision) {
  std::ostringstream os;
  os << "c,binding,bohr,difference,c2_difference\n";
  for (const auto& r : t.rows) {
    os << to_string(r.c) << ',' << dec(r.binding, precision) << ',' << dec(r.bohr, precision) << ','
       << dec(r.difference, precision) << ',' << dec(r.difference * Real(Rational(r.c * r.c), precision), precision)
       << '\n';
  }
  return os.str();
}

}  // namespace dsu
