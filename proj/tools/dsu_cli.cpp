#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirac_su11.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIdentity = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(dsu_status s) {
  switch (s) {
    case DSU_OK:
      return kExitOk;
    case DSU_ERR_USAGE:
    case DSU_ERR_DOMAIN:
    case DSU_ERR_DIVISION:
      return kExitUsage;
    case DSU_ERR_IDENTITY:
    case DSU_ERR_NUMERICAL:
      return kExitIdentity;
    default:
      return 1;
  }
}

void check(dsu_status s) {
  if (s != DSU_OK) throw Failure{exit_code(s), dsu_last_error()};
}

// Owns a string handed out by the library.
struct Text {
  char* p = nullptr;
  ~Text() { dsu_free_string(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ContextDeleter {
  void operator()(dsu_context* c) const { dsu_context_destroy(c); }
};
struct StateDeleter {
  void operator()(dsu_state* s) const { dsu_state_destroy(s); }
};
using Context = std::unique_ptr<dsu_context, ContextDeleter>;
using State = std::unique_ptr<dsu_state, StateDeleter>;

struct Common {
  std::string c = "137.035999084";
  std::vector<int> Z{1};
  unsigned precision = 256;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* sub, Common& o, bool many_Z) {
  sub->add_option("--c", o.c, "speed of light in atomic units (exact decimal or p/q)")->capture_default_str();
  auto* z = sub->add_option("--Z", o.Z, many_Z ? "nuclear charges" : "nuclear charge");
  if (!many_Z) z->expected(1);
  sub->add_option("--precision", o.precision, "working precision in bits")->capture_default_str();
  sub->add_option("--format", o.format, "machine output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "write machine output to this path ('-' for stdout)");
}

dsu_format fmt(const Common& o) { return o.format == "csv" ? DSU_FORMAT_CSV : DSU_FORMAT_JSON; }

Context open(const Common& o, int Z) {
  dsu_context* ctx = nullptr;
  check(dsu_context_create(o.c.c_str(), Z, o.precision, &ctx));
  return Context(ctx);
}

// Machine output goes to --out; the human summary to stdout unless --out is '-'.
void deliver(const Common& o, const std::string& machine, const std::string& summary) {
  if (o.out == "-") {
    std::cout << machine;
    if (!machine.empty() && machine.back() != '\n') std::cout << '\n';
    return;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Failure{kExitUsage, "cannot open '" + o.out + "' for writing"};
    f << machine;
    if (!machine.empty() && machine.back() != '\n') f << '\n';
  }
  std::cout << summary;
}

// Truncates the mantissa and keeps the exponent.
std::string shorten(const std::string& decimal, std::size_t keep = 22) {
  auto e = decimal.find_first_of("eE");
  std::string mant = decimal.substr(0, e);
  std::string exp = e == std::string::npos ? "" : decimal.substr(e);
  if (mant.size() > keep) mant = mant.substr(0, keep);
  return mant + exp;
}

int run_spectrum(const Common& o, int N_max) {
  auto ctx = open(o, o.Z.front());
  Text js;
  check(dsu_spectrum(ctx.get(), N_max, DSU_FORMAT_JSON, &js.p));
  std::string machine = js.str();
  if (fmt(o) == DSU_FORMAT_CSV) {
    Text csv;
    check(dsu_spectrum(ctx.get(), N_max, DSU_FORMAT_CSV, &csv.p));
    machine = csv.str();
  }
  auto doc = json::parse(js.str());
  std::ostringstream s;
  s << "Dirac-Coulomb spectrum  Z=" << doc["Z"].get<int>() << "  c=" << o.c << "  precision=" << o.precision
    << " bits\n";
  s << std::left << std::setw(4) << "N" << std::setw(6) << "j" << std::setw(5) << "eps" << std::setw(4) << "l"
    << std::setw(4) << "n" << "binding (E - c^2)\n";
  for (const auto& r : doc["rows"]) {
    s << std::setw(4) << r["N"].get<long>() << std::setw(6) << r["j"].get<std::string>() << std::setw(5)
      << r["eps"].get<int>() << std::setw(4) << r["l"].get<int>() << std::setw(4) << r["n"].get<int>()
      << shorten(r["binding"].get<std::string>(), 32) << '\n';
  }
  deliver(o, machine, s.str());
  return kExitOk;
}

int run_state(const Common& o, const std::string& j, int eps, int n, const std::string& rho_max, int points,
              const std::string& report_path) {
  auto ctx = open(o, o.Z.front());
  dsu_state* raw = nullptr;
  check(dsu_state_create(ctx.get(), j.c_str(), eps, n, &raw));
  State st(raw);

  Text report;
  dsu_status rs = dsu_state_report(st.get(), &report.p);
  if (rs != DSU_OK && rs != DSU_ERR_IDENTITY) check(rs);
  std::string failure = rs == DSU_ERR_IDENTITY ? dsu_last_error() : "";

  Text csv;
  check(dsu_state_samples(st.get(), rho_max.empty() ? nullptr : rho_max.c_str(), points, &csv.p));

  if (!report_path.empty() && report.p) {
    std::ofstream f(report_path);
    if (!f) throw Failure{kExitUsage, "cannot open '" + report_path + "' for writing"};
    f << report.str() << '\n';
  }

  std::ostringstream s;
  if (report.p) {
    auto doc = json::parse(report.str());
    const auto& sp = doc["spectral"];
    const auto& lag = doc["laguerre"];
    s << "state j=" << sp["j"].get<std::string>() << " eps=" << sp["eps"].get<int>() << " n=" << sp["n"].get<int>()
      << " N=" << sp["N"].get<long>() << " l=" << sp["l"].get<int>() << "  Z=" << doc["Z"].get<int>() << '\n';
    s << "  E        = " << shorten(sp["E"].get<std::string>(), 40) << '\n';
    s << "  binding  = " << shorten(sp["binding"].get<std::string>(), 40) << '\n';
    s << "  nodes    = " << doc["nodes"].get<int>() << '\n';
    s << "  Laguerre ratio f:P_n = " << lag["ratio_plus"].get<std::string>() << '\n';
    s << "  hypergeometric match = " << (lag["hypergeometric_match"].get<bool>() ? "yes" : "no")
      << ", determinant exact zero = " << (lag["determinant_exact_zero"].get<bool>() ? "yes" : "no") << '\n';
    s << "  energy from elimination differs by " << lag["E_difference"].get<std::string>() << '\n';
  }
  deliver(o, fmt(o) == DSU_FORMAT_CSV ? csv.str() : report.str(), s.str());
  if (!failure.empty()) throw Failure{kExitIdentity, failure};
  return kExitOk;
}

int run_verify(const Common& o, const std::string& j_max, int n_max, bool negative) {
  auto ctx = open(o, o.Z.front());
  int passed = 0;
  Text js;
  check(dsu_verify(ctx.get(), o.Z.data(), o.Z.size(), j_max.c_str(), n_max, negative ? 1 : 0, &passed, &js.p));
  auto doc = json::parse(js.str());

  std::map<std::string, std::pair<int, int>> groups;
  for (const auto& c : doc["checks"]) {
    auto& g = groups[c["group"].get<std::string>()];
    ++g.second;
    if (c["passed"].get<bool>()) ++g.first;
  }
  std::ostringstream s;
  s << "verification  j<=" << j_max << " n<=" << n_max << " Z=";
  for (std::size_t i = 0; i < o.Z.size(); ++i) s << (i ? "," : "") << o.Z[i];
  s << "  precision=" << o.precision << " bits" << (negative ? "  [off-shell negative control]" : "") << '\n';
  for (const auto& [name, g] : groups) {
    s << "  " << std::left << std::setw(28) << name << g.first << "/" << g.second << '\n';
  }
  for (const auto& c : doc["checks"]) {
    if (!c["passed"].get<bool>()) {
      s << "  FAIL " << c["group"].get<std::string>() << ": " << c["name"].get<std::string>() << "  "
        << c["detail"].get<std::string>() << '\n';
    }
  }
  if (doc.contains("divergence_note") && doc["divergence_note"].is_string()) {
    s << "  note: " << doc["divergence_note"].get<std::string>() << '\n';
  }
  s << (passed ? "PASS" : "FAIL") << '\n';
  deliver(o, js.str(), s.str());
  return passed ? kExitOk : kExitIdentity;
}

int run_jl(const Common& o, const std::string& j_max, int n_max) {
  auto ctx = open(o, o.Z.front());
  Text js;
  check(dsu_jl_scan(ctx.get(), j_max.c_str(), n_max, DSU_FORMAT_JSON, &js.p));
  std::string machine = js.str();
  if (fmt(o) == DSU_FORMAT_CSV) {
    Text csv;
    check(dsu_jl_scan(ctx.get(), j_max.c_str(), n_max, DSU_FORMAT_CSV, &csv.p));
    machine = csv.str();
  }
  auto doc = json::parse(js.str());
  std::ostringstream s;
  s << "Johnson-Lippmann diagonality  j<=" << j_max << " n<=" << n_max << "  Z=" << doc["Z"].get<int>() << '\n';
  std::vector<std::string> diag;
  for (const auto& r : doc["rows"]) {
    if (!r["physical"].get<bool>()) continue;
    s << "  " << std::left << std::setw(6) << r["label"].get<std::string>() << "j=" << std::setw(5)
      << r["j"].get<std::string>() << "eps=" << std::setw(4) << r["eps"].get<int>() << "n=" << std::setw(3)
      << r["n"].get<int>() << (r["is_diagonal"].get<bool>() ? "diagonal" : "mixed") << '\n';
    if (r["is_diagonal"].get<bool>()) diag.push_back(r["label"].get<std::string>());
  }
  s << "diagonal set: {";
  for (std::size_t i = 0; i < diag.size(); ++i) s << (i ? ", " : "") << diag[i];
  s << "}\n";
  deliver(o, machine, s.str());
  return kExitOk;
}

int run_limit(const Common& o, const std::string& j, int eps, int n, const std::string& schedule) {
  auto ctx = open(o, o.Z.front());
  Text js;
  check(dsu_limit(ctx.get(), j.c_str(), eps, n, schedule.c_str(), DSU_FORMAT_JSON, &js.p));
  std::string machine = js.str();
  if (fmt(o) == DSU_FORMAT_CSV) {
    Text csv;
    check(dsu_limit(ctx.get(), j.c_str(), eps, n, schedule.c_str(), DSU_FORMAT_CSV, &csv.p));
    machine = csv.str();
  }
  auto doc = json::parse(js.str());
  std::ostringstream s;
  s << "non-relativistic limit  j=" << j << " eps=" << eps << " n=" << n << " N=" << doc["N"].get<long>() << '\n';
  s << std::left << std::setw(24) << "c" << std::setw(30) << "binding - Bohr" << "c^2 (binding - Bohr)\n";
  for (const auto& r : doc["rows"]) {
    s << std::setw(24) << r["c"].get<std::string>() << std::setw(30) << shorten(r["difference"].get<std::string>(), 24)
      << shorten(r["c2_difference"].get<std::string>(), 24) << '\n';
  }
  if (doc["fitted_exponent"].is_number()) {
    s << "fitted exponent of |binding - Bohr| in c: " << std::setprecision(6) << doc["fitted_exponent"].get<double>()
      << '\n';
  }
  deliver(o, machine, s.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-Coulomb hydrogen atom by SU(1,1) ladder operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dsu_version()));

  Common o_spectrum, o_state, o_verify, o_jl, o_limit;
  o_verify.Z = {1, 80};

  int N_max = 3;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "energy table for all levels with N <= N-max");
  add_common(spectrum_cmd, o_spectrum, false);
  spectrum_cmd->add_option("--N-max", N_max, "largest principal quantum number")->capture_default_str();

  std::string st_j = "1/2", st_rho;
  int st_eps = -1, st_n = 0, st_points = 0;
  std::string st_report;
  auto* state = app.add_subcommand("state", "build, normalize and sample one radial eigenstate");
  add_common(state, o_state, false);
  state->add_option("--j", st_j, "total angular momentum as p/2")->capture_default_str();
  state->add_option("--eps", st_eps, "sign of kappa-type label, +1 or -1")->capture_default_str();
  state->add_option("--n", st_n, "radial quantum number")->capture_default_str();
  state->add_option("--rho-max", st_rho, "outer end of the sampling grid");
  state->add_option("--points", st_points, "number of grid points");
  state->add_option("--report", st_report, "also write the JSON report to this path");

  std::string v_jmax = "5/2";
  int v_nmax = 5;
  bool v_negative = false;
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, o_verify, true);
  verify->add_option("--j-max", v_jmax, "largest j as p/2")->capture_default_str();
  verify->add_option("--n-max", v_nmax, "largest radial quantum number")->capture_default_str();
  verify->add_flag("--negative-control", v_negative, "perturb the energy off shell; the run must then fail");

  std::string jl_jmax = "5/2";
  int jl_nmax = 2;
  auto* jl = app.add_subcommand("jl", "Johnson-Lippmann diagonality scan");
  add_common(jl, o_jl, false);
  jl->add_option("--j-max", jl_jmax, "largest j as p/2")->capture_default_str();
  jl->add_option("--n-max", jl_nmax, "largest radial quantum number")->capture_default_str();

  std::string li_j = "1/2", li_sched = "1e2,1e3,1e4";
  int li_eps = -1, li_n = 0;
  auto* limit = app.add_subcommand("limit", "approach to the Bohr levels as c grows");
  add_common(limit, o_limit, false);
  limit->add_option("--j", li_j, "total angular momentum as p/2")->capture_default_str();
  limit->add_option("--eps", li_eps, "sign label, +1 or -1")->capture_default_str();
  limit->add_option("--n", li_n, "radial quantum number")->capture_default_str();
  limit->add_option("--c-schedule", li_sched, "comma-separated values of c")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum_cmd) return run_spectrum(o_spectrum, N_max);
    if (*state) return run_state(o_state, st_j, st_eps, st_n, st_rho, st_points, st_report);
    if (*verify) return run_verify(o_verify, v_jmax, v_nmax, v_negative);
    if (*jl) return run_jl(o_jl, jl_jmax, jl_nmax);
    if (*limit) return run_limit(o_limit, li_j, li_eps, li_n, li_sched);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
