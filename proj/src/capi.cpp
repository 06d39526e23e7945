#include "dirac_su11.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "dsu/errors.hpp"
#include "dsu/serialize.hpp"

struct dsu_context {
  dsu::PhysicalParams params;
  dsu::Precision precision;
};

struct dsu_state {
  dsu::RadialPair pair;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
dsu_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return DSU_OK;
  } catch (const dsu::UsageError& e) {
    last_error = e.what();
    return DSU_ERR_USAGE;
  } catch (const dsu::DomainError& e) {
    last_error = e.what();
    return DSU_ERR_DOMAIN;
  } catch (const dsu::DivisionError& e) {
    last_error = e.what();
    return DSU_ERR_DIVISION;
  } catch (const dsu::IdentityError& e) {
    last_error = e.what();
    return DSU_ERR_IDENTITY;
  } catch (const dsu::NumericalError& e) {
    last_error = e.what();
    return DSU_ERR_NUMERICAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DSU_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return DSU_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw dsu::UsageError(std::string("null argument: ") + what);
}

void emit(char** out, const std::string& s) {
  *out = dup(s);
  if (!*out) throw std::bad_alloc();
}

std::vector<dsu::Rational> parse_schedule(const char* text) {
  std::vector<dsu::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw dsu::UsageError("empty entry in c schedule");
    out.push_back(dsu::parse_rational(item));
  }
  if (out.empty()) throw dsu::UsageError("empty c schedule");
  return out;
}

}  // namespace

extern "C" {

const char* dsu_version(void) { return "1.0.0"; }

const char* dsu_last_error(void) { return last_error.c_str(); }

void dsu_free_string(char* s) { std::free(s); }

dsu_status dsu_context_create(const char* c, int Z, unsigned precision, dsu_context** out) {
  return guarded([&] {
    require(c, "c");
    require(out, "out");
    *out = nullptr;
    if (precision != 0 && precision < 64) throw dsu::DomainError("precision must be at least 64 bits");
    auto params = dsu::make_params(dsu::parse_rational(c), Z);
    *out = new dsu_context{params, precision ? precision : dsu::kDefaultPrecision};
  });
}

void dsu_context_destroy(dsu_context* ctx) { delete ctx; }

dsu_status dsu_spectrum(const dsu_context* ctx, int N_max, dsu_format format, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    if (N_max < 1) throw dsu::DomainError("N_max must be at least 1");
    if (format == DSU_FORMAT_CSV) {
      emit(out, dsu::spectrum_csv(ctx->params, N_max, ctx->precision));
    } else {
      emit(out, dsu::spectrum_json(ctx->params, N_max, ctx->precision).dump(2));
    }
  });
}

dsu_status dsu_state_create(const dsu_context* ctx, const char* j, int eps, int n, dsu_state** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(j, "j");
    require(out, "out");
    *out = nullptr;
    auto ch = dsu::make_channel(ctx->params, dsu::parse_half_integer(j), eps);
    auto st = dsu::build_state(ch, n, ctx->precision);
    auto pair = dsu::normalize(dsu::assemble(st, ctx->precision), ctx->precision);
    *out = new dsu_state{std::move(pair)};
  });
}

void dsu_state_destroy(dsu_state* state) { delete state; }

dsu_status dsu_state_energy(const dsu_state* state, char** E, char** binding) {
  return guarded([&] {
    require(state, "state");
    const auto& p = state->pair.spectral();
    const unsigned digits = dsu::decimal_digits(p.precision);
    if (E) emit(E, p.E.str(digits));
    if (binding) emit(binding, p.binding.str(digits));
  });
}

dsu_status dsu_state_report(const dsu_state* state, char** json) {
  return guarded([&] {
    require(state, "state");
    require(json, "json");
    const auto& pair = state->pair;
    const dsu::Precision bits = pair.spectral().precision;
    auto report = dsu::laguerre_cross_check(pair.state, bits);
    const int nodes = dsu::node_count(pair);
    auto doc = dsu::state_json(pair, report, nodes);
    emit(json, doc.dump(2));
    const dsu::Real tol = dsu::pow10(-static_cast<long>(bits / 4), bits);
    if (!report.hypergeometric_match || !dsu::is_zero(report.determinant) ||
        (report.system_applicable && !report.system_exact_zero) || !(abs(report.E_difference) < tol) ||
        !(report.sonine_residual < tol)) {
      throw dsu::IdentityError("Laguerre cross-check failed");
    }
    if (!(abs(dsu::radial_norm_integral(pair, bits) - 1) < tol)) throw dsu::IdentityError("normalization failed");
  });
}

dsu_status dsu_state_samples(const dsu_state* state, const char* rho_max, int count, char** csv) {
  return guarded([&] {
    require(state, "state");
    require(csv, "csv");
    const auto& pair = state->pair;
    const dsu::Precision bits = pair.spectral().precision;
    std::vector<dsu::Real> grid;
    if (!rho_max && count == 0) {
      grid = dsu::default_grid(pair.spectral(), bits);
    } else {
      dsu::Real hi = rho_max ? dsu::Real(dsu::parse_rational(rho_max), bits) : dsu::default_grid(pair.spectral(), bits).back();
      grid = dsu::geometric_grid(dsu::pow10(-3, bits), hi, count ? count : 400);
    }
    emit(csv, dsu::samples_csv(dsu::sample(pair, grid), dsu::decimal_digits(bits)));
  });
}

dsu_status dsu_verify(const dsu_context* ctx, const int* Z, size_t Z_count, const char* j_max, int n_max,
                      int negative_control, int* passed, char** json) {
  return guarded([&] {
    require(ctx, "ctx");
    require(json, "json");
    dsu::VerificationConfig cfg;
    cfg.c = ctx->params.c;
    cfg.precision = ctx->precision;
    if (Z && Z_count) {
      cfg.Z.assign(Z, Z + Z_count);
      for (int z : cfg.Z) dsu::make_params(cfg.c, z);
    }
    if (j_max) cfg.j_max = dsu::parse_half_integer(j_max);
    if (n_max < 0 || n_max > 10) throw dsu::DomainError("verification supports 0 <= n_max <= 10");
    cfg.n_max = n_max;
    cfg.negative_control = negative_control != 0;
    auto rep = dsu::run_verification(cfg);
    if (passed) *passed = rep.passed() ? 1 : 0;
    emit(json, dsu::to_json(rep).dump(2));
  });
}

dsu_status dsu_jl_scan(const dsu_context* ctx, const char* j_max, int n_max, dsu_format format, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    auto jm = j_max ? dsu::parse_half_integer(j_max) : dsu::make_rational(5, 2);
    auto rows = dsu::diagonality_scan(ctx->params, jm, n_max, ctx->precision);
    // the two computation paths must agree on every scanned state
    for (const auto& r : rows) {
      auto ch = dsu::make_channel(ctx->params, r.j, r.eps);
      dsu::jl_psi_action(dsu::build_state(ch, r.n, ctx->precision), ctx->precision);
    }
    if (format == DSU_FORMAT_CSV) {
      emit(out, dsu::diagonality_csv(rows, ctx->precision));
    } else {
      emit(out, dsu::to_json(rows, ctx->params, ctx->precision).dump(2));
    }
  });
}

dsu_status dsu_limit(const dsu_context* ctx, const char* j, int eps, int n, const char* c_schedule, dsu_format format,
                     char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(j, "j");
    require(c_schedule, "c_schedule");
    require(out, "out");
    auto table = dsu::nonrelativistic_limit_table(dsu::parse_half_integer(j), eps, n, parse_schedule(c_schedule),
                                                  ctx->precision, ctx->params.Z);
    if (format == DSU_FORMAT_CSV) {
      emit(out, dsu::limit_csv(table, ctx->precision));
    } else {
      emit(out, dsu::to_json(table, ctx->precision).dump(2));
    }
  });
}

}  // extern "C"
