#include "dsu/verify.hpp"

#include <random>
#include <sstream>

#include "dsu/errors.hpp"

namespace dsu {

namespace {

struct Shell {
  TowerNumber sigma;  // s + n (+ shift)
  TowerNumber M;
  TowerNumber beta;   // −(M + τ)
  TowerNumber nu;     // (M − σ)/ζ
};

Shell make_shell(const Channel& ch, int n, const std::optional<ShellShift>& shift) {
  QsNumber sigma = ch.s() + QsNumber(Rational(n));
  if (shift) sigma = sigma + QsNumber(shift->shift);
  Shell sh;
  sh.sigma = TowerNumber(sigma);
  sh.M = tower_root(apparent_principal_squared(ch, sigma));
  sh.beta = -(sh.M + TowerNumber(ch.tau));
  sh.nu = (sh.M - sh.sigma) * TowerNumber(Rational(1) / ch.params.zeta);
  return sh;
}

template <class F>
Polynomial<F> weighted_euler_t(const Channel& ch, const Polynomial<F>& q) {
  return q.euler() + q * F(ch.s()) - q.times_rho();
}

template <class F>
Polynomial<F> second_order(const Channel& ch, const F& mu, const Polynomial<F>& q) {
  Polynomial<F> d2 = weighted_euler_t(ch, weighted_euler_t(ch, q));
  Polynomial<F> rq = q.times_rho();
  return d2 + rq * (mu * F(2L)) - rq.times_rho() - q * F(QsNumber(make_rational(1, 4)) + QsNumber(ch.xi));
}

ResidualReport report(Equation eq, TowerPolynomial residual, Precision bits) {
  ResidualReport r{eq, std::move(residual), false, Real(bits)};
  r.is_exact_zero = r.residual.is_zero();
  r.max_abs_embedded = max_abs_embedded(r.residual, bits);
  return r;
}

}  // namespace

std::string_view name(Equation eq) {
  switch (eq) {
    case Equation::FirstA: return "radial-first-order-G";
    case Equation::FirstB: return "radial-first-order-F";
    case Equation::CoupledA: return "psi-first-order-plus";
    case Equation::CoupledB: return "psi-first-order-minus";
    case Equation::SecondA: return "second-order-plus";
    case Equation::SecondB: return "second-order-minus";
  }
  return "?";
}

QsPolynomial second_order_operator(const Channel& ch, const QsNumber& mu, const QsPolynomial& q) {
  return second_order(ch, mu, q);
}

std::vector<ResidualReport> first_order_residual(const RadialPair& pair, std::optional<ShellShift> shift) {
  const LadderState& st = pair.state;
  const Channel& ch = st.channel();
  const Shell sh = make_shell(ch, st.n(), shift);
  const Precision bits = pair.f_scale.precision();
  TowerPolynomial f = pair.f_poly, g = pair.g_poly;
  if (shift) {
    TowerPolynomial minus = lift(st.psi_minus) * sh.beta;
    TowerPolynomial plus = lift(st.psi_plus);
    f = minus + plus;
    g = minus - plus;
  }
  const TowerNumber tau(ch.tau), zeta(ch.params.zeta);
  // ρ(−G′ + τG/ρ) = (ζ − νρ)F, divided by √(c² + E) W
  TowerPolynomial ra = (g * tau - weighted_euler_t(ch, g)) * sh.nu - (f * zeta - f.times_rho() * sh.nu);
  // ρ(F′ + τF/ρ) = (ρ/ν + ζ)G, likewise
  TowerPolynomial rb = weighted_euler_t(ch, f) + f * tau - g.times_rho() - g * (zeta * sh.nu);
  return {report(Equation::FirstA, std::move(ra), bits), report(Equation::FirstB, std::move(rb), bits)};
}

std::vector<ResidualReport> second_order_residual(const LadderState& state, std::optional<ShellShift> shift) {
  const Channel& ch = state.channel();
  const Shell sh = make_shell(ch, state.n(), shift);
  const Precision bits = state.spectral.precision;
  const TowerNumber tau(ch.tau);
  const TowerNumber mu = sh.sigma + TowerNumber(make_rational(1, 2));
  TowerPolynomial u = lift(state.psi_plus);
  TowerPolynomial w = lift(state.psi_minus) * sh.beta;
  TowerPolynomial a = weighted_euler_t(ch, u) + u.times_rho() - u * sh.sigma - w * (sh.M - tau);
  TowerPolynomial b = -(weighted_euler_t(ch, w) - w.times_rho() + w * sh.sigma) - u * (sh.M + tau);
  TowerPolynomial c = second_order(ch, mu, u);
  TowerPolynomial d = second_order(ch, mu - TowerNumber(1L), w);
  return {report(Equation::CoupledA, std::move(a), bits), report(Equation::CoupledB, std::move(b), bits),
          report(Equation::SecondA, std::move(c), bits), report(Equation::SecondB, std::move(d), bits)};
}

GramMatrix orthonormality_matrix(const std::vector<LadderState>& states, Precision precision, bool normalized) {
  const std::size_t m = states.size();
  GramMatrix out(m, std::vector<GramEntry>(m, GramEntry{Complex(precision), true}));
  if (m == 0) return out;
  const Channel& ch = states.front().channel();
  const Precision work = precision + kGuardBits;
  std::vector<Real> scale;
  for (const auto& st : states) {
    if (!(st.channel().s2 == ch.s2) || !(st.channel().params.zeta == ch.params.zeta)) {
      throw UsageError("orthonormality matrix needs states of one channel");
    }
    if (!normalized) {
      scale.emplace_back(1L, work);
      continue;
    }
    Real s = sqrt(Real(ch.s2, work));
    Real n_lambda = exp2(s) / sqrt(tgamma(s * 2));
    scale.push_back(n_lambda / sqrt(embed(st.ladder_norm_squared, work)));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      InnerProduct ip = inner_product(plus_component(states[i]), plus_component(states[k]), work);
      GramEntry e{Complex(precision), ip.exact_zero};
      if (!ip.exact_zero) {
        Real f = scale[i] * scale[k];
        e.value = Complex((ip.value.re * f).with_precision(precision), (ip.value.im * f).with_precision(precision));
      }
      out[i][k] = std::move(e);
    }
  }
  return out;
}

std::string negative_branch_divergence_note() {
  return "The branch with mu < 0 behaves as rho^s e^{+rho} for large rho, so its squared norm contains "
         "the integral of rho^{2s-1} e^{2 rho}, which diverges as rho -> infinity. It is not square "
         "integrable and is excluded from the physical representation; only the e^{-rho} weighted family "
         "with mu = lambda + n, n >= 0, is constructed.";
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += c.passed ? 0 : 1;
  return k;
}

namespace {

std::string fmt(const Real& x, unsigned digits = 6) { return x.str(digits); }

std::vector<Rational> half_integers_up_to(const Rational& j_max) {
  std::vector<Rational> out;
  for (long tj = 1; Rational(tj, 2) <= j_max; tj += 2) out.push_back(make_rational(tj, 2));
  return out;
}

std::string channel_tag(const Channel& ch, int n) {
  std::ostringstream os;
  os << "Z=" << ch.params.Z << " j=" << to_string(ch.j) << " eps=" << (ch.eps > 0 ? "+1" : "-1");
  if (n >= 0) os << " n=" << n;
  return os.str();
}

FamilySum pseudo_random_member(std::mt19937_64& rng, const std::shared_ptr<const Channel>& ch) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  std::uniform_int_distribution<int> deg(0, 3), off(0, 3);
  auto rq = [&] { return QsNumber(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), ch->s2_handle); };
  FamilySum f(ch);
  for (int m = 0; m < 2; ++m) {
    std::vector<QsNumber> re, im;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
      re.push_back(rq());
      im.push_back(rq());
    }
    f.add(off(rng), {QsPolynomial(re), QsPolynomial(im)});
  }
  return f;
}

}  // namespace

VerificationReport run_verification(const VerificationConfig& config) {
  VerificationReport rep;
  rep.config = config;
  rep.divergence_note = negative_branch_divergence_note();
  const Precision bits = config.precision;
  const Real tol = pow10(-static_cast<long>(bits / 4), bits);
  const Real oracle_tol = pow10(-10, bits);
  std::optional<ShellShift> shift;
  if (config.negative_control) shift = ShellShift{make_rational(1, 10)};
  std::mt19937_64 rng(20240601);

  for (int Z : config.Z) {
    const PhysicalParams params = make_params(config.c, Z);
    for (const Rational& j : half_integers_up_to(config.j_max)) {
      for (int eps : {-1, 1}) {
        const Channel ch = make_channel(params, j, eps);
        auto handle = std::make_shared<const Channel>(ch);

        // algebra on the channel
        {
          bool ok = true;
          std::string bad;
          for (int t = 0; t < config.commutator_samples; ++t) {
            FamilySum f = pseudo_random_member(rng, handle);
            for (Commutator which : kAllCommutators) {
              if (!commutator_check(f, which).is_zero()) {
                ok = false;
                bad = std::string(name(which));
              }
            }
            if (!(casimir_composed(f) - casimir_explicit(f)).is_zero()) {
              ok = false;
              bad = "casimir forms";
            }
          }
          rep.checks.push_back({"algebra", "commutators " + channel_tag(ch, -1), true, ok,
                                ok ? std::to_string(config.commutator_samples) + " family members" : "violated: " + bad});
        }

        std::vector<LadderState> ladder;
        LadderState st = ground_state(ch, bits);
        for (int n = 0; n <= config.n_max; ++n) {
          if (n > 0) st = raise(st);
          ladder.push_back(st);
          auto ev = casimir_eigenvalue(plus_component(st));
          bool cas = ev && *ev == QsNumber(ch.xi) && *ev == ch.lambda() * (ch.lambda() - QsNumber(1L));
          rep.checks.push_back({"algebra", "casimir " + channel_tag(ch, n), true, cas, cas ? "xi = lambda(lambda-1)" : "mismatch"});
          if (!has_bound_state(ch, n)) continue;

          auto second = second_order_residual(st, shift);
          RadialPair pair = assemble(st, bits);
          auto first = first_order_residual(pair, shift);
          second.insert(second.begin(), first.begin(), first.end());
          for (const auto& r : second) {
            rep.checks.push_back({"residual", std::string(name(r.which)) + " " + channel_tag(ch, n), true, r.is_exact_zero,
                                  r.is_exact_zero ? "exact zero" : "max |coeff| = " + fmt(r.max_abs_embedded)});
          }

          auto lag = laguerre_cross_check(st, bits);
          bool lag_ok = lag.hypergeometric_match && is_zero(lag.determinant) && (!lag.system_applicable || lag.system_exact_zero) &&
                        abs(lag.E_difference) < tol && lag.sonine_residual < tol;
          rep.checks.push_back({"laguerre", "laguerre " + channel_tag(ch, n), true, lag_ok,
                                "elimination dE = " + fmt(lag.E_difference, 3)});

          RadialPair normed = normalize(pair, bits);
          Real integral = radial_norm_integral(normed, bits);
          bool norm_ok = abs(integral - 1) < tol;
          rep.checks.push_back({"normalization", "integral " + channel_tag(ch, n), false, norm_ok,
                                "|I - 1| = " + fmt(abs(integral - 1), 3)});
        }

        std::vector<LadderState> physical;
        for (const auto& s : ladder) physical.push_back(s);
        GramMatrix gram = orthonormality_matrix(physical, bits);
        bool gram_ok = true;
        Real worst(bits);
        for (std::size_t a = 0; a < gram.size(); ++a) {
          for (std::size_t b = 0; b < gram.size(); ++b) {
            const auto& e = gram[a][b];
            if (a != b) {
              gram_ok = gram_ok && e.exact_zero;
            } else {
              Real dev = abs(e.value - Complex(Real(1L, bits), Real(bits)));
              worst = max(worst, dev);
            }
          }
        }
        gram_ok = gram_ok && worst < tol;
        rep.checks.push_back({"orthonormality", "gram " + channel_tag(ch, -1), false, gram_ok, "max diag dev = " + fmt(worst, 3)});

        if (config.oracle) {
          try {
            auto levels = shooting_levels(ch, config.n_max, bits);
            for (const auto& lv : levels) {
              int n = lv.root_index + (has_bound_state(ch, 0) ? 0 : 1);
              SpectralPoint p = spectral_point(ch, n, bits);
              if (shift) {
                // compare against the displaced closed form
                Real sn = sqrt(Real(ch.s2, bits)) + n + Real(shift->shift, bits);
                p.E = dirac_energy(ch.params.c, ch.params.zeta, sn);
                p.binding = p.E - Real(Rational(ch.params.c * ch.params.c), bits);
              }
              Real err = relative_binding_error(lv, p);
              rep.checks.push_back({"oracle", "shooting " + channel_tag(ch, n), false, err < oracle_tol,
                                    "relative binding error = " + fmt(err, 3)});
            }
          } catch (const Error& e) {
            rep.checks.push_back({"oracle", "shooting " + channel_tag(ch, -1), false, false, e.what()});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace dsu
