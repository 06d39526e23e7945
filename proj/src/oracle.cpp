#include <array>
#include <cmath>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "dsu/errors.hpp"
#include "dsu/verify.hpp"

namespace dsu {

namespace {

using State = std::array<long double, 2>;
namespace ode = boost::numeric::odeint;

// The radial system in x = ln ρ with g = G/ν:
//   F′ = −τF + (ρ + ζν) g,   g′ = τg + (ρ − ζ/ν) F.
struct Radial {
  long double tau, zeta, nu;
  void operator()(const State& y, State& dy, long double x) const {
    const long double rho = std::exp(x);
    dy[0] = -tau * y[0] + (rho + zeta * nu) * y[1];
    dy[1] = tau * y[1] + (rho - zeta / nu) * y[0];
  }
};

class Shooter {
 public:
  Shooter(const Channel& ch, int n_hint, const OracleOptions& opt)
      : tau_(Real(ch.tau, 64).to_long_double()),
        zeta_(Real(ch.params.zeta, 64).to_long_double()),
        s_(std::sqrt(static_cast<long double>(Real(ch.s2, 128).to_long_double()))),
        opt_(opt) {
    rho_match_ = n_hint + s_ + 1;
    rho_far_ = 40.0L + 10.0L * n_hint;
  }

  // Normalized Wronskian of the regular and decaying solutions at t = ζ/(2ν).
  long double mismatch(long double t, long double rtol) {
    ++evaluations_;
    const long double nu = zeta_ / (2 * t);
    Radial sys{tau_, zeta_, nu};
    const long double x0 = std::log(static_cast<long double>(opt_.rho_start));
    const long double xm = std::log(rho_match_);
    const long double xf = std::log(rho_far_);

    // two Frobenius terms, F = ρ^s (1 + f1 ρ), g = ρ^s (g0 + g1 ρ)
    const long double g0 = (s_ + tau_) / (zeta_ * nu);
    const long double det = 2 * s_ + 1;
    const long double f1 = (g0 * (s_ + 1 - tau_) + zeta_ * nu) / det;
    const long double g1 = ((s_ + 1 + tau_) - zeta_ / nu * g0) / det;
    const long double r0 = opt_.rho_start;
    State out{1 + f1 * r0, g0 + g1 * r0};
    integrate(sys, out, x0, xm, rtol);

    const long double a = rho_far_ + zeta_ * nu, b = rho_far_ - zeta_ / nu;
    const long double lam = -std::sqrt(tau_ * tau_ + a * b);
    State in{1, (tau_ + lam) / a};
    integrate(sys, in, xf, xm, rtol);

    const long double no = std::hypot(out[0], out[1]), ni = std::hypot(in[0], in[1]);
    return (out[0] * in[1] - out[1] * in[0]) / (no * ni);
  }

  long steps() const { return steps_; }
  long evaluations() const { return evaluations_; }

 private:
  // Piecewise integration with renormalization; the system is linear, so only
  // the direction of the state matters.
  void integrate(const Radial& sys, State& y, long double from, long double to, long double rtol) {
    const long double seg = to > from ? 0.5L : -0.5L;
    auto stepper = ode::make_controlled(1e-3L * rtol, rtol, ode::runge_kutta_dopri5<State, long double>());
    long double x = from;
    while ((to - x) * seg > 0) {
      long double next = (to - (x + seg)) * seg > 0 ? x + seg : to;
      steps_ += static_cast<long>(ode::integrate_adaptive(stepper, sys, y, x, next, seg / 16));
      const long double norm = std::hypot(y[0], y[1]);
      if (!std::isfinite(norm) || norm == 0) throw NumericalError("shooting integration failed (non-finite state)");
      y[0] /= norm;
      y[1] /= norm;
      x = next;
    }
  }

  long double tau_, zeta_, s_;
  OracleOptions opt_;
  long double rho_match_ = 1, rho_far_ = 40;
  long steps_ = 0, evaluations_ = 0;
};

OracleResult finish(const Channel& ch, long double t_lo, long double t_hi, long double t, long double mismatch,
                    Precision precision) {
  OracleResult r;
  const Real c2(Rational(ch.params.c * ch.params.c), precision);
  const Real zeta(ch.params.zeta, precision);
  auto energy = [&](long double tt, Real* binding) {
    Real nu = zeta / (Real::from_long_double(tt, precision) * 2);
    Real nu2 = nu * nu;
    if (binding) *binding = -(c2 * nu2 * 2) / (nu2 + 1);
    return c2 * (Real(1L, precision) - nu2) / (nu2 + 1);
  };
  r.binding_oracle = Real(precision);
  r.E_oracle = energy(t, &r.binding_oracle);
  r.E_lo = energy(t_lo, nullptr);
  r.E_hi = energy(t_hi, nullptr);
  r.mismatch = static_cast<double>(mismatch);
  return r;
}

}  // namespace

std::vector<OracleResult> shooting_levels(const Channel& channel, int n_max, Precision precision,
                                          const OracleOptions& options) {
  if (n_max < 0 || n_max > 10) throw DomainError("the shooting oracle supports 0 <= n <= 10");
  // the physical ladder starts at n = 1 when τ > 0, so one fewer root is needed
  const int wanted = n_max + 1 - (sgn(channel.tau) > 0 ? 1 : 0);
  std::vector<OracleResult> out;
  if (wanted <= 0) return out;

  // The scan uses a loose tolerance; brackets are refined at full tolerance.
  std::vector<std::pair<long double, long double>> brackets;
  {
    Shooter coarse(channel, n_max, options);
    const long double zeta = Real(channel.params.zeta, 64).to_long_double();
    const long double step = options.scan_step;
    const long double t_max = 2.0L * (n_max + Real(channel.j, 64).to_long_double() + 4);
    long double t = zeta / 2 + step / 4;
    long double prev = coarse.mismatch(t, 1e-9L);
    while (static_cast<int>(brackets.size()) < wanted) {
      long double next_t = t + step;
      if (next_t > t_max) throw NumericalError("shooting scan found no sign change for the requested level");
      long double cur = coarse.mismatch(next_t, 1e-9L);
      if ((prev < 0) != (cur < 0)) brackets.emplace_back(t, next_t);
      t = next_t;
      prev = cur;
    }
  }

  for (int k = 0; k < wanted; ++k) {
    Shooter fine(channel, k + (sgn(channel.tau) > 0 ? 1 : 0), options);
    auto f = [&](long double t) { return fine.mismatch(t, static_cast<long double>(options.rtol)); };
    auto [lo, hi] = brackets[k];
    long double flo = f(lo), fhi = f(hi);
    if ((flo < 0) == (fhi < 0)) throw NumericalError("refined mismatch lost its sign change");
    std::uintmax_t iters = 200;
    auto root = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<long double>(56),
                                                  iters);
    long double t = (root.first + root.second) / 2;
    OracleResult r = finish(channel, root.first, root.second, t, f(t), precision);
    r.steps = fine.steps();
    r.evaluations = fine.evaluations();
    r.root_index = k;
    out.push_back(std::move(r));
  }
  return out;
}

OracleResult shooting_oracle(const Channel& channel, int n, Precision precision, const OracleOptions& options) {
  if (!has_bound_state(channel, n)) throw DomainError("no bound state for this channel at n = 0");
  auto levels = shooting_levels(channel, n, precision, options);
  return levels.back();
}

Real relative_binding_error(const OracleResult& oracle, const SpectralPoint& point) {
  const Precision bits = point.E.precision();
  return abs(oracle.E_oracle.with_precision(bits) - point.E) / abs(point.binding);
}

}  // namespace dsu
