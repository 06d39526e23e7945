#include "dsu/params.hpp"

#include <cmath>
#include <string>

#include "dsu/errors.hpp"

namespace dsu {

PhysicalParams make_params(const Rational& c, int Z) {
  if (sgn(c) <= 0) throw DomainError("speed of light must be positive");
  if (Z < 1 || Z > kMaxAtomicNumber) {
    throw DomainError("Z = " + std::to_string(Z) +
                      " is outside [1, 118]; beyond Z = 118 the Casimir eigenvalue turns negative and the "
                      "solutions become irregular");
  }
  PhysicalParams p;
  p.c = c;
  p.Z = Z;
  p.zeta = Rational(Z) / c;
  p.zeta.canonicalize();
  return p;
}

int Channel::orbital_l() const {
  Rational l = j + Rational(eps, 2);
  l.canonicalize();
  return static_cast<int>(l.get_num().get_si());
}

Channel make_channel(const PhysicalParams& params, const Rational& j, int eps) {
  Rational twice = j * 2;
  twice.canonicalize();
  if (sgn(j) <= 0 || twice.get_den() != 1 || twice.get_num() % 2 == 0) {
    throw DomainError("j must be a positive half-integer, got " + to_string(j));
  }
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");

  Channel ch;
  ch.params = params;
  ch.j = j;
  ch.eps = eps;
  ch.tau = Rational(eps) * (j + Rational(1, 2));
  ch.tau.canonicalize();
  ch.s2 = ch.tau * ch.tau - params.zeta * params.zeta;
  ch.s2.canonicalize();
  if (sgn(ch.s2) <= 0) {
    throw DomainError("zeta^2 >= (j + 1/2)^2: s would be imaginary for j = " + to_string(j));
  }
  ch.xi = j * (j + 1) - params.zeta * params.zeta;
  ch.xi.canonicalize();
  ch.s2_handle = std::make_shared<const Rational>(ch.s2);
  return ch;
}

bool has_bound_state(const Channel& channel, int n) { return n >= 1 || (n == 0 && sgn(channel.tau) < 0); }

QsNumber apparent_principal_squared(const Channel& channel, const QsNumber& s_plus_n) {
  return s_plus_n * s_plus_n + QsNumber(Rational(channel.params.zeta * channel.params.zeta));
}

QsNumber apparent_principal_squared(const Channel& channel, int n) {
  return apparent_principal_squared(channel, channel.s() + QsNumber(Rational(n)));
}

TowerNumber apparent_principal(const Channel& channel, int n) {
  return tower_root(apparent_principal_squared(channel, n));
}

Real dirac_energy(const Rational& c, const Rational& zeta, const Real& s_plus_n) {
  const Precision bits = s_plus_n.precision();
  Real c2(Rational(c * c), bits);
  Real ratio = Real(zeta, bits) / s_plus_n;
  return c2 / sqrt(ratio * ratio + 1);
}

SpectralPoint spectral_point(const Channel& channel, int n, Precision precision) {
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  SpectralPoint p;
  p.channel = channel;
  p.n = n;
  p.mu = channel.lambda() + QsNumber(Rational(n));
  Rational N = channel.j + Rational(1, 2) + n;
  N.canonicalize();
  p.N = N.get_num().get_si();
  p.precision = precision;

  const PhysicalParams& pp = channel.params;
  Real s = sqrt(Real(channel.s2, precision));
  Real sn = s + n;
  Real zeta(pp.zeta, precision);
  Real c2(Rational(pp.c * pp.c), precision);
  p.mu_value = sn + Real(Rational(1, 2), precision);
  p.eps_j = Real(Rational(channel.j + Rational(1, 2)), precision) - s;
  p.E = dirac_energy(pp.c, pp.zeta, sn);
  Real M = sqrt(sn * sn + zeta * zeta);
  p.apparent_principal = M;
  // E - c^2 = -c^2 zeta^2 / (M (M + s + n)).
  p.binding = -(c2 * zeta * zeta) / (M * (M + sn));
  p.k = c2 * zeta / M;
  p.nu = zeta / (M + sn);
  return p;
}

Real mu_from_energy(const PhysicalParams& params, const Real& E, Precision precision) {
  Real e = E.with_precision(precision);
  Real c2(Rational(params.c * params.c), precision);
  if (!(e > 0) || !(e < c2)) throw DomainError("bound-state energy must satisfy 0 < E < c^2");
  Real k = sqrt((c2 - e) * (c2 + e));
  return Real(params.zeta, precision) * e / k + Real(Rational(1, 2), precision);
}

LimitTable nonrelativistic_limit_table(const Rational& j, int eps, int n, const std::vector<Rational>& c_schedule,
                                       Precision precision, int Z) {
  LimitTable table;
  for (const Rational& c : c_schedule) {
    Channel ch = make_channel(make_params(c, Z), j, eps);
    SpectralPoint p = spectral_point(ch, n, precision);
    table.N = p.N;
    LimitRow row{c, p.binding, Real(precision), Real(precision)};
    row.bohr = -Real(make_rational(static_cast<long>(Z) * Z, 2 * p.N * p.N), precision);
    row.difference = row.binding - row.bohr;
    table.rows.push_back(std::move(row));
  }
  if (table.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(table.rows.size());
    for (const auto& r : table.rows) {
      double x = std::log(Real(r.c, precision).to_double());
      double y = log(abs(r.difference)).to_double();
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    table.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return table;
}

}  // namespace dsu
