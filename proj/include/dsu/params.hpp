#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dsu/quadratic.hpp"
#include "dsu/rational.hpp"
#include "dsu/real.hpp"

namespace dsu {

inline constexpr int kMaxAtomicNumber = 118;

// Speed of light c (atomic units) and nuclear charge Z; zeta = Z/c exactly.
struct PhysicalParams {
  Rational c;
  int Z = 1;
  Rational zeta;
};

// Throws DomainError for c <= 0 or Z outside [1, 118].
PhysicalParams make_params(const Rational& c, int Z);

// Angular channel (j, eps) with its exact spectral constants.
struct Channel {
  PhysicalParams params;
  Rational j;    // half-integer >= 1/2
  int eps = -1;  // +1 when l = j + 1/2, -1 when l = j - 1/2
  Rational tau;  // eps (j + 1/2)
  Rational s2;   // tau^2 - zeta^2 > 0
  Rational xi;   // j (j + 1) - zeta^2, the Casimir eigenvalue
  std::shared_ptr<const Rational> s2_handle;

  // s = +sqrt(s2) as the generator of Q(s).
  QsNumber s() const { return QsNumber(Rational(0), Rational(1), s2_handle); }
  QsNumber lambda() const { return s() + QsNumber(Rational(1, 2)); }
  // Orbital quantum number of the large component, l = j + eps/2.
  int orbital_l() const;
};

Channel make_channel(const PhysicalParams& params, const Rational& j, int eps);

// Whether the radial system has a normalisable solution with n radial quanta.
// For tau > 0 the n = 0 member of the algebraic representation does not solve
// the coupled first-order equations, so the lowest physical state is n = 1.
bool has_bound_state(const Channel& channel, int n);

// M^2 = (s + n)^2 + zeta^2 = tau^2 + 2 n s + n^2, exact in Q(s). Its positive
// root M is the apparent principal quantum number; on shell
// M = zeta c^2 / k and E = c^2 (s + n) / M.
QsNumber apparent_principal_squared(const Channel& channel, int n);
// Same for a shifted s + n + shift (used for off-shell controls).
QsNumber apparent_principal_squared(const Channel& channel, const QsNumber& s_plus_n);
// M itself in Q(s)(M); folded into Q(s) when M² is a square there (n = 0).
TowerNumber apparent_principal(const Channel& channel, int n);

struct SpectralPoint {
  Channel channel;
  int n = 0;
  QsNumber mu;     // lambda + n
  long N = 1;      // j + 1/2 + n
  Precision precision = kDefaultPrecision;
  Real mu_value;   // embedded mu
  Real eps_j;      // quantum defect j + 1/2 - s
  Real E;          // total energy
  Real binding;    // E - c^2, computed without cancellation
  Real k;          // sqrt(c^4 - E^2)
  Real nu;         // sqrt((c^2 - E) / (c^2 + E))
  Real apparent_principal;  // M
};

SpectralPoint spectral_point(const Channel& channel, int n, Precision precision = kDefaultPrecision);

// E = c^2 [1 + zeta^2 / (s+n)^2]^{-1/2} for a real s + n; accepts zeta = 0.
Real dirac_energy(const Rational& c, const Rational& zeta, const Real& s_plus_n);

// mu = zeta E / sqrt(c^4 - E^2) + 1/2. Throws DomainError unless 0 < E < c^2.
Real mu_from_energy(const PhysicalParams& params, const Real& E, Precision precision = kDefaultPrecision);

struct LimitRow {
  Rational c;
  Real binding;     // E - c^2
  Real bohr;        // -Z^2 / (2 N^2)
  Real difference;  // binding - bohr
};

struct LimitTable {
  long N = 1;
  std::vector<LimitRow> rows;
  // Least-squares slope of log|difference| against log c (two or more rows).
  std::optional<double> fitted_exponent;
};

LimitTable nonrelativistic_limit_table(const Rational& j, int eps, int n, const std::vector<Rational>& c_schedule,
                                       Precision precision = kDefaultPrecision, int Z = 1);

}  // namespace dsu
