#include "dsu/quadratic.hpp"

#include <regex>

namespace dsu {

namespace {

template <class Base>
int quadratic_sign(const Quadratic<Base>& x) {
  const int sa = sign(x.a());
  if (!x.modulus() || is_zero(x.b())) return sa;
  if (sign(*x.modulus()) <= 0) throw DomainError("modulus of a real quadratic extension must be positive");
  const int sb = sign(x.b());
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| against |b|·r, compared through the squares.
  const int d = sign(Base(x.a() * x.a() - x.b() * x.b() * *x.modulus()));
  if (d > 0) return sa;
  if (d < 0) return sb;
  return 0;
}

}  // namespace

int sign(const Rational& x) { return sgn(x); }
int sign(const QsNumber& x) { return quadratic_sign(x); }
int sign(const TowerNumber& x) { return quadratic_sign(x); }

std::string to_string(const QsNumber& x) {
  if (!x.modulus()) {
    if (!is_zero(x.b())) throw UsageError("unbound element with irrational part");
    return to_string(x.a());
  }
  return to_string(x.a()) + " + (" + to_string(x.b()) + ")s [s²=" + to_string(*x.modulus()) + "]";
}

QsNumber parse_qs_number(std::string_view text) {
  static const std::regex form(R"(^\s*(\S+) \+ \((\S+)\)s \[s²=(\S+)\]\s*$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, form)) {
    return QsNumber(parse_rational(m[1].str()), parse_rational(m[2].str()), parse_rational(m[3].str()));
  }
  if (s.find('s') != std::string::npos || s.find('[') != std::string::npos) {
    throw UsageError("malformed Q(s) element '" + s + "'");
  }
  return QsNumber(parse_rational(s));
}

std::string to_string(const TowerNumber& x) {
  if (!x.modulus()) return "(" + to_string(x.a()) + ")";
  return "(" + to_string(x.a()) + ") + (" + to_string(x.b()) + ")M [M²=" + to_string(*x.modulus()) + "]";
}

std::ostream& operator<<(std::ostream& os, const QsNumber& x) { return os << to_string(x); }

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  mpz_class num = sqrt(mpz_class(x.get_num())), den = sqrt(mpz_class(x.get_den()));
  return Rational(num, den);
}

std::optional<QsNumber> exact_sqrt(const QsNumber& x) {
  if (sign(x) < 0) return std::nullopt;
  if (is_zero(x.b()) || !x.modulus()) {
    if (auto r = exact_sqrt(x.a())) return QsNumber(*r);
    // a = b²s² gives the root b·s
    if (x.modulus()) {
      if (auto r = exact_sqrt(Rational(x.a() / *x.modulus()))) {
        return QsNumber(Rational(0), *r, x.modulus_handle());
      }
    }
    return std::nullopt;
  }
  // (u + v s)² = x: u² + v² s² = a and 2uv = b, so u² is a root of
  // t² − a t + b² s²/4 = 0.
  const Rational& a = x.a();
  const Rational& b = x.b();
  const Rational& m = *x.modulus();
  Rational disc = a * a - b * b * m;
  auto d = exact_sqrt(disc);
  if (!d) return std::nullopt;
  for (const Rational& u2 : {Rational((a + *d) / 2), Rational((a - *d) / 2)}) {
    auto u = exact_sqrt(u2);
    if (!u || sgn(*u) == 0) continue;
    Rational v = b / (2 * *u);
    v.canonicalize();
    QsNumber root(*u, v, x.modulus_handle());
    if (!(root * root == x)) continue;
    return sign(root) < 0 ? -root : root;
  }
  return std::nullopt;
}

TowerNumber tower_root(const QsNumber& square) {
  if (auto r = exact_sqrt(square)) return TowerNumber(*r);
  return TowerNumber::generator(square);
}

}  // namespace dsu
