#include "dsu/rational.hpp"

#include <cctype>
#include <charconv>

#include "dsu/errors.hpp"

namespace dsu {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw UsageError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational r;
    std::string num(text.substr(0, slash));
    std::string den(text.substr(slash + 1));
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den)) throw UsageError("malformed fraction '" + std::string(text) + "'");
    if (num.front() == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    r = Rational(mpz_class(num), d);
    r.canonicalize();
    return r;
  }

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      throw UsageError("malformed exponent in '" + std::string(text) + "'");
    }
    body = body.substr(0, e);
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw UsageError("malformed number '" + std::string(text) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw UsageError("malformed number '" + std::string(text) + "'");
  }

  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty()) digits = "0";
  Rational r{mpz_class(digits)};
  r *= pow10(exponent - static_cast<long>(frac_part.size()));
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

Rational parse_half_integer(std::string_view text) {
  Rational r = parse_rational(text);
  Rational twice = r * 2;
  twice.canonicalize();
  if (twice.get_den() != 1 || twice.get_num() % 2 == 0) {
    throw UsageError("'" + std::string(text) + "' is not a half-integer");
  }
  return r;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace dsu
