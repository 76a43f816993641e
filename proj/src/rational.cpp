#include "homothets/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace homothets {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw std::invalid_argument("malformed rational: " + text);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(Integer(num)) / Rational(d);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (!valid_integer_token(whole.empty() ? "0" : whole) || frac.empty() ||
        !valid_integer_token(frac))
      throw std::invalid_argument("malformed rational: " + text);
    const bool negative = !whole.empty() && whole[0] == '-';
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w(whole.empty() ? "0" : whole);
    Integer f(frac);
    Rational magnitude = Rational(abs(w)) + Rational(f) / Rational(scale);
    return negative ? -magnitude : magnitude;
  }
  if (!valid_integer_token(text))
    throw std::invalid_argument("malformed rational: " + text);
  return Rational(Integer(text));
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("non-finite double cannot become a rational");
  return Rational(value);
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Integer rational_ceil(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  Integer q = floor_div(num, den);
  if (q * den != num) ++q;
  return q;
}

}  // namespace homothets
