#include "leonard/scalar.hpp"

#include <cctype>

#include "leonard/errors.hpp"

namespace leonard {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw parse_error("bad rational literal \"" + std::string(whole) + "\"");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("bad rational literal \"" + std::string(whole) + "\"");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw parse_error("zero denominator in \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string to_string(const Rational& x) { return x.str(); }

std::string to_decimal(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = abs(x) * Rational(scale);
  // round half up on the magnitude
  Integer q = numerator(scaled) / denominator(scaled);
  const Integer r = numerator(scaled) % denominator(scaled);
  if (2 * r >= denominator(scaled)) q += 1;
  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (x < 0 && q != 0 ? "-" : "") + body;
}

Rational ipow(const Rational& x, int n) {
  if (n < 0) {
    if (x == 0) throw std::domain_error("ipow: zero to a negative power");
    return Rational(1) / ipow(x, -n);
  }
  Rational result = 1;
  Rational base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

}  // namespace leonard
