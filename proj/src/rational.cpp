#include "tropnorm/rational.hpp"

#include <cctype>

namespace tropnorm {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.erase(body.begin());
  }
  if (!all_digits(body)) throw std::invalid_argument("invalid integer: '" + s + "'");
  BigInt v(body);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw std::invalid_argument("invalid rational: '" + text + "' (denominator must be a positive integer)");
  BigInt den(den_text);
  if (den == 0) throw std::invalid_argument("invalid rational: '" + text + "' (zero denominator)");
  return Rational(num, den);
}

std::string rational_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

}  // namespace tropnorm
