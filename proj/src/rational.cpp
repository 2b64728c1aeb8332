#include "desire/rational.hpp"

#include <cctype>

#include "desire/errors.hpp"

namespace desire {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer(text)) {
      throw MalformedDocument("not a rational: '" + text + "'");
    }
    return Rational(boost::multiprecision::cpp_int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw MalformedDocument("not a rational: '" + text + "'");
  }
  boost::multiprecision::cpp_int d(den);
  if (d == 0) {
    throw MalformedDocument("zero denominator in '" + text + "'");
  }
  return Rational(boost::multiprecision::cpp_int(num), d);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace desire
