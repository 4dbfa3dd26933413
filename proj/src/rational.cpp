#include "scarf/rational.hpp"

#include <cctype>

#include "scarf/errors.hpp"

namespace scarf {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      throw InputError("not a rational number: '" + text + "'");
    return Rat(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw InputError("not a rational number: '" + text + "'");
  Int d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  return Rat(Int(num), d);
}

std::string rational_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string decimal_string(const Rat& value, int digits) {
  Int num = numerator(value);
  Int den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int whole = num / den;
  Int frac = ((num - whole * den) * scale) / den;
  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    if (static_cast<int>(f.size()) < digits)
      f = std::string(digits - f.size(), '0') + f;
    out += "." + f;
  }
  if (negative && (whole != 0 || frac != 0)) out = "-" + out;
  return out;
}

bool is_integer(const Rat& value) { return denominator(value) == 1; }

}  // namespace scarf
