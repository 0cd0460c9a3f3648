#include "pentamin/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pent {

namespace {

// Parses a decimal string with optional sign, fraction part, and
// exponent ("-12", "2.5", "1e-3") into an exact rational.
Rat parse_decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  Int mantissa = 0;
  long long frac_digits = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    mantissa = mantissa * 10 + (s[i] - '0');
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      mantissa = mantissa * 10 + (s[i] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  long long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    bool edigit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      exponent = exponent * 10 + (s[i] - '0');
      edigit = true;
    }
    if (!edigit) throw std::invalid_argument("bad exponent in number: " + s);
    if (eneg) exponent = -exponent;
  }
  if (!any_digit || i != s.size())
    throw std::invalid_argument("malformed number: " + s);

  Int num = neg ? Int(-mantissa) : mantissa;
  Int den = 1;
  long long shift = exponent - frac_digits;
  for (long long j = 0; j < shift; ++j) num *= 10;
  for (long long j = 0; j < -shift; ++j) den *= 10;
  return Rat(num, den);
}

}  // namespace

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  size_t slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Rat num = parse_decimal(s.substr(0, slash));
  Rat den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return num / den;
}

std::string format_rational(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  // Every finite double is mantissa * 2^e with integer mantissa.
  int exp = 0;
  double m = std::frexp(v, &exp);  // v = m * 2^exp, |m| in [0.5, 1)
  for (int i = 0; i < 64 && m != std::floor(m); ++i) {
    m *= 2;
    --exp;
  }
  Int mantissa(static_cast<long long>(m));
  Rat out(mantissa);
  if (exp > 0) {
    Int p = 1;
    p <<= exp;
    out *= Rat(p);
  } else if (exp < 0) {
    Int p = 1;
    p <<= -exp;
    out /= Rat(p);
  }
  return out;
}

int sign_of(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

}  // namespace pent
