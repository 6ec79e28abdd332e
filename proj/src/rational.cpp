#include "sqtile/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace sqtile {

Int rational_floor(const Rational& x) {
  Int n = numerator(x);
  Int d = denominator(x);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int rational_ceil(const Rational& x) { return -rational_floor(-x); }

std::string fraction_str(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int pow10(long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

std::optional<Rational> parse_fraction(const std::string& in) {
  std::string s = in;
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    Int num(a), den(b);
    if (den == 0) return std::nullopt;
    Rational r(num, den);
    return neg ? Rational(-r) : r;
  }

  // decimal with optional exponent
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    s = s.substr(0, epos);
    if (es.empty()) return std::nullopt;
    bool eneg = false;
    if (es[0] == '+' || es[0] == '-') {
      eneg = es[0] == '-';
      es = es.substr(1);
    }
    if (!all_digits(es) || es.size() > 6) return std::nullopt;
    exp10 = std::strtol(es.c_str(), nullptr, 10);
    if (eneg) exp10 = -exp10;
  }
  std::string ip = s, fp;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    ip = s.substr(0, dot);
    fp = s.substr(dot + 1);
  }
  if (ip.empty() && fp.empty()) return std::nullopt;
  if (!ip.empty() && !all_digits(ip)) return std::nullopt;
  if (!fp.empty() && !all_digits(fp)) return std::nullopt;
  Int num = ip.empty() ? Int(0) : Int(ip);
  Int den = 1;
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  if (exp10 > 0)
    r *= Rational(pow10(exp10));
  else if (exp10 < 0)
    r /= Rational(pow10(-exp10));
  return neg ? Rational(-r) : r;
}

}  // namespace sqtile
