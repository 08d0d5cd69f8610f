#include "hardcore/rational.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hardcore {

namespace {
using Float100 = boost::multiprecision::cpp_bin_float_100;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos) {
      // Decimal / scientific literal: parse mantissa and exponent exactly.
      std::string t = text;
      long long exp10 = 0;
      auto epos = t.find_first_of("eE");
      if (epos != std::string::npos) {
        exp10 = std::stoll(t.substr(epos + 1));
        t = t.substr(0, epos);
      }
      auto dot = t.find('.');
      if (dot != std::string::npos) {
        exp10 -= static_cast<long long>(t.size() - dot - 1);
        t.erase(dot, 1);
      }
      if (t.empty() || t == "-" || t == "+") throw std::invalid_argument("bad literal");
      Rational r{BigInt(t)};
      BigInt p10 = 1;
      for (long long i = 0; i < std::llabs(exp10); ++i) p10 *= 10;
      if (exp10 >= 0) r *= p10; else r /= p10;
      return r;
    }
    return Rational(BigInt(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational literal: " + text);
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return Rational(x);
}

std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string rational_to_scientific(const Rational& q, int digits) {
  Float100 f(q);
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << f;
  return os.str();
}

double log10_rational(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("log10 of non-positive rational");
  Float100 f(q);
  return static_cast<double>(boost::multiprecision::log10(f));
}

}  // namespace hardcore
