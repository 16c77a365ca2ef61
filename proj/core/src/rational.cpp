#include "reductions/rational.hpp"

namespace reductions {

Rational rat_pow(const Rational& base, unsigned exp) {
  Rational acc(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) acc *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return acc;
}

std::string rat_str(const Rational& r) {
  const Int& num = boost::multiprecision::numerator(r);
  const Int& den = boost::multiprecision::denominator(r);
  std::string s = num.str();
  if (den != 1) {
    s += "/";
    s += den.str();
  }
  return s;
}

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("malformed rational: " + s);
  }
}

Int rat_floor(const Rational& r) {
  Int q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && q * boost::multiprecision::denominator(r) != boost::multiprecision::numerator(r)) {
    q -= 1;
  }
  return q;
}

Int rat_ceil(const Rational& r) { return -rat_floor(-r); }

}  // namespace reductions
