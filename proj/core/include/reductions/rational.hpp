#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace reductions {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  return Rational(Int(num), Int(den));
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rat_sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

Rational rat_pow(const Rational& base, unsigned exp);

// Canonical "p/q" form, q > 0, lowest terms ("0/1" for zero).
std::string rat_str(const Rational& r);

// Accepts "p/q" or a bare integer "p".
Rational rat_parse(const std::string& s);

// Largest integer k with k <= r.
Int rat_floor(const Rational& r);

Int rat_ceil(const Rational& r);

}  // namespace reductions
