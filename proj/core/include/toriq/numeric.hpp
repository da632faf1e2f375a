#pragma once

// Exact scalar arithmetic used throughout: arbitrary-precision integers and
// rationals kept in lowest terms with positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "toriq/error.hpp"

namespace toriq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// num/den with the sign moved into the numerator; throws on den == 0.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail("division_by_zero", "rational with zero denominator");
  return Rat(num) / Rat(den);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// gcd of absolute values, 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

// Divide out the content, keeping orientation. Zero vector unchanged.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// Primitive vector with first nonzero entry positive.
inline IntVec primitive_signed(IntVec v) {
  v = primitive(std::move(v));
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  return v;
}

// Clear denominators and divide out the content, keeping orientation.
inline IntVec rat_to_primitive_int(const RatVec& v) {
  Int m = 1;
  for (const Rat& q : v) m = lcm(m, rat_den(q));
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i]) * (m / rat_den(v[i]));
  return primitive(std::move(w));
}

inline RatVec to_rat(const IntVec& v) {
  RatVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i]);
  return w;
}

// Floored division/remainder (remainder has the sign of the divisor).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}
inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

}  // namespace toriq
