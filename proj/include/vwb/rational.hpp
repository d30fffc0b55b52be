#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace vwb {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// n/d in lowest terms with positive denominator, for d of either sign.
/// (The underlying two-argument constructor rejects negative denominators.)
inline Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(n) / Rational(d);
}

/// Exact conversion; throws if q has a nontrivial denominator.
inline Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("to_integer: " + q.str() + " is not an integer");
  return num(q);
}

inline long long to_ll(const Integer& n) { return n.convert_to<long long>(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  return is_integer(q) ? num(q).str() : num(q).str() + "/" + den(q).str();
}

}  // namespace vwb
