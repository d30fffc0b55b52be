#include "vwb/chow.hpp"

namespace vwb {

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
}

ChowClass chern_character_end0(const ChernPair& c) {
  Rational disc = Rational(c.c1) * c.c1 - 4 * Rational(c.c2);
  return {3, 0, disc};
}

ChowClass chern_character_line(long long d) {
  return {1, d, Rational(d) * d / 2};
}

ChowClass todd_p2() { return {1, Rational(3, 2), 1}; }

Rational euler_char(const ChowClass& ch) { return (ch * todd_p2()).c2; }

long long chi_end0_twist(const ChernPair& c, long long d) {
  Rational chi = Rational(3, 2) * d * (d + 3) + 3 + Rational(c.c1) * c.c1 - 4 * Rational(c.c2);
  return to_ll(to_integer(chi));  // to_integer rejects inconsistent Chern data
}

}  // namespace vwb
