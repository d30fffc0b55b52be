#pragma once

#include "vwb/rational.hpp"

namespace vwb {

/// Element c0 + c1*H + c2*H^2 of the degree-truncated intersection ring of the
/// projective plane; H^3 and beyond are dropped by every product.
struct ChowClass {
  Rational c0, c1, c2;
};

ChowClass operator+(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a, const ChowClass& b);
ChowClass operator*(const ChowClass& a, const ChowClass& b);
bool operator==(const ChowClass& a, const ChowClass& b);

/// First and second Chern numbers of a rank-two bundle on the plane.
struct ChernPair {
  long long c1, c2;
};

/// ch(End0 E) = 3 + (c1^2 - 4 c2) H^2 for rank-two E.
ChowClass chern_character_end0(const ChernPair& c);

/// ch(O(d)) = 1 + d H + (d^2/2) H^2.
ChowClass chern_character_line(long long d);

/// Todd class of the plane: 1 + (3/2) H + H^2.
ChowClass todd_p2();

/// Euler characteristic by Hirzebruch-Riemann-Roch: the H^2 coefficient of
/// ch * todd_p2().
Rational euler_char(const ChowClass& ch);

/// chi(End0 E (d)) = (3/2) d (d+3) + 3 + c1^2 - 4 c2; always an integer for
/// integer Chern data (the product route is cross-checked in the test suite).
long long chi_end0_twist(const ChernPair& c, long long d);

}  // namespace vwb
