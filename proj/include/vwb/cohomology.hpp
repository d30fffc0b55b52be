#pragma once

#include "vwb/rational.hpp"

#include <array>

namespace vwb {

/// h^i(P^2, O(k)). h^0 counts monomials, h^1 vanishes, h^2 by Serre duality.
long long h_p2(int i, long long k);

/// Line bundle O(a, b) on the smooth quadric P^1 x P^1.
struct BidegreeLine {
  long long a, b;
};

/// h^i(P^1 x P^1, O(a, b)) by the Kunneth formula.
long long h_p1xp1(int i, const BidegreeLine& L);

/// Line bundle p*M + sum t_i*N_i on the plane blown up in seven general
/// points (M the hyperplane pullback, N_i the exceptional curves).
struct BlowupLine {
  long long p;
  std::array<long long, 7> t;
};

/// Dimension from a closed formula; `formula_negative` marks arguments where
/// the raw expression dips below zero (value is then clamped to 0, never
/// silently).
struct BlowupDim {
  long long value;
  bool formula_negative;
};

/// h^i (i in {0,1}) of a BlowupLine, valid for p >= -1. The correction term
/// d(p,t) subtracts t_j (t_j + 1)/2 over the negative twists only.
BlowupDim h_blowup7(int i, const BlowupLine& L);

/// h^i (i in {0,1}) of the distinguished family L(3d; -d,...,-d):
/// h^0 = d^2 + 8d + 1, h^1 = 7d, for d >= 0.
long long h_blowup7_special(int i, long long d);

/// Riemann-Roch on the blow-up: chi = (p+1)(p+2)/2 - (1/2) sum t_j (t_j - 1).
long long chi_blowup7(const BlowupLine& L);

}  // namespace vwb
