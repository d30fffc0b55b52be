#pragma once

#include "vwb/chow.hpp"

#include <array>
#include <optional>
#include <string>

namespace vwb {

/// Rank-two bundle from the one-secant family, indexed by a twist pair.
/// Swapping the indices gives an isomorphic bundle, so construction
/// normalizes to s >= r; k = s - r is the separation.
struct L1Bundle {
  int r, s;
  L1Bundle(int r, int s);
  int k() const { return s - r; }
};

/// Rank-two bundle from the two-secant family on seven points: base twist p
/// and exceptional twists t_1..t_7. Stability formulas require p >= -1.
struct L2Bundle {
  int p;
  std::array<int, 7> t;
  long long t_sum() const;
};

ChernPair chern_l1(const L1Bundle& B);

bool is_isomorphic_l1(const L1Bundle& A, const L1Bundle& B);

/// Split or tangent-twist shape taken by the small-separation bundles.
struct HomogeneousForm {
  enum class Kind { direct_sum, tangent_twist } kind;
  int a, b;  // direct_sum: O(a) (+) O(b); tangent_twist: T (x) O(a), b unused
  std::string to_string() const;
};

/// k = 0, 1, 2 are homogeneous: O(r) (+) O(r-1), O(r) (+) O(r), T (x) O(r-1).
std::optional<HomogeneousForm> homogeneous_form(const L1Bundle& B);

/// Slope stability: holds exactly when the separation is at least 2.
bool is_stable_l1(const L1Bundle& B);

/// Which closed form h^1(End0 E(d)) follows: the published piecewise table,
/// or the value derived from the Kunneth route (max(0, k^2 - (d+2)^2)), which
/// is the one consistent with the Euler characteristic for every (k, d).
enum class H1Mode { paper, derived };

long long h0_end0_l1(const L1Bundle& B, int d);
long long h1_end0_l1(const L1Bundle& B, int d, H1Mode mode);
long long h2_end0_l1(const L1Bundle& B, int d);

ChernPair chern_l2(const L2Bundle& B);

/// Numerical stability test, valid for p >= -1; branches on whether every
/// c1 + 2 t_i is nonnegative.
bool is_stable_l2(const L2Bundle& B);

/// Index transport along the standard isomorphism of the two-secant family:
/// (q, s) maps to p = 3*sum(s) + 8q, t_i = -s_i - 3q - sum(s).
L2Bundle l2_isomorphism_image(int q, const std::array<int, 7>& s);

/// True when the two bundles lie in the known overlap of the families:
/// p in [-7, -1], r = p, s = p + 3 and sum(t) = 4 - p.
bool overlap_l1_l2(const L1Bundle& A, const L2Bundle& B);

}  // namespace vwb
