#include "vwb/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace vwb {

namespace {

void check_surface_index(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("cohomology: i must be 0, 1 or 2");
}

long long h0_p1(long long n) { return std::max(n + 1, 0LL); }
long long h1_p1(long long n) { return std::max(-n - 1, 0LL); }

}  // namespace

long long h_p2(int i, long long k) {
  check_surface_index(i);
  switch (i) {
    case 0:
      return k >= 0 ? (k + 1) * (k + 2) / 2 : 0;
    case 1:
      return 0;
    default:
      return h_p2(0, -k - 3);
  }
}

long long h_p1xp1(int i, const BidegreeLine& L) {
  check_surface_index(i);
  switch (i) {
    case 0:
      return h0_p1(L.a) * h0_p1(L.b);
    case 1:
      return h0_p1(L.a) * h1_p1(L.b) + h1_p1(L.a) * h0_p1(L.b);
    default:
      return h1_p1(L.a) * h1_p1(L.b);
  }
}

BlowupDim h_blowup7(int i, const BlowupLine& L) {
  if (i != 0 && i != 1) throw std::invalid_argument("h_blowup7: i must be 0 or 1");
  if (L.p < -1) throw std::invalid_argument("h_blowup7: formulas require p >= -1");

  long long base = (L.p + 1) * (L.p + 2) / 2;
  long long neg_corr = 0;  // sum of t_j (t_j + 1) over negative twists, always even
  long long h1_corr = 0;   // sum of t_j (t_j - 1) over all twists, always even
  bool all_nonneg = true;
  for (long long t : L.t) {
    if (t < 0) {
      all_nonneg = false;
      neg_corr += t * (t + 1);
    }
    h1_corr += t * (t - 1);
  }
  long long dpt = base - neg_corr / 2;

  long long raw;
  if (i == 0)
    raw = all_nonneg ? base : dpt;
  else
    raw = all_nonneg ? h1_corr / 2 : dpt - base + h1_corr / 2;
  return {std::max(raw, 0LL), raw < 0};
}

long long h_blowup7_special(int i, long long d) {
  if (i != 0 && i != 1) throw std::invalid_argument("h_blowup7_special: i must be 0 or 1");
  if (d < 0) throw std::invalid_argument("h_blowup7_special: d must be nonnegative");
  return i == 0 ? d * d + 8 * d + 1 : 7 * d;
}

long long chi_blowup7(const BlowupLine& L) {
  long long h1_corr = 0;
  for (long long t : L.t) h1_corr += t * (t - 1);
  return (L.p + 1) * (L.p + 2) / 2 - h1_corr / 2;
}

}  // namespace vwb
