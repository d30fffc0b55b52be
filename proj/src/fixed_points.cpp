#include "vwb/fixed_points.hpp"

#include "vwb/cohomology.hpp"

#include <stdexcept>

namespace vwb {

std::string to_string(StabilityFlag flag) {
  switch (flag) {
    case StabilityFlag::stable:
      return "stable";
    case StabilityFlag::candidate:
      return "candidate";
    default:
      return "strictly_semistable_candidate";
  }
}

std::vector<FixedComponent> enumerate_fixed(long long c1, long long c2, int d) {
  if (d < 0) throw std::invalid_argument("enumerate_fixed: requires d >= 0");
  std::vector<FixedComponent> out;
  for (int j = 0; j <= d; ++j) {
    if ((c1 + j) % 2 != 0) continue;
    const long long m = (c1 + j) / 2;
    const long long n = c2 - m * (m - j);
    if (n < 0) continue;
    for (long long l1 = (n + 1) / 2; l1 <= n; ++l1) {
      StabilityFlag flag = j == 0 ? StabilityFlag::strictly_semistable_candidate
                           : l1 > 0 ? StabilityFlag::candidate
                                    : StabilityFlag::stable;
      out.push_back({m, j, l1, n - l1, higgs_family_dim(d, j), flag});
    }
  }
  return out;  // generation order is already (j, l1)-sorted
}

bool nilpotency_check(const PolyMatrix2& phi) {
  const CharPoly cp = char_poly(phi);
  return cp.trace.is_zero() && cp.det.is_zero();
}

long long higgs_family_dim(int d, int j) {
  if (d < 0 || j < 0 || j > d)
    throw std::invalid_argument("higgs_family_dim: requires d >= 0 and 0 <= j <= d");
  return h_p2(0, d - j);
}

}  // namespace vwb
