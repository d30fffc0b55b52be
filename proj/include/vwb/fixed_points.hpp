#pragma once

#include "vwb/split_higgs.hpp"

#include <string>
#include <vector>

namespace vwb {

enum class StabilityFlag { stable, candidate, strictly_semistable_candidate };

std::string to_string(StabilityFlag flag);

/// One fixed component of the circle action on pairs with the given Chern
/// data: twisted ideal-sheaf summands of colengths l1 >= l2 joined by a
/// nilpotent field vanishing on a degree-(d-j) curve section.
struct FixedComponent {
  long long m;          // summand twist; c1 = 2m - j
  int j;                // summand separation, 0 <= j <= d
  long long l1, l2;     // subscheme lengths, l2 <= l1, l1 + l2 = c2 - m(m-j)
  long long higgs_dim;  // h^0(O(d - j)), the family dimension of the field
  StabilityFlag flag;
};

/// All components for (c1, c2) at twist d >= 0, sorted by (j, l1).
/// j = 0 summands have equal slopes, so they are at best strictly semistable;
/// l1 > 0 keeps a component a candidate until stability of the ideal-sheaf
/// pair is settled.
std::vector<FixedComponent> enumerate_fixed(long long c1, long long c2, int d);

/// Trace and determinant of the field both vanish identically.
bool nilpotency_check(const PolyMatrix2& phi);

/// h^0(O(d - j)): sections available to the connecting field, 0 <= j <= d.
long long higgs_family_dim(int d, int j);

}  // namespace vwb
