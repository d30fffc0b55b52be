#include "vwb/fixed_points.hpp"

#include "vwb/cohomology.hpp"

#include <doctest.h>

using namespace vwb;

TEST_SUITE("fixed_points") {
  TEST_CASE("component lists at twist one") {
    auto zero = enumerate_fixed(-1, 0, 1);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].m == 0);
    CHECK(zero[0].j == 1);
    CHECK(zero[0].l1 == 0);
    CHECK(zero[0].l2 == 0);
    CHECK(zero[0].higgs_dim == 1);
    CHECK(zero[0].flag == StabilityFlag::stable);

    auto one = enumerate_fixed(-1, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].l1 == 1);
    CHECK(one[0].l2 == 0);
    CHECK(one[0].flag == StabilityFlag::candidate);

    auto two = enumerate_fixed(-1, 2, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].l1 == 1);
    CHECK(two[0].l2 == 1);
    CHECK(two[1].l1 == 2);
    CHECK(two[1].l2 == 0);

    CHECK(enumerate_fixed(0, -1, 1).empty());
    for (long long c1 = -6; c1 <= 6; ++c1) CHECK(enumerate_fixed(c1, -2, 1).empty());

    // Even c1 at twist one forces equal summand slopes.
    auto even = enumerate_fixed(0, 1, 1);
    REQUIRE(even.size() == 1);
    CHECK(even[0].j == 0);
    CHECK(even[0].flag == StabilityFlag::strictly_semistable_candidate);

    CHECK_THROWS_AS(enumerate_fixed(0, 0, -1), std::invalid_argument);
  }

  TEST_CASE("twist zero only admits equal summands") {
    auto comps = enumerate_fixed(0, 0, 0);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].m == 0);
    CHECK(comps[0].j == 0);
    CHECK(comps[0].higgs_dim == 1);
    CHECK(comps[0].flag == StabilityFlag::strictly_semistable_candidate);
    CHECK(enumerate_fixed(-1, 5, 0).empty());  // odd c1 has no j = 0 solution
  }

  TEST_CASE("component invariants over a grid") {
    for (int d = 1; d <= 3; ++d)
      for (long long c1 = -5; c1 <= 5; ++c1)
        for (long long c2 = -2; c2 <= 6; ++c2) {
          auto comps = enumerate_fixed(c1, c2, d);
          for (size_t i = 0; i < comps.size(); ++i) {
            const auto& f = comps[i];
            CHECK(2 * f.m - f.j == c1);
            CHECK(f.m * (f.m - f.j) + f.l1 + f.l2 == c2);
            CHECK(f.l2 >= 0);
            CHECK(f.l2 <= f.l1);
            CHECK(f.j >= 0);
            CHECK(f.j <= d);
            CHECK(f.higgs_dim == higgs_family_dim(d, f.j));
            if (i > 0) {
              bool sorted = comps[i - 1].j < f.j ||
                            (comps[i - 1].j == f.j && comps[i - 1].l1 < f.l1);
              CHECK(sorted);
            }
          }
        }
  }

  TEST_CASE("twist shift reindexes the components") {
    for (int d = 1; d <= 3; ++d)
      for (long long c1 = -4; c1 <= 4; ++c1)
        for (long long c2 = -1; c2 <= 5; ++c2) {
          auto base = enumerate_fixed(c1, c2, d);
          auto shifted = enumerate_fixed(c1 + 2, c2 + c1 + 1, d);
          REQUIRE(base.size() == shifted.size());
          for (size_t i = 0; i < base.size(); ++i) {
            CHECK(shifted[i].m == base[i].m + 1);
            CHECK(shifted[i].j == base[i].j);
            CHECK(shifted[i].l1 == base[i].l1);
            CHECK(shifted[i].l2 == base[i].l2);
            CHECK(shifted[i].flag == base[i].flag);
          }
        }
  }

  TEST_CASE("family dimension of the connecting field") {
    CHECK(higgs_family_dim(1, 0) == 3);
    CHECK(higgs_family_dim(1, 1) == 1);
    CHECK(higgs_family_dim(2, 1) == 3);
    CHECK(higgs_family_dim(3, 0) == 10);
    CHECK(higgs_family_dim(3, 1) == 6);
    CHECK(higgs_family_dim(4, 4) == 1);
    CHECK(higgs_family_dim(0, 0) == 1);
    CHECK_THROWS_AS(higgs_family_dim(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(higgs_family_dim(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(higgs_family_dim(2, -1), std::invalid_argument);
  }

  TEST_CASE("the canonical family members are nilpotent") {
    for (int d = 1; d <= 3; ++d)
      for (int j = 0; j <= d; ++j) {
        Exponents zpow(3, 0);
        zpow[2] = d - j;
        HomPoly section = HomPoly::monomial(3, zpow, 1);
        PolyMatrix2 phi =
            PolyMatrix2::trace_free(j, 0, d, HomPoly(3, d), HomPoly(3, d + j), section);
        CHECK(nilpotency_check(phi));
      }
    // A field with nonzero trace or determinant is rejected.
    Exponents x1(3, 0);
    x1[0] = 1;
    HomPoly x = HomPoly::monomial(3, x1, 1);
    PolyMatrix2 diag(0, 0, 1, x, HomPoly(3, 1), HomPoly(3, 1), -x);
    CHECK_FALSE(nilpotency_check(diag));
  }

  TEST_CASE("flag names") {
    CHECK(to_string(StabilityFlag::stable) == "stable");
    CHECK(to_string(StabilityFlag::candidate) == "candidate");
    CHECK(to_string(StabilityFlag::strictly_semistable_candidate) ==
          "strictly_semistable_candidate");
  }
}
