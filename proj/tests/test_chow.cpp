#include "vwb/chow.hpp"
#include "vwb/cohomology.hpp"

#include <doctest.h>

using namespace vwb;

TEST_SUITE("chow") {
  TEST_CASE("products truncate beyond the point class") {
    ChowClass H{0, 1, 0};
    CHECK(H * H == ChowClass{0, 0, 1});
    CHECK((H * H) * H == ChowClass{0, 0, 0});
    ChowClass a{1, 2, Rational(1, 2)};
    CHECK(a * ChowClass{1, 0, 0} == a);
  }

  TEST_CASE("characters and todd class") {
    CHECK(todd_p2() == ChowClass{1, Rational(3, 2), 1});
    CHECK(chern_character_line(2) == ChowClass{1, 2, 2});
    CHECK(chern_character_line(-1) == ChowClass{1, -1, Rational(1, 2)});
    CHECK(chern_character_end0({1, 0}) == ChowClass{3, 0, 1});
    CHECK(chern_character_end0({0, 3}) == ChowClass{3, 0, -12});
  }

  TEST_CASE("euler characteristic of line bundles") {
    for (long long d = -8; d <= 8; ++d) {
      Rational chi = euler_char(chern_character_line(d));
      CHECK(chi == Rational((d + 1) * (d + 2), 2));
      CHECK(chi == Rational(h_p2(0, d) - h_p2(1, d) + h_p2(2, d)));
    }
  }

  TEST_CASE("twisted chi closed form") {
    CHECK(chi_end0_twist({2 * 3 - 1, 3 * 2}, 1) == 10);       // equal-twist pair at d = 1
    CHECK(chi_end0_twist({-1, 10}, 2) == 3 * 2 * 5 / 2 + 3 + 1 - 40);
    SUBCASE("separation form") {
      // c1^2 - 4 c2 = 1 - k^2 for the one-secant pairs, so chi = (3/2)d(d+3) + 4 - k^2.
      for (int r = -2; r <= 2; ++r)
        for (int k = 0; k <= 7; ++k) {
          long long c1 = 2LL * r + k - 1;
          long long c2 = (static_cast<long long>(r) * (r - 1) +
                          static_cast<long long>(r + k) * (r + k - 1)) /
                         2;
          CHECK(chi_end0_twist({c1, c2}, 0) == 4 - static_cast<long long>(k) * k);
          CHECK(chi_end0_twist({c1, c2}, 2) == 15 + 4 - static_cast<long long>(k) * k);
        }
    }
  }

  TEST_CASE("closed form matches the ring product route") {
    for (long long c1 = -6; c1 <= 6; ++c1)
      for (long long c2 = -12; c2 <= 12; ++c2)
        for (long long d = 0; d <= 5; ++d) {
          Rational via_ring = euler_char(chern_character_end0({c1, c2}) * chern_character_line(d));
          CHECK(via_ring == Rational(chi_end0_twist({c1, c2}, d)));
        }
  }
}
