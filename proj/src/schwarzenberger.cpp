#include "vwb/schwarzenberger.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vwb {

L1Bundle::L1Bundle(int r, int s) : r(r), s(s) {
  if (this->s < this->r) std::swap(this->r, this->s);
}

long long L2Bundle::t_sum() const {
  long long sum = 0;
  for (int ti : t) sum += ti;
  return sum;
}

ChernPair chern_l1(const L1Bundle& B) {
  long long r = B.r, s = B.s;
  return {r + s - 1, (r * (r - 1) + s * (s - 1)) / 2};  // both products even
}

bool is_isomorphic_l1(const L1Bundle& A, const L1Bundle& B) {
  return A.r == B.r && A.s == B.s;
}

std::string HomogeneousForm::to_string() const {
  if (kind == Kind::direct_sum)
    return "O(" + std::to_string(a) + ") + O(" + std::to_string(b) + ")";
  return "T(" + std::to_string(a) + ")";
}

std::optional<HomogeneousForm> homogeneous_form(const L1Bundle& B) {
  switch (B.k()) {
    case 0:
      return HomogeneousForm{HomogeneousForm::Kind::direct_sum, B.r, B.r - 1};
    case 1:
      return HomogeneousForm{HomogeneousForm::Kind::direct_sum, B.r, B.r};
    case 2:
      return HomogeneousForm{HomogeneousForm::Kind::tangent_twist, B.r - 1, 0};
    default:
      return std::nullopt;
  }
}

bool is_stable_l1(const L1Bundle& B) { return B.k() >= 2; }

namespace {

void check_twist(int d, const char* who) {
  if (d < 0) throw std::invalid_argument(std::string(who) + ": twist d must be nonnegative");
}

}  // namespace

long long h0_end0_l1(const L1Bundle& B, int d) {
  check_twist(d, "h0_end0_l1");
  long long k = B.k(), dd = d;
  long long v = dd * (dd + 1) / 2;
  if (dd >= k - 1) v += (2 - k + dd) * (2 + k + dd);
  return v;
}

long long h1_end0_l1(const L1Bundle& B, int d, H1Mode mode) {
  check_twist(d, "h1_end0_l1");
  long long k = B.k(), dd = d;
  if (mode == H1Mode::derived) return std::max(0LL, k * k - (dd + 2) * (dd + 2));
  if (k <= 2) return 0;
  if (d == 0) return k * k - 4;
  if (d == 1) return k * k - 9;
  return 0;
}

long long h2_end0_l1(const L1Bundle& B, int d) {
  (void)B;
  check_twist(d, "h2_end0_l1");
  return 0;
}

ChernPair chern_l2(const L2Bundle& B) {
  long long p = B.p, sum = B.t_sum();
  long long sq = 0, cross = 0;
  for (int ti : B.t) sq += static_cast<long long>(ti) * ti;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) cross += static_cast<long long>(B.t[i]) * B.t[j];
  return {sum + 3 * p - 2, 4 * p * p - 3 * p + (3 * p - 1) * sum + sq + cross};
}

bool is_stable_l2(const L2Bundle& B) {
  if (B.p < -1) throw std::invalid_argument("is_stable_l2: criterion requires p >= -1");
  long long p = B.p, sum = B.t_sum();
  long long c1 = chern_l2(B).c1;

  bool all_nonneg = true;
  for (int ti : B.t)
    if (c1 + 2LL * ti < 0) all_nonneg = false;

  if (all_nonneg) return 3 * sum == 8 - 7 * p || 3 * sum == 7 - 7 * p;

  long long lhs = 0;
  for (int ti : B.t) {
    long long u = c1 + 2LL * ti;
    lhs += u * u + u;
  }
  return lhs == (-3 * c1 + 2 * p + 1) * (-3 * c1 + 2 * p + 2);
}

L2Bundle l2_isomorphism_image(int q, const std::array<int, 7>& s) {
  int sum = 0;
  for (int si : s) sum += si;
  L2Bundle out;
  out.p = 3 * sum + 8 * q;
  for (int i = 0; i < 7; ++i) out.t[i] = -s[i] - 3 * q - sum;
  return out;
}

bool overlap_l1_l2(const L1Bundle& A, const L2Bundle& B) {
  return B.p >= -7 && B.p <= -1 && A.r == B.p && A.s == B.p + 3 && B.t_sum() == 4 - B.p;
}

}  // namespace vwb
