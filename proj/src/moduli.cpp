#include "vwb/moduli.hpp"

#include <stdexcept>

namespace vwb {

namespace {

void check_positive_twist(int d, const char* who) {
  if (d < 1) throw std::invalid_argument(std::string(who) + ": requires d >= 1");
}

/// h^0(End E) for the small separations, where the bundle splits:
/// E_{r,r} = O(r) (+) O(r-1) gives 5, E_{r,r+1} = O(r) (+) O(r) gives 4.
long long h0_full_end_small_k(int k) { return k == 0 ? 5 : 4; }

}  // namespace

bool h1_modes_agree(int k, int d) { return d == 0 || d == 1 || k <= d + 2; }

SpectralTerms spectral_terms(const L1Bundle& B, int d, H1Mode mode) {
  check_positive_twist(d, "spectral_terms");
  const int k = B.k();

  SpectralTerms t{0, std::nullopt, 0, std::nullopt};
  t.e10 = h0_end0_l1(B, d);
  if (k <= 1) t.e10 -= h0_full_end_small_k(k) - 1;  // non-simple: quotient by extra endos

  const long long h1_0 = h1_end0_l1(B, 0, mode);
  const long long h1_d = h1_end0_l1(B, d, mode);
  const bool surjective = d == 1 || h1_d == 0;
  if (surjective) {
    t.e01 = h1_0 - h1_d;
    t.e11 = h1_d - (h1_0 - *t.e01);
  }
  return t;
}

HyperDims hyper_dims(const L1Bundle& B, int d, H1Mode mode) {
  check_positive_twist(d, "hyper_dims");
  const int k = B.k();
  const SpectralTerms t = spectral_terms(B, d, mode);

  HyperDims out;
  if (h1_modes_agree(k, d)) {
    out.h1_dim = t.e10 + *t.e01;
    out.h2_dim = t.e20 + *t.e11;
    return out;
  }

  // Contested cells: the published h^1(End0 E(d)) = 0 conflicts with the
  // Euler-characteristic route there.
  const long long h1_paper = h1_end0_l1(B, d, H1Mode::paper);
  const long long h1_derived = h1_end0_l1(B, d, H1Mode::derived);
  const long long headline = 3LL * d * (d + 3) / 2;
  out.notes.push_back("h1_end0(k=" + std::to_string(k) + ",d=" + std::to_string(d) +
                      "): tabulated " + std::to_string(h1_paper) + " vs euler-derived " +
                      std::to_string(h1_derived));
  if (mode == H1Mode::paper) {
    out.h1_dim = headline;
    out.h2_dim = 0;
    out.notes.push_back("published total " + std::to_string(headline) +
                        " differs from the term assembly e10+e01 = " +
                        std::to_string(t.e10 + *t.e01));
  } else {
    out.notes.push_back("restriction surjectivity unverified for d >= 2; if it holds, h1_dim = " +
                        std::to_string(headline) + " and h2_dim = 0");
  }
  return out;
}

EulerCheck euler_consistency(const L1Bundle& B, int d, H1Mode mode) {
  if (d < 0) throw std::invalid_argument("euler_consistency: requires d >= 0");
  EulerCheck out{};
  out.h0 = h0_end0_l1(B, d);
  out.h1 = h1_end0_l1(B, d, mode);
  out.h2 = h2_end0_l1(B, d);
  out.chi = chi_end0_twist(chern_l1(B), d);
  out.pass = out.h0 - out.h1 + out.h2 == out.chi;
  return out;
}

}  // namespace vwb
