#pragma once

#include "vwb/schwarzenberger.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vwb {

/// Second-page terms of the two-row spectral sequence computing the twisted
/// deformation space of a one-secant pair. e20 vanishes identically (the
/// second wedge of a line bundle is zero); e01 and e11 require the
/// restriction H^1(End0 E) -> H^1(End0 E(d)) to be onto, which is certified
/// for d = 1 and holds trivially when the target vanishes; otherwise they are
/// left unset.
struct SpectralTerms {
  long long e10;
  std::optional<long long> e01;
  long long e20;
  std::optional<long long> e11;
};

SpectralTerms spectral_terms(const L1Bundle& B, int d, H1Mode mode);  // d >= 1

/// Deformation space dimensions assembled from the terms. Unset means the
/// answer is underdetermined in the requested mode; `notes` records the
/// conflicting ingredient values for the contested cells (d >= 2, k > d+2).
struct HyperDims {
  std::optional<long long> h1_dim;
  std::optional<long long> h2_dim;
  std::vector<std::string> notes;
};

HyperDims hyper_dims(const L1Bundle& B, int d, H1Mode mode);  // d >= 1

/// True in the regime where both h^1 conventions agree (d <= 1 or k <= d+2).
bool h1_modes_agree(int k, int d);

/// h^0 - h^1 + h^2 against the Riemann-Roch value for End0 E(d).
struct EulerCheck {
  long long h0, h1, h2, chi;
  bool pass;
};

EulerCheck euler_consistency(const L1Bundle& B, int d, H1Mode mode);

}  // namespace vwb
