#pragma once

#include "vwb/hompoly.hpp"
#include "vwb/matrix.hpp"

#include <cstdint>

namespace vwb {

/// Twisted endomorphism [[a, b], [c, e]] of O(m1) (+) O(m2) with values in
/// O(d): deg a = deg e = d, deg b = d + m1 - m2, deg c = d + m2 - m1.
/// Construction normalizes to m1 >= m2 (conjugating by the summand swap) and
/// requires an entry whose slot degree is negative to be zero.
class PolyMatrix2 {
 public:
  PolyMatrix2(int m1, int m2, int d, HomPoly a, HomPoly b, HomPoly c, HomPoly e);
  /// Trace-free field: e = -a.
  static PolyMatrix2 trace_free(int m1, int m2, int d, HomPoly a, HomPoly b, HomPoly c);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int d() const { return d_; }
  const HomPoly& a() const { return a_; }
  const HomPoly& b() const { return b_; }
  const HomPoly& c() const { return c_; }
  const HomPoly& e() const { return e_; }
  bool is_trace_free() const { return (a_ + e_).is_zero(); }

 private:
  int m1_, m2_, d_;
  HomPoly a_, b_, c_, e_;
};

/// Coefficients of the spectral (characteristic) data: trace has degree d,
/// determinant degree exactly 2d.
struct CharPoly {
  HomPoly trace;
  HomPoly det;
};

CharPoly char_poly(const PolyMatrix2& phi);

/// A split bundle O(m1) (+) O(m2) admits a stable twisted field only when
/// |m1 - m2| <= d.
bool stability_bound(int m1, int m2, int d);

/// Raw and conjugation-reduced parameter counts for fields on O (+) O(m),
/// 0 <= m <= d: total = 2d^2 + 6d + m^2 + 4; modulo_conj subtracts the
/// reparametrization freedom (3 for m = 0, 1 + (m+1)(m+2)/2 otherwise).
struct ParamCount {
  long long total, modulo_conj;
};

ParamCount higgs_param_count(int m, int d);

/// Expected tangent dimension at a split point: modulo_conj minus the
/// spectral-coefficient freedom h^0(O(d)).
long long tangent_dim_split(int m, int d);

/// Full-rank test for the symmetric matrix of a ternary quadratic form.
bool conic_is_smooth(const HomPoly& q);

struct AdjointRank {
  long long commutant_dim;  // kernel of ad(phi) on global endomorphisms
  long long orbit_dim;      // its rank
  long long quotient_dim;   // h^0(End0 E(d)) minus orbit_dim
};

/// Exact matrix of psi |-> psi*phi - phi*psi from global endomorphisms of
/// O (+) O(m) into trace-free O(d)-twisted endomorphisms, in the documented
/// monomial bases (deterministic row/column order).
RationalMatrix adjoint_matrix(int m, int d, const PolyMatrix2& phi);

/// Rank data of adjoint_matrix; requires 0 <= m <= d and trace-free phi.
AdjointRank adjoint_rank_oracle(int m, int d, const PolyMatrix2& phi);

/// Deterministic generator: coefficients from {-5..5}\{0} via a fixed 64-bit
/// LCG (see README), resampled until the commutant certificate
/// commutant_dim == 1 holds. Throws after 64 failed attempts, which signals a
/// degenerate cell such as (m, d) = (0, 0).
PolyMatrix2 random_stable_higgs(int m, int d, std::uint64_t seed);

/// Fixed LCG used everywhere randomness is needed; kept tiny and documented
/// so byte-identical reports are reproducible.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform over {-5,...,-1, 1,...,5}.
  int small_nonzero();

 private:
  std::uint64_t state_;
};

}  // namespace vwb
