#include "vwb/split_higgs.hpp"

#include "vwb/cohomology.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace vwb {

namespace {

void check_entry(const HomPoly& p, int required_degree, const char* slot) {
  if (p.num_vars() != 3)
    throw std::invalid_argument(std::string("PolyMatrix2: entry ") + slot +
                                " must be a ternary form");
  if (required_degree < 0) {
    if (!p.is_zero())
      throw std::invalid_argument(std::string("PolyMatrix2: entry ") + slot +
                                  " must be zero (its slot degree is negative)");
    return;
  }
  if (!p.is_zero() && p.degree() != required_degree)
    throw std::invalid_argument(std::string("PolyMatrix2: entry ") + slot +
                                " has degree " + std::to_string(p.degree()) + ", expected " +
                                std::to_string(required_degree));
}

}  // namespace

PolyMatrix2::PolyMatrix2(int m1, int m2, int d, HomPoly a, HomPoly b, HomPoly c, HomPoly e)
    : m1_(m1), m2_(m2), d_(d), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      e_(std::move(e)) {
  if (d_ < 0) throw std::invalid_argument("PolyMatrix2: twist d must be nonnegative");
  if (m1_ < m2_) {  // conjugate by the summand swap
    std::swap(m1_, m2_);
    std::swap(a_, e_);
    std::swap(b_, c_);
  }
  check_entry(a_, d_, "a");
  check_entry(e_, d_, "e");
  check_entry(b_, d_ + m1_ - m2_, "b");
  check_entry(c_, d_ + m2_ - m1_, "c");
}

PolyMatrix2 PolyMatrix2::trace_free(int m1, int m2, int d, HomPoly a, HomPoly b, HomPoly c) {
  HomPoly e = -a;
  return PolyMatrix2(m1, m2, d, std::move(a), std::move(b), std::move(c), std::move(e));
}

CharPoly char_poly(const PolyMatrix2& phi) {
  HomPoly trace(3, phi.d());
  trace = trace + phi.a() + phi.e();
  HomPoly det(3, 2 * phi.d());
  det = det + phi.a() * phi.e() - phi.b() * phi.c();
  return {trace, det};
}

bool stability_bound(int m1, int m2, int d) {
  if (d < 0) throw std::invalid_argument("stability_bound: d must be nonnegative");
  long long gap = m1 >= m2 ? m1 - m2 : m2 - m1;
  return gap <= d;
}

namespace {

void check_split_cell(int m, int d, const char* who) {
  if (m < 0 || d < 0 || m > d)
    throw std::invalid_argument(std::string(who) + ": requires 0 <= m <= d");
}

}  // namespace

ParamCount higgs_param_count(int m, int d) {
  check_split_cell(m, d, "higgs_param_count");
  long long mm = m, dd = d;
  long long total = 2 * dd * dd + 6 * dd + mm * mm + 4;
  long long modulo_conj =
      m == 0 ? 2 * dd * dd + 6 * dd + 1 : 2 * dd * dd + 6 * dd + mm * (mm - 3) / 2 + 2;
  return {total, modulo_conj};
}

long long tangent_dim_split(int m, int d) {
  check_split_cell(m, d, "tangent_dim_split");
  long long mm = m, dd = d;
  long long v = 3 * dd * (dd + 3) / 2;
  if (m > 0) v += mm * (mm - 3) / 2 + 1;
  return v;
}

bool conic_is_smooth(const HomPoly& q) {
  if (q.num_vars() != 3 || q.degree() != 2)
    throw std::invalid_argument("conic_is_smooth: expected a ternary quadratic form");
  // Symmetric 3x3 coefficient matrix: M_ii = coeff(x_i^2), M_ij = coeff(x_i x_j)/2.
  Rational M[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponents e(3, 0);
      e[i] += 1;
      e[j] += 1;
      M[i][j] = q.coeff(e);
      if (i != j) M[i][j] /= 2;
    }
  Rational det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                 M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                 M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  return det != 0;
}

RationalMatrix adjoint_matrix(int m, int d, const PolyMatrix2& phi) {
  check_split_cell(m, d, "adjoint_matrix");
  if (phi.m1() != m || phi.m2() != 0 || phi.d() != d)
    throw std::invalid_argument("adjoint_matrix: phi must be a field on O (+) O(m) twisted by d");
  if (!phi.is_trace_free())
    throw std::invalid_argument("adjoint_matrix: phi must be trace-free");

  // Domain: endomorphisms psi = [[alpha, beta], [gamma, delta]] of O(m) (+) O,
  // with deg alpha = deg delta = 0, deg beta = m, deg gamma = -m.
  // Codomain coordinates: the commutator [psi, phi] written in the same slot
  // order (a' deg d, b' deg d+m, c' deg d-m), on graded-lex monomial bases:
  //   a' = beta*c - gamma*b,  b' = (alpha - delta)*b - 2a*beta,
  //   c' = 2a*gamma - (alpha - delta)*c,  e' = -a'.
  const auto basis_d = monomial_basis(3, d);
  const auto basis_bp = monomial_basis(3, d + m);
  const auto basis_cp = monomial_basis(3, d - m);
  const auto basis_beta = monomial_basis(3, m);
  const int gamma_cols = m == 0 ? 1 : 0;

  const int rows = static_cast<int>(basis_d.size() + basis_bp.size() + basis_cp.size());
  const int cols = 2 + static_cast<int>(basis_beta.size()) + gamma_cols;
  RationalMatrix M(rows, cols);

  auto write_column = [&](int col, const HomPoly& ap, const HomPoly& bp, const HomPoly& cp) {
    int row = 0;
    for (const auto& e : basis_d) M.set(row++, col, ap.coeff(e));
    for (const auto& e : basis_bp) M.set(row++, col, bp.coeff(e));
    for (const auto& e : basis_cp) M.set(row++, col, cp.coeff(e));
  };

  const HomPoly zero_a(3, d), zero_b(3, d + m), zero_c(3, std::max(d - m, 0));
  int col = 0;
  // alpha = 1: a' = 0, b' = b, c' = -c.
  write_column(col++, zero_a, phi.b(), -phi.c());
  // delta = 1: a' = 0, b' = -b, c' = c.
  write_column(col++, zero_a, -phi.b(), phi.c());
  // beta = monomial mu: a' = mu*c, b' = -2a*mu, c' = 0.
  for (const auto& mu_e : basis_beta) {
    HomPoly mu = HomPoly::monomial(3, mu_e, 1);
    write_column(col++, mu * phi.c(), Rational(-2) * (phi.a() * mu), zero_c);
  }
  // gamma = 1 (only for m = 0): a' = -b, b' = 0, c' = 2a.
  if (gamma_cols) write_column(col++, -phi.b(), zero_b, Rational(2) * phi.a());
  return M;
}

AdjointRank adjoint_rank_oracle(int m, int d, const PolyMatrix2& phi) {
  RationalMatrix M = adjoint_matrix(m, d, phi);
  int rank = M.rank();
  long long h0_end0_twisted = h_p2(0, d) + h_p2(0, d + m) + h_p2(0, d - m);
  return {M.cols() - rank, rank, h0_end0_twisted - rank};
}

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

int Lcg::small_nonzero() {
  int r = static_cast<int>((next() >> 33) % 10);  // 0..9
  return r < 5 ? r - 5 : r - 4;
}

PolyMatrix2 random_stable_higgs(int m, int d, std::uint64_t seed) {
  check_split_cell(m, d, "random_stable_higgs");
  Lcg rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto draw = [&](int degree) {
      HomPoly p(3, degree);
      for (const auto& e : monomial_basis(3, degree)) p.add_term(e, rng.small_nonzero());
      return p;
    };
    PolyMatrix2 phi = PolyMatrix2::trace_free(m, 0, d, draw(d), draw(d + m), draw(d - m));
    if (adjoint_rank_oracle(m, d, phi).commutant_dim == 1) return phi;
  }
  throw std::runtime_error("random_stable_higgs: no commutant certificate in 64 attempts at (m, d) = (" +
                           std::to_string(m) + ", " + std::to_string(d) + ")");
}

}  // namespace vwb
