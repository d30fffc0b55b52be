#pragma once

#include "vwb/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace vwb {

/// Exponent vector of a monomial; one entry per variable, all entries >= 0.
using Exponents = std::vector<int>;

/// Graded-lexicographic order, highest term first (x before y before z).
/// Map iteration with this comparator matches the monomial_basis order.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors of the given total degree in graded-lex order.
/// Empty for negative degree. Size is C(degree + num_vars - 1, num_vars - 1).
std::vector<Exponents> monomial_basis(int num_vars, int degree);

/// Sparse homogeneous polynomial over Q in 2 or 3 variables.
/// Every stored term has the declared total degree and a nonzero coefficient;
/// the zero polynomial is an empty term map that still carries its degree.
class HomPoly {
 public:
  using TermMap = std::map<Exponents, Rational, MonomialOrder>;

  HomPoly(int num_vars, int degree);  // zero polynomial
  static HomPoly monomial(int num_vars, const Exponents& exps, const Rational& coeff);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Exponents& exps) const;
  /// Accumulates onto the existing coefficient; erases the term when it cancels.
  void add_term(const Exponents& exps, const Rational& coeff);

  std::string to_string() const;

 private:
  void check_support(const Exponents& exps) const;

  int num_vars_;
  int degree_;
  TermMap terms_;
};

/// Addition and subtraction require matching variable count and, unless one
/// side is zero, matching degree; a zero operand adopts the other's degree.
HomPoly operator+(const HomPoly& p, const HomPoly& q);
HomPoly operator-(const HomPoly& p, const HomPoly& q);
HomPoly operator-(const HomPoly& p);
/// Degrees add, also when a factor is zero.
HomPoly operator*(const HomPoly& p, const HomPoly& q);
HomPoly operator*(const Rational& c, const HomPoly& p);
bool operator==(const HomPoly& p, const HomPoly& q);

}  // namespace vwb
