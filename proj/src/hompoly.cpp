#include "vwb/hompoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vwb {

namespace {

int exp_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_num_vars(int num_vars) {
  if (num_vars != 2 && num_vars != 3)
    throw std::invalid_argument("HomPoly: num_vars must be 2 or 3");
}

}  // namespace

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int sa = exp_sum(a), sb = exp_sum(b);
  if (sa != sb) return sa > sb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Exponents> monomial_basis(int num_vars, int degree) {
  check_num_vars(num_vars);
  std::vector<Exponents> out;
  if (degree < 0) return out;
  if (num_vars == 2) {
    for (int e0 = degree; e0 >= 0; --e0) out.push_back({e0, degree - e0});
  } else {
    for (int e0 = degree; e0 >= 0; --e0)
      for (int e1 = degree - e0; e1 >= 0; --e1) out.push_back({e0, e1, degree - e0 - e1});
  }
  return out;
}

HomPoly::HomPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  check_num_vars(num_vars);
  if (degree < 0) throw std::invalid_argument("HomPoly: degree must be nonnegative");
}

HomPoly HomPoly::monomial(int num_vars, const Exponents& exps, const Rational& coeff) {
  HomPoly p(num_vars, exp_sum(exps));
  p.add_term(exps, coeff);
  return p;
}

void HomPoly::check_support(const Exponents& exps) const {
  if (static_cast<int>(exps.size()) != num_vars_)
    throw std::invalid_argument("HomPoly: exponent vector has wrong length");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("HomPoly: negative exponent");
  if (exp_sum(exps) != degree_)
    throw std::invalid_argument("HomPoly: exponents do not sum to the declared degree");
}

Rational HomPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) {
    check_support(exps);
    return;
  }
  check_support(exps);
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string HomPoly::to_string() const {
  if (is_zero()) return "0";
  static const char* names3[] = {"x", "y", "z"};
  std::string out;
  for (const auto& [exps, c] : terms_) {
    Rational coeff = c;
    if (out.empty()) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    std::string mono;
    for (int v = 0; v < num_vars_; ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names3[v];
      if (exps[v] > 1) mono += "^" + std::to_string(exps[v]);
    }
    if (mono.empty()) {
      out += vwb::to_string(coeff);
    } else if (coeff == 1) {
      out += mono;
    } else {
      out += vwb::to_string(coeff) + "*" + mono;
    }
  }
  return out;
}

namespace {

void check_compatible_vars(const HomPoly& p, const HomPoly& q) {
  if (p.num_vars() != q.num_vars())
    throw std::invalid_argument("HomPoly: mixed variable counts");
}

int combined_degree(const HomPoly& p, const HomPoly& q) {
  if (p.is_zero() && q.is_zero()) return p.degree();
  if (p.is_zero()) return q.degree();
  if (q.is_zero()) return p.degree();
  if (p.degree() != q.degree())
    throw std::invalid_argument("HomPoly: sum of inhomogeneous degrees");
  return p.degree();
}

}  // namespace

HomPoly operator+(const HomPoly& p, const HomPoly& q) {
  check_compatible_vars(p, q);
  HomPoly out(p.num_vars(), combined_degree(p, q));
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  for (const auto& [e, c] : q.terms()) out.add_term(e, c);
  return out;
}

HomPoly operator-(const HomPoly& p) {
  HomPoly out(p.num_vars(), p.degree());
  for (const auto& [e, c] : p.terms()) out.add_term(e, -c);
  return out;
}

HomPoly operator-(const HomPoly& p, const HomPoly& q) { return p + (-q); }

HomPoly operator*(const HomPoly& p, const HomPoly& q) {
  check_compatible_vars(p, q);
  HomPoly out(p.num_vars(), p.degree() + q.degree());
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      Exponents e(p.num_vars());
      for (int v = 0; v < p.num_vars(); ++v) e[v] = ep[v] + eq[v];
      out.add_term(e, cp * cq);
    }
  return out;
}

HomPoly operator*(const Rational& c, const HomPoly& p) {
  HomPoly out(p.num_vars(), p.degree());
  if (c == 0) return out;
  for (const auto& [e, pc] : p.terms()) out.add_term(e, c * pc);
  return out;
}

bool operator==(const HomPoly& p, const HomPoly& q) {
  return p.num_vars() == q.num_vars() && p.degree() == q.degree() && p.terms() == q.terms();
}

}  // namespace vwb
