#include "vwb/verify.hpp"

#include "vwb/chow.hpp"
#include "vwb/cohomology.hpp"
#include "vwb/fixed_points.hpp"
#include "vwb/hompoly.hpp"
#include "vwb/matrix.hpp"
#include "vwb/moduli.hpp"
#include "vwb/schwarzenberger.hpp"
#include "vwb/split_higgs.hpp"

#include <algorithm>
#include <string>

namespace vwb {

namespace {

class Section {
 public:
  explicit Section(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.notes.size() < 5) result_.notes.push_back(what);
    }
  }

  SectionResult take() { return std::move(result_); }

 private:
  SectionResult result_;
};

std::string cell(const std::string& tag, long long x, long long y) {
  return tag + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

HomPoly random_poly(Lcg& rng, int num_vars, int degree) {
  HomPoly p(num_vars, degree);
  for (const auto& e : monomial_basis(num_vars, degree)) {
    int c = static_cast<int>(rng.next() >> 33) % 19 - 9;  // -9..9, zeros keep it sparse
    if (c != 0) p.add_term(e, c);
  }
  return p;
}

RationalMatrix random_matrix(Lcg& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (rng.next() % 2 == 0) continue;  // keep it sparse
      int n = static_cast<int>(rng.next() >> 33) % 19 - 9;
      int d = static_cast<int>(rng.next() >> 33) % 4 + 1;
      m.set(r, c, Rational(n, d));
    }
  return m;
}

SectionResult check_monomial_bases(const VerifyOptions& opt) {
  Section s("monomial_basis_sizes");
  int top = std::max(8, 2 * opt.grid_dmax + 2);
  for (int k = 0; k <= top; ++k) {
    s.check(static_cast<long long>(monomial_basis(3, k).size()) == (k + 1LL) * (k + 2) / 2,
            cell("basis3", k, 0));
    s.check(static_cast<long long>(monomial_basis(2, k).size()) == k + 1LL, cell("basis2", k, 0));
  }
  s.check(monomial_basis(3, -1).empty(), "basis3(-1)");
  s.check(monomial_basis(2, -4).empty(), "basis2(-4)");
  return s.take();
}

SectionResult check_polynomial_laws(const VerifyOptions& opt) {
  Section s("polynomial_ring_laws");
  for (int seed = 1; seed <= std::max(opt.seeds, 3) * 40; ++seed) {
    Lcg rng(seed);
    int deg = static_cast<int>(rng.next() % 3);
    HomPoly p = random_poly(rng, 3, deg);
    HomPoly q = random_poly(rng, 3, deg);
    HomPoly r = random_poly(rng, 3, deg);
    HomPoly w = random_poly(rng, 3, deg + 1);
    s.check((p + q) + r == p + (q + r), "assoc-add seed " + std::to_string(seed));
    s.check(p + q == q + p, "comm-add seed " + std::to_string(seed));
    s.check(p * w == w * p, "comm-mul seed " + std::to_string(seed));
    s.check((p * q) * w == p * (q * w), "assoc-mul seed " + std::to_string(seed));
    s.check(w * (p + q) == w * p + w * q, "distrib seed " + std::to_string(seed));
  }
  return s.take();
}

SectionResult check_rank_kernel(const VerifyOptions& opt) {
  Section s("rank_kernel_identities");
  s.check(RationalMatrix::identity(3).rank() == 3, "identity rank");
  RationalMatrix z(4, 7);
  s.check(z.rank() == 0 && z.kernel_dim() == 7, "zero matrix");
  for (int seed = 1; seed <= std::max(opt.seeds, 3) * 20; ++seed) {
    Lcg rng(seed + 1000);
    int rows = 3 + static_cast<int>(rng.next() % 5);
    int cols = 3 + static_cast<int>(rng.next() % 5);
    RationalMatrix m = random_matrix(rng, rows, cols);
    int rank = m.rank();
    s.check(rank + m.kernel_dim() == cols, "rank+kernel seed " + std::to_string(seed));
    s.check(rank <= std::min(rows, cols), "rank bound seed " + std::to_string(seed));
    RationalMatrix t(cols, rows);
    for (const auto& [pos, v] : m.entries()) t.set(pos.second, pos.first, v);
    s.check(t.rank() == rank, "transpose rank seed " + std::to_string(seed));
  }
  return s.take();
}

SectionResult check_chow(const VerifyOptions& opt) {
  Section s("chow_euler_characteristics");
  for (long long k = -8; k <= 8; ++k) {
    Rational chi = euler_char(chern_character_line(k));
    s.check(chi == Rational(h_p2(0, k) - h_p2(1, k) + h_p2(2, k)), cell("chi_line", k, 0));
  }
  for (long long c1 = -6; c1 <= 6; ++c1)
    for (long long c2 = -12; c2 <= 12; ++c2)
      for (int d = 0; d <= std::max(opt.grid_dmax, 5); ++d) {
        Rational via_ring =
            euler_char(chern_character_end0({c1, c2}) * chern_character_line(d));
        s.check(via_ring == Rational(chi_end0_twist({c1, c2}, d)), cell("chi_end0", c1, c2));
      }
  for (int seed = 1; seed <= 25; ++seed) {
    Lcg rng(seed + 2000);
    auto rnd = [&] {
      return Rational(static_cast<int>(rng.next() >> 33) % 19 - 9,
                      static_cast<int>(rng.next() >> 33) % 4 + 1);
    };
    ChowClass a{rnd(), rnd(), rnd()}, b{rnd(), rnd(), rnd()}, c{rnd(), rnd(), rnd()};
    s.check(a * b == b * a, "chow comm seed " + std::to_string(seed));
    s.check((a * b) * c == a * (b * c), "chow assoc seed " + std::to_string(seed));
    s.check(a * ChowClass{1, 0, 0} == a, "chow unit seed " + std::to_string(seed));
  }
  return s.take();
}

SectionResult check_quadric(const VerifyOptions&) {
  Section s("quadric_serre_duality");
  for (long long a = -10; a <= 10; ++a)
    for (long long b = -10; b <= 10; ++b)
      for (int i = 0; i <= 2; ++i)
        s.check(h_p1xp1(i, {a, b}) == h_p1xp1(2 - i, {-a - 2, -b - 2}), cell("serre", a, b));
  return s.take();
}

SectionResult check_blowup(const VerifyOptions&) {
  Section s("blowup_formulas");
  for (long long d = 0; d <= 6; ++d) {
    BlowupLine L{3 * d, {-d, -d, -d, -d, -d, -d, -d}};
    s.check(h_blowup7(0, L).value == h_blowup7_special(0, d), cell("special_h0", d, 0));
    s.check(h_blowup7(1, L).value == h_blowup7_special(1, d), cell("special_h1", d, 0));
    s.check(!h_blowup7(0, L).formula_negative && !h_blowup7(1, L).formula_negative,
            cell("special_flag", d, 0));
  }
  for (long long p = -1; p <= 5; ++p)
    for (long long t0 = -3; t0 <= 3; ++t0)
      for (long long t1 = -3; t1 <= 3; ++t1) {
        BlowupLine L{p, {t0, t1, 0, 0, 0, 0, 0}};
        BlowupDim h0 = h_blowup7(0, L), h1 = h_blowup7(1, L);
        if (h0.formula_negative || h1.formula_negative) {
          s.check(h0.value == 0 || h1.value == 0, cell("clamp", p, t0));
          continue;
        }
        s.check(h0.value - h1.value == chi_blowup7(L), cell("blowup_chi", p, t0));
      }
  return s.take();
}

SectionResult check_l1_kunneth(const VerifyOptions& opt) {
  Section s("l1_h0_kunneth_assembly");
  for (int k = 0; k <= std::max(opt.grid_kmax, 7); ++k)
    for (int d = 0; d <= std::max(opt.grid_dmax, 5); ++d) {
      L1Bundle B(0, k);
      long long assembled = h_p1xp1(0, {d, d}) + h_p1xp1(0, {1 - k + d, 1 + k + d}) - h_p2(0, d);
      s.check(h0_end0_l1(B, d) == assembled, cell("kunneth", k, d));
      long long quadric_h1 = h_p1xp1(1, {1 - k + d, 1 + k + d});
      s.check(h1_end0_l1(B, d, H1Mode::derived) == quadric_h1, cell("derived_h1", k, d));
    }
  return s.take();
}

SectionResult check_l1_hrr(const VerifyOptions& opt, std::vector<Discrepancy>& ledger) {
  Section s("l1_hrr_gate");
  for (int k = 0; k <= std::max(opt.grid_kmax, 7); ++k)
    for (int d = 0; d <= std::max(opt.grid_dmax, 5); ++d) {
      L1Bundle B(0, k);
      EulerCheck derived = euler_consistency(B, d, H1Mode::derived);
      EulerCheck paper = euler_consistency(B, d, H1Mode::paper);
      s.check(derived.pass, cell("derived_gate", k, d));
      bool contested = d >= 2 && k > d + 2;
      s.check(paper.pass == !contested, cell("paper_gate", k, d));
      if (paper.h1 != derived.h1)
        ledger.push_back({"h1_end0(k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")",
                          Json(paper.h1), Json(derived.h1)});
      s.check((paper.h1 != derived.h1) == contested, cell("mode_agreement", k, d));
    }
  return s.take();
}

SectionResult check_l1_structure(const VerifyOptions& opt) {
  Section s("l1_forms_and_stability");
  for (int r = -3; r <= 3; ++r) {
    ChernPair even = chern_l1({r, r});
    s.check(even.c1 == 2LL * r - 1 && even.c2 == static_cast<long long>(r) * (r - 1),
            cell("split_chern_k0", r, 0));
    ChernPair odd = chern_l1({r, r + 1});
    s.check(odd.c1 == 2LL * r && odd.c2 == static_cast<long long>(r) * r,
            cell("split_chern_k1", r, 0));
    s.check(is_isomorphic_l1(L1Bundle(r + 2, r), L1Bundle(r, r + 2)), cell("normalize", r, 0));
  }
  for (int k = 0; k <= std::max(opt.grid_kmax, 7); ++k) {
    L1Bundle B(0, k);
    s.check(is_stable_l1(B) == (k >= 2), cell("stability", k, 0));
    s.check(homogeneous_form(B).has_value() == (k <= 2), cell("forms", k, 0));
    s.check(h2_end0_l1(B, std::min(k, opt.grid_dmax)) == 0, cell("h2", k, 0));
  }
  return s.take();
}

SectionResult check_l2(const VerifyOptions&) {
  Section s("l2_family");
  const std::array<std::array<int, 7>, 4> overlap_instances = {{{1, 1, 1, 1, 1, 0, 0},
                                                                {2, 1, 1, 1, 0, 0, 0},
                                                                {5, 0, 0, 0, 0, 0, 0},
                                                                {2, 2, 1, 0, 0, 0, 0}}};
  for (const auto& t : overlap_instances) {
    L2Bundle B{-1, t};
    s.check(is_stable_l2(B), "stable p=-1 sum=5");
    s.check(overlap_l1_l2(L1Bundle(-1, 2), B), "overlap p=-1");
    s.check(chern_l2(B).c1 == 0, "overlap c1");
  }
  s.check(!is_stable_l2(L2Bundle{0, {0, 0, 0, 0, 0, 0, 0}}), "unstable p=0 t=0");
  L2Bundle img = l2_isomorphism_image(1, {0, 0, 0, 0, 0, 0, 0});
  s.check(img.p == 8 && img.t == std::array<int, 7>{-3, -3, -3, -3, -3, -3, -3},
          "iso image q=1");
  L2Bundle img0 = l2_isomorphism_image(0, {0, 0, 0, 0, 0, 0, 0});
  s.check(img0.p == 0 && img0.t_sum() == 0, "iso image identity");
  return s.take();
}

SectionResult check_split_counts(const VerifyOptions& opt) {
  Section s("split_parameter_counts");
  int dmax = std::max(opt.grid_dmax, 4);
  for (int d = 0; d <= dmax; ++d)
    for (int m = 0; m <= d; ++m) {
      ParamCount pc = higgs_param_count(m, d);
      long long monomials = static_cast<long long>(monomial_basis(3, d).size()) * 2 +
                            monomial_basis(3, d + m).size() + monomial_basis(3, d - m).size();
      s.check(pc.total == monomials, cell("total", m, d));
      s.check(tangent_dim_split(m, d) == pc.modulo_conj - h_p2(0, d), cell("tangent", m, d));
    }
  return s.take();
}

SectionResult check_split_oracle(const VerifyOptions& opt) {
  Section s("split_adjoint_oracle");
  for (int d = 0; d <= opt.grid_dmax; ++d)
    for (int m = 0; m <= d; ++m) {
      if (m == 0 && d == 0) {
        // Degenerate cell: the commutator kernel always contains Id and phi,
        // so the certificate must fail in the designed way.
        bool threw = false;
        try {
          random_stable_higgs(0, 0, 1);
        } catch (const std::runtime_error&) {
          threw = true;
        }
        s.check(threw, "degenerate (0,0)");
        continue;
      }
      for (int seed = 1; seed <= opt.seeds; ++seed) {
        PolyMatrix2 phi = random_stable_higgs(m, d, seed);
        AdjointRank ar = adjoint_rank_oracle(m, d, phi);
        long long h0_full_end = 2 + h_p2(0, m) + h_p2(0, -m);
        s.check(ar.commutant_dim == 1, cell("commutant", m, d));
        s.check(ar.orbit_dim == h0_full_end - 1, cell("orbit", m, d));
        s.check(ar.quotient_dim == tangent_dim_split(m, d), cell("quotient", m, d));
      }
    }
  return s.take();
}

SectionResult check_split_char_poly(const VerifyOptions& opt) {
  Section s("split_spectral_data");
  for (int d = 1; d <= std::max(opt.grid_dmax, 2); ++d)
    for (int m = 0; m <= d; ++m)
      for (int seed = 1; seed <= opt.seeds; ++seed) {
        PolyMatrix2 phi = random_stable_higgs(m, d, seed);
        CharPoly cp = char_poly(phi);
        s.check(cp.trace.is_zero(), cell("trace", m, d));
        s.check(cp.det.degree() == 2 * d, cell("det_degree", m, d));
        HomPoly expected = -(phi.a() * phi.a()) - phi.b() * phi.c();
        s.check(cp.det == expected, cell("det_expansion", m, d));
      }
  long long smooth = 0;
  const int trials = 100;
  for (int seed = 1; seed <= trials; ++seed) {
    PolyMatrix2 phi = random_stable_higgs(seed % 2, 1, seed);
    if (conic_is_smooth(char_poly(phi).det)) ++smooth;
  }
  s.check(smooth >= 90, "smooth conic rate " + std::to_string(smooth) + "/100");
  return s.take();
}

SectionResult check_moduli(const VerifyOptions& opt) {
  Section s("moduli_dimensions");
  int kmax = std::max(opt.grid_kmax, 7);
  for (int k = 0; k <= kmax; ++k)
    for (H1Mode mode : {H1Mode::paper, H1Mode::derived}) {
      HyperDims h = hyper_dims(L1Bundle(0, k), 1, mode);
      s.check(h.h1_dim == 6 && h.h2_dim == 0, cell("d1_headline", k, 0));
    }
  for (int d = 2; d <= std::max(opt.grid_dmax, 2); ++d)
    for (int k = 0; k <= d + 2; ++k)
      for (H1Mode mode : {H1Mode::paper, H1Mode::derived}) {
        HyperDims h = hyper_dims(L1Bundle(0, k), d, mode);
        s.check(h.h1_dim == 3LL * d * (d + 3) / 2 && h.h2_dim == 0, cell("headline", k, d));
      }
  for (int d = 1; d <= std::max(opt.grid_dmax, 2); ++d)
    for (int k = 0; k <= kmax; ++k) {
      bool contested = d >= 2 && k > d + 2;
      for (H1Mode mode : {H1Mode::paper, H1Mode::derived}) {
        SpectralTerms t = spectral_terms(L1Bundle(0, k), d, mode);
        s.check(t.e20 == 0, cell("e20", k, d));
        if (k <= 2) s.check(t.e01 == 0, cell("e01_low_k", k, d));
        if (t.e11.has_value()) s.check(*t.e11 == 0, cell("e11", k, d));
      }
      HyperDims derived = hyper_dims(L1Bundle(0, k), d, H1Mode::derived);
      s.check(derived.h1_dim.has_value() == !contested, cell("derived_known", k, d));
      HyperDims paper = hyper_dims(L1Bundle(0, k), d, H1Mode::paper);
      s.check(paper.h1_dim.has_value(), cell("paper_known", k, d));
    }
  return s.take();
}

SectionResult check_fixed_points(const VerifyOptions& opt) {
  Section s("fixed_point_components");
  for (long long c1 = -6; c1 <= 6; ++c1)
    s.check(enumerate_fixed(c1, -1, 1).empty() && enumerate_fixed(c1, -3, 1).empty(),
            cell("empty_negative_c2", c1, 0));
  int dmax = std::clamp(opt.grid_dmax, 1, 3);
  for (int d = 1; d <= dmax; ++d)
    for (long long c1 = -4; c1 <= 4; ++c1)
      for (long long c2 = -3; c2 <= 6; ++c2) {
        auto comps = enumerate_fixed(c1, c2, d);
        for (size_t i = 0; i < comps.size(); ++i) {
          const auto& f = comps[i];
          s.check(2 * f.m - f.j == c1, cell("c1_identity", c1, c2));
          s.check(f.m * (f.m - f.j) + f.l1 + f.l2 == c2, cell("c2_identity", c1, c2));
          s.check(f.l2 <= f.l1 && f.l2 >= 0, cell("length_order", c1, c2));
          s.check(f.higgs_dim == higgs_family_dim(d, f.j), cell("higgs_dim", c1, c2));
          bool flag_ok = f.j == 0 ? f.flag == StabilityFlag::strictly_semistable_candidate
                         : f.l1 > 0 ? f.flag == StabilityFlag::candidate
                                    : f.flag == StabilityFlag::stable;
          s.check(flag_ok, cell("flag_rule", c1, c2));
          if (i > 0)
            s.check(std::pair(comps[i - 1].j, comps[i - 1].l1) <= std::pair(f.j, f.l1),
                    cell("sorted", c1, c2));
          if (c2 < 0) s.check(f.m > 0 && f.m < f.j, cell("negative_c2_shape", c1, c2));
          // The emitted family is nilpotent: phi = [[0,0],[s,0]] on O(m) (+) O(m-j).
          Exponents zpow(3, 0);
          zpow[2] = d - f.j;
          HomPoly sform = HomPoly::monomial(3, zpow, 1);
          PolyMatrix2 phi = PolyMatrix2::trace_free(static_cast<int>(f.m),
                                                    static_cast<int>(f.m) - f.j, d,
                                                    HomPoly(3, d), HomPoly(3, d + f.j), sform);
          s.check(nilpotency_check(phi), cell("nilpotent", c1, c2));
        }
        // Twisting by O(1) shifts (c1, c2) -> (c1 + 2, c2 + c1 + 1) and m -> m + 1.
        auto shifted = enumerate_fixed(c1 + 2, c2 + c1 + 1, d);
        s.check(shifted.size() == comps.size(), cell("shift_count", c1, c2));
        for (size_t i = 0; i < std::min(shifted.size(), comps.size()); ++i) {
          s.check(shifted[i].m == comps[i].m + 1 && shifted[i].j == comps[i].j &&
                      shifted[i].l1 == comps[i].l1 && shifted[i].l2 == comps[i].l2 &&
                      shifted[i].flag == comps[i].flag,
                  cell("shift_match", c1, c2));
        }
      }
  return s.take();
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& opt) {
  VerifyResult out;
  out.sections.push_back(check_monomial_bases(opt));
  out.sections.push_back(check_polynomial_laws(opt));
  out.sections.push_back(check_rank_kernel(opt));
  out.sections.push_back(check_chow(opt));
  out.sections.push_back(check_quadric(opt));
  out.sections.push_back(check_blowup(opt));
  out.sections.push_back(check_l1_kunneth(opt));
  out.sections.push_back(check_l1_hrr(opt, out.discrepancies));
  out.sections.push_back(check_l1_structure(opt));
  out.sections.push_back(check_l2(opt));
  out.sections.push_back(check_split_counts(opt));
  out.sections.push_back(check_split_oracle(opt));
  out.sections.push_back(check_split_char_poly(opt));
  out.sections.push_back(check_moduli(opt));
  out.sections.push_back(check_fixed_points(opt));
  for (const auto& sec : out.sections) {
    out.total_checks += sec.checks;
    if (!sec.pass()) out.all_pass = false;
  }
  return out;
}

Report verify_report(const VerifyOptions& opt) {
  VerifyResult v = run_verify(opt);
  Report r;
  r.command = "verify";
  r.inputs["grid_dmax"] = opt.grid_dmax;
  r.inputs["grid_kmax"] = opt.grid_kmax;
  r.inputs["seeds"] = opt.seeds;
  Json sections = Json::array();
  for (const auto& sec : v.sections) {
    Json j;
    j["name"] = sec.name;
    j["checks"] = sec.checks;
    j["failures"] = sec.failures;
    j["pass"] = sec.pass();
    if (!sec.notes.empty()) j["notes"] = sec.notes;
    sections.push_back(j);
  }
  r.outputs["sections"] = sections;
  r.outputs["total_checks"] = v.total_checks;
  r.outputs["all_pass"] = v.all_pass;
  r.discrepancies = v.discrepancies;
  r.status = v.all_pass ? "pass" : "fail";
  return r;
}

}  // namespace vwb
