#include "vwb/chow.hpp"
#include "vwb/cohomology.hpp"
#include "vwb/fixed_points.hpp"
#include "vwb/moduli.hpp"
#include "vwb/report.hpp"
#include "vwb/schwarzenberger.hpp"
#include "vwb/split_higgs.hpp"
#include "vwb/verify.hpp"

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using vwb::Json;
using vwb::Report;

std::string human_value(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_map(std::ostringstream& os, const Json& map, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = map.begin(); it != map.end(); ++it) {
    const Json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) os << pad << "  - " << e.dump() << "\n";
    } else {
      os << pad << it.key() << ": " << human_value(v) << "\n";
    }
  }
}

std::string human_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (!r.inputs.empty()) {
    os << "inputs:\n";
    render_map(os, r.inputs, 2);
  }
  os << "outputs:\n";
  render_map(os, r.outputs, 2);
  if (r.discrepancies.empty()) {
    os << "discrepancies: none\n";
  } else {
    os << "discrepancies:\n";
    for (const auto& d : r.discrepancies)
      os << "  " << d.location << ": paper " << d.paper_value.dump() << " vs derived "
         << d.derived_value.dump() << "\n";
  }
  os << "status: " << r.status << "\n";
  return os.str();
}

std::array<int, 7> to_seven(const std::vector<int>& t) {
  std::array<int, 7> out{};
  for (int i = 0; i < 7; ++i) out[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
  return out;
}

Json json_of(const std::vector<int>& t) {
  Json a = Json::array();
  for (int v : t) a.push_back(v);
  return a;
}

vwb::H1Mode parse_mode(const std::string& mode) {
  return mode == "paper" ? vwb::H1Mode::paper : vwb::H1Mode::derived;
}

std::string h1_cell(int k, int d) {
  return "h1_end0(k=" + std::to_string(k) + ",d=" + std::to_string(d) + ")";
}

/// Dual-convention h^1 comparison shared by end0-dims and moduli.
void record_h1_discrepancy(Report& r, const vwb::L1Bundle& B, int d) {
  long long paper = vwb::h1_end0_l1(B, d, vwb::H1Mode::paper);
  long long derived = vwb::h1_end0_l1(B, d, vwb::H1Mode::derived);
  if (paper != derived) r.discrepancies.push_back({h1_cell(B.k(), d), Json(paper), Json(derived)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for rank-two wild pairs on the projective plane"};
  app.require_subcommand(1);
  bool json = false;
  std::string out_file;
  app.add_flag("--json", json, "emit the machine-readable report (schema vwb/1)");
  app.add_option("--out", out_file, "also write the report to FILE");

  std::optional<Report> result;

  // ---- chern ----------------------------------------------------------
  auto* chern = app.add_subcommand("chern", "Chern classes of the bundle families");
  chern->require_subcommand(1)->fallthrough();
  {
    auto* l1 = chern->add_subcommand("l1", "one-secant family E_{r,s}");
    l1->fallthrough();
    auto r = std::make_shared<int>(0);
    auto s = std::make_shared<int>(0);
    l1->add_option("--r", *r)->required();
    l1->add_option("--s", *s)->required();
    l1->callback([&result, r, s] {
      vwb::L1Bundle B(*r, *s);
      vwb::ChernPair c = vwb::chern_l1(B);
      Report rep;
      rep.command = "chern";
      rep.inputs["family"] = "l1";
      rep.inputs["r"] = *r;
      rep.inputs["s"] = *s;
      rep.outputs["c1"] = c.c1;
      rep.outputs["c2"] = c.c2;
      rep.outputs["k"] = B.k();
      result = rep;
    });

    auto* l2 = chern->add_subcommand("l2", "two-secant family on seven points");
    l2->fallthrough();
    auto p = std::make_shared<int>(0);
    auto t = std::make_shared<std::vector<int>>();
    l2->add_option("--p", *p)->required();
    l2->add_option("--t", *t, "seven exceptional twists")->required()->expected(7);
    l2->callback([&result, p, t] {
      vwb::L2Bundle B{*p, to_seven(*t)};
      vwb::ChernPair c = vwb::chern_l2(B);
      Report rep;
      rep.command = "chern";
      rep.inputs["family"] = "l2";
      rep.inputs["p"] = *p;
      rep.inputs["t"] = json_of(*t);
      rep.outputs["c1"] = c.c1;
      rep.outputs["c2"] = c.c2;
      result = rep;
    });

    auto* split = chern->add_subcommand("split", "direct sum O(m1) (+) O(m2)");
    split->fallthrough();
    auto m1 = std::make_shared<int>(0);
    auto m2 = std::make_shared<int>(0);
    split->add_option("--m1", *m1)->required();
    split->add_option("--m2", *m2)->required();
    split->callback([&result, m1, m2] {
      Report rep;
      rep.command = "chern";
      rep.inputs["family"] = "split";
      rep.inputs["m1"] = *m1;
      rep.inputs["m2"] = *m2;
      rep.outputs["c1"] = static_cast<long long>(*m1) + *m2;
      rep.outputs["c2"] = static_cast<long long>(*m1) * *m2;
      result = rep;
    });
  }

  // ---- cohom ----------------------------------------------------------
  auto* cohom = app.add_subcommand("cohom", "line bundle cohomology dimensions");
  cohom->require_subcommand(1)->fallthrough();
  {
    auto* p2 = cohom->add_subcommand("p2", "projective plane O(k)");
    p2->fallthrough();
    auto i = std::make_shared<int>(0);
    auto k = std::make_shared<long long>(0);
    p2->add_option("--i", *i)->required();
    p2->add_option("--k", *k)->required();
    p2->callback([&result, i, k] {
      Report rep;
      rep.command = "cohom";
      rep.inputs["surface"] = "p2";
      rep.inputs["i"] = *i;
      rep.inputs["k"] = *k;
      rep.outputs["h"] = vwb::h_p2(*i, *k);
      result = rep;
    });

    auto* quadric = cohom->add_subcommand("quadric", "smooth quadric O(a, b)");
    quadric->fallthrough();
    auto qi = std::make_shared<int>(0);
    auto a = std::make_shared<long long>(0);
    auto b = std::make_shared<long long>(0);
    quadric->add_option("--i", *qi)->required();
    quadric->add_option("--a", *a)->required();
    quadric->add_option("--b", *b)->required();
    quadric->callback([&result, qi, a, b] {
      Report rep;
      rep.command = "cohom";
      rep.inputs["surface"] = "quadric";
      rep.inputs["i"] = *qi;
      rep.inputs["a"] = *a;
      rep.inputs["b"] = *b;
      rep.outputs["h"] = vwb::h_p1xp1(*qi, {*a, *b});
      result = rep;
    });

    auto* blowup = cohom->add_subcommand("blowup7", "plane blown up in seven points");
    blowup->fallthrough();
    auto bi = std::make_shared<int>(0);
    auto bp = std::make_shared<long long>(0);
    auto bt = std::make_shared<std::vector<int>>();
    blowup->add_option("--i", *bi)->required();
    blowup->add_option("--p", *bp)->required();
    blowup->add_option("--t", *bt, "seven exceptional twists")->required()->expected(7);
    blowup->callback([&result, bi, bp, bt] {
      std::array<long long, 7> tt{};
      for (int idx = 0; idx < 7; ++idx) tt[static_cast<size_t>(idx)] = (*bt)[static_cast<size_t>(idx)];
      vwb::BlowupLine L{*bp, tt};
      vwb::BlowupDim h = vwb::h_blowup7(*bi, L);
      Report rep;
      rep.command = "cohom";
      rep.inputs["surface"] = "blowup7";
      rep.inputs["i"] = *bi;
      rep.inputs["p"] = *bp;
      rep.inputs["t"] = json_of(*bt);
      rep.outputs["h"] = h.value;
      rep.outputs["formula_negative"] = h.formula_negative;
      rep.outputs["chi"] = vwb::chi_blowup7(L);
      result = rep;
    });
  }

  // ---- stability ------------------------------------------------------
  auto* stability = app.add_subcommand("stability", "slope stability tests");
  stability->require_subcommand(1)->fallthrough();
  {
    auto* l1 = stability->add_subcommand("l1", "one-secant family");
    l1->fallthrough();
    auto r = std::make_shared<int>(0);
    auto s = std::make_shared<int>(0);
    l1->add_option("--r", *r)->required();
    l1->add_option("--s", *s)->required();
    l1->callback([&result, r, s] {
      vwb::L1Bundle B(*r, *s);
      Report rep;
      rep.command = "stability";
      rep.inputs["family"] = "l1";
      rep.inputs["r"] = *r;
      rep.inputs["s"] = *s;
      rep.outputs["stable"] = vwb::is_stable_l1(B);
      rep.outputs["k"] = B.k();
      result = rep;
    });

    auto* l2 = stability->add_subcommand("l2", "two-secant family");
    l2->fallthrough();
    auto p = std::make_shared<int>(0);
    auto t = std::make_shared<std::vector<int>>();
    l2->add_option("--p", *p)->required();
    l2->add_option("--t", *t, "seven exceptional twists")->required()->expected(7);
    l2->callback([&result, p, t] {
      vwb::L2Bundle B{*p, to_seven(*t)};
      Report rep;
      rep.command = "stability";
      rep.inputs["family"] = "l2";
      rep.inputs["p"] = *p;
      rep.inputs["t"] = json_of(*t);
      rep.outputs["stable"] = vwb::is_stable_l2(B);
      result = rep;
    });

    auto* split = stability->add_subcommand("split", "stable twisted field bound");
    split->fallthrough();
    auto m1 = std::make_shared<int>(0);
    auto m2 = std::make_shared<int>(0);
    auto d = std::make_shared<int>(0);
    split->add_option("--m1", *m1)->required();
    split->add_option("--m2", *m2)->required();
    split->add_option("--d", *d)->required();
    split->callback([&result, m1, m2, d] {
      Report rep;
      rep.command = "stability";
      rep.inputs["family"] = "split";
      rep.inputs["m1"] = *m1;
      rep.inputs["m2"] = *m2;
      rep.inputs["d"] = *d;
      rep.outputs["admits_stable_field"] = vwb::stability_bound(*m1, *m2, *d);
      result = rep;
    });
  }

  // ---- end0-dims ------------------------------------------------------
  {
    auto* sub = app.add_subcommand("end0-dims", "cohomology of End0 E(d), both conventions");
    sub->fallthrough();
    auto r = std::make_shared<int>(0);
    auto s = std::make_shared<int>(0);
    auto d = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>();
    sub->add_option("--r", *r)->required();
    sub->add_option("--s", *s)->required();
    sub->add_option("--d", *d)->required();
    sub->add_option("--mode", *mode, "h1 convention")->check(CLI::IsMember({"paper", "derived"}));
    sub->callback([&result, r, s, d, mode] {
      vwb::L1Bundle B(*r, *s);
      Report rep;
      rep.command = "end0-dims";
      rep.inputs["r"] = *r;
      rep.inputs["s"] = *s;
      rep.inputs["d"] = *d;
      if (!mode->empty()) rep.inputs["mode"] = *mode;
      rep.outputs["k"] = B.k();
      rep.outputs["h0"] = vwb::h0_end0_l1(B, *d);
      if (mode->empty()) {
        rep.outputs["h1_paper"] = vwb::h1_end0_l1(B, *d, vwb::H1Mode::paper);
        rep.outputs["h1_derived"] = vwb::h1_end0_l1(B, *d, vwb::H1Mode::derived);
      } else {
        rep.outputs["h1"] = vwb::h1_end0_l1(B, *d, parse_mode(*mode));
      }
      rep.outputs["h2"] = vwb::h2_end0_l1(B, *d);
      rep.outputs["chi"] = vwb::chi_end0_twist(vwb::chern_l1(B), *d);
      if (!mode->empty()) {
        vwb::EulerCheck ec = vwb::euler_consistency(B, *d, parse_mode(*mode));
        rep.outputs["euler_pass"] = ec.pass;
      }
      record_h1_discrepancy(rep, B, *d);
      result = rep;
    });
  }

  // ---- moduli ---------------------------------------------------------
  {
    auto* sub = app.add_subcommand("moduli", "deformation space dimensions");
    sub->fallthrough();
    auto r = std::make_shared<int>(0);
    auto s = std::make_shared<int>(0);
    auto d = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>();
    sub->add_option("--r", *r)->required();
    sub->add_option("--s", *s)->required();
    sub->add_option("--d", *d)->required();
    sub->add_option("--mode", *mode, "h1 convention")->check(CLI::IsMember({"paper", "derived"}));
    sub->callback([&result, r, s, d, mode] {
      vwb::L1Bundle B(*r, *s);
      const int k = B.k();
      const bool contested = !vwb::h1_modes_agree(k, *d);
      Report rep;
      rep.command = "moduli";
      rep.inputs["r"] = *r;
      rep.inputs["s"] = *s;
      rep.inputs["d"] = *d;
      if (!mode->empty()) rep.inputs["mode"] = *mode;
      record_h1_discrepancy(rep, B, *d);

      if (contested && mode->empty()) {
        // Underdetermined without an explicit convention.
        vwb::HyperDims paper = vwb::hyper_dims(B, *d, vwb::H1Mode::paper);
        vwb::HyperDims derived = vwb::hyper_dims(B, *d, vwb::H1Mode::derived);
        Json notes = Json::array();
        for (const auto& n : paper.notes) notes.push_back(n);
        for (const auto& n : derived.notes) notes.push_back(n);
        rep.outputs["notes"] = notes;
        rep.status = "unknown";
        result = rep;
        return;
      }

      vwb::H1Mode m = mode->empty() ? vwb::H1Mode::derived : parse_mode(*mode);
      vwb::HyperDims h = vwb::hyper_dims(B, *d, m);
      if (h.h1_dim.has_value()) {
        rep.outputs["h1_dim"] = *h.h1_dim;
        rep.outputs["h2_dim"] = *h.h2_dim;
      } else {
        rep.status = "unknown";
      }
      if (!h.notes.empty()) {
        Json notes = Json::array();
        for (const auto& n : h.notes) notes.push_back(n);
        rep.outputs["notes"] = notes;
      }
      result = rep;
    });
  }

  // ---- split ----------------------------------------------------------
  {
    auto* sub = app.add_subcommand("split", "parameter counts for fields on O (+) O(m)");
    sub->fallthrough();
    auto m = std::make_shared<int>(0);
    auto d = std::make_shared<int>(0);
    auto oracle = std::make_shared<bool>(false);
    auto seed = std::make_shared<std::uint64_t>(1);
    sub->add_option("--m", *m)->required();
    sub->add_option("--d", *d)->required();
    sub->add_flag("--oracle", *oracle, "run the exact commutator-rank oracle");
    sub->add_option("--seed", *seed, "generator seed for the oracle draw");
    sub->callback([&result, m, d, oracle, seed] {
      vwb::ParamCount pc = vwb::higgs_param_count(*m, *d);
      Report rep;
      rep.command = "split";
      rep.inputs["m"] = *m;
      rep.inputs["d"] = *d;
      if (*oracle) {
        rep.inputs["oracle"] = true;
        rep.inputs["seed"] = *seed;
      }
      rep.outputs["total"] = pc.total;
      rep.outputs["modulo_conj"] = pc.modulo_conj;
      rep.outputs["tangent_dim"] = vwb::tangent_dim_split(*m, *d);
      if (*oracle) {
        try {
          vwb::PolyMatrix2 phi = vwb::random_stable_higgs(*m, *d, *seed);
          vwb::AdjointRank ar = vwb::adjoint_rank_oracle(*m, *d, phi);
          rep.outputs["commutant_dim"] = ar.commutant_dim;
          rep.outputs["orbit_dim"] = ar.orbit_dim;
          rep.outputs["quotient_dim"] = ar.quotient_dim;
          const bool match = ar.quotient_dim == vwb::tangent_dim_split(*m, *d);
          rep.outputs["oracle_matches_tangent"] = match;
          if (!match) rep.status = "fail";
        } catch (const std::runtime_error& e) {
          // Degenerate cell: no draw satisfies the commutant certificate.
          rep.outputs["oracle_error"] = std::string(e.what());
          rep.status = "unknown";
        }
      }
      result = rep;
    });
  }

  // ---- fixed-points ---------------------------------------------------
  {
    auto* sub = app.add_subcommand("fixed-points", "circle-fixed components for (c1, c2, d)");
    sub->fallthrough();
    auto c1 = std::make_shared<long long>(0);
    auto c2 = std::make_shared<long long>(0);
    auto d = std::make_shared<int>(0);
    sub->add_option("--c1", *c1)->required();
    sub->add_option("--c2", *c2)->required();
    sub->add_option("--d", *d)->required();
    sub->callback([&result, c1, c2, d] {
      Report rep;
      rep.command = "fixed-points";
      rep.inputs["c1"] = *c1;
      rep.inputs["c2"] = *c2;
      rep.inputs["d"] = *d;
      Json comps = Json::array();
      for (const auto& f : vwb::enumerate_fixed(*c1, *c2, *d)) {
        Json e;
        e["m"] = f.m;
        e["j"] = f.j;
        e["l1"] = f.l1;
        e["l2"] = f.l2;
        e["higgs_dim"] = f.higgs_dim;
        e["flag"] = vwb::to_string(f.flag);
        comps.push_back(e);
      }
      rep.outputs["components"] = comps;
      result = rep;
    });
  }

  // ---- verify ---------------------------------------------------------
  {
    auto* sub = app.add_subcommand("verify", "run the cross-module invariant sweep");
    sub->fallthrough();
    auto opt = std::make_shared<vwb::VerifyOptions>();
    sub->add_option("--grid-dmax", opt->grid_dmax, "largest twist in the sweep");
    sub->add_option("--grid-kmax", opt->grid_kmax, "largest separation in the sweep");
    sub->add_option("--seeds", opt->seeds, "random draws per oracle cell");
    sub->callback([&result, opt] { result = vwb::verify_report(*opt); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!result) return 2;
  const std::string text = json ? result->to_text() : human_text(*result);
  std::cout << text;
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return 2;
    }
    f << text;
  }
  return vwb::exit_code_for_status(result->status);
}
