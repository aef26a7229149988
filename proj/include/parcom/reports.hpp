#pragma once

#include "parcom/io.hpp"

// Report builders shared by the command-line tool and the acceptance harness.
// Each builder returns the JSON report plus one green/red verdict. Reports
// carry no volatile fields (no timing, no paths), so a fixed input and seed
// always produce byte-identical output.
namespace parcom::reports {

using io::json;

struct VerbResult {
  json report;
  bool green = false;
};

// Every basis vector of Y is grouplike: column l of delta has exactly one
// nonzero entry, a 1 inside block row l.
inline bool is_grouplike_on_basis(const GlobalComodule& y) {
  const std::size_t n = y.H.dim;
  for (std::size_t l = 0; l < y.y_dim; ++l) {
    std::size_t hits = 0;
    bool placed = false;
    for (std::size_t r = 0; r < y.delta.rows(); ++r) {
      const Rational& e = y.delta.at(r, l);
      if (e.is_zero()) continue;
      ++hits;
      placed = e.is_one() && r / n == l;
    }
    if (hits != 1 || !placed) return false;
  }
  return true;
}

inline json pmcheck_json(const PmCheck& c) {
  json j{{"ok", c.ok}};
  if (!c.ok) {
    j["failing"] = c.axiom;
    j["h_index"] = c.h_index;
    j["k_index"] = c.k_index;
  }
  return j;
}

inline json prcheck_json(const PrCheck& c) {
  json j{{"ok", c.ok}};
  if (!c.ok) {
    j["failing"] = c.axiom;
    j["g_index"] = c.g_index;
    j["h_index"] = c.h_index;
  }
  return j;
}

inline json apccheck_json(const ApcCheck& c) {
  json j{{"ok", c.ok}};
  if (!c.ok) {
    j["failing"] = c.axiom;
    j["witness_column"] = c.witness_column;
  }
  return j;
}

inline json paircheck_json(const PairCheck& c) {
  json j{{"ok", c.ok}};
  if (!c.ok) {
    j["failing"] = c.failing;
    if (!c.witness.empty()) j["witness"] = io::vector_json(c.witness);
  }
  return j;
}

inline json hopfcheck_json(const HopfCheck& c) {
  json j{{"ok", c.ok},
         {"ker_pi_bb_closed", c.ker_bb_submodule},
         {"ker_pi_right_leg_closed", c.ker_right_leg_submodule}};
  if (!c.ok) j["failing"] = c.failing;
  return j;
}

inline json isocert_json(const IsoCertificate& c) {
  json j{{"ok", c.ok}};
  if (!c.ok) j["failing"] = c.failing;
  return j;
}

// Accepts either a bare counital-coaction file {"coalgebra",...} or the
// algebraic form {"hopf",...} / fixture form.
inline NcComodule nc_from(const json& j) {
  if (j.contains("coalgebra")) {
    Coalgebra h = io::coalgebra_from(io::field(j, "coalgebra", "coaction"));
    const std::size_t m = io::dim_field(j, "x_dim", "coaction");
    const std::size_t n = h.dim;
    return NcComodule{std::move(h), m,
                      io::matrix_from(io::field(j, "partial_coaction", "coaction"), m * n, m,
                                      "partial_coaction")};
  }
  return to_nc(io::apc_from(j).apc);
}

// ---- verbs -------------------------------------------------------------------

inline VerbResult run_validate(const json& input) {
  std::string kind;
  if (input.contains("fixture")) {
    const std::string name = input["fixture"].get<std::string>();
    kind = name == "truncated-powers" ? "bialgebra" : "hopf";
  } else {
    kind = io::field(input, "kind", "structure").get<std::string>();
  }
  json rep{{"verb", "validate"}};
  AxiomReport primal, dual;
  if (kind == "coalgebra") {
    Coalgebra c = io::coalgebra_from(input);
    rep["dim"] = c.dim;
    primal = validate(c);
    dual = validate(dualize(c));
  } else if (kind == "algebra") {
    Algebra a = io::algebra_from(input);
    rep["dim"] = a.dim;
    primal = validate(a);
    dual = validate(dualize(a));
  } else if (kind == "bialgebra") {
    Bialgebra b = io::bialgebra_from(input);
    rep["dim"] = b.dim();
    primal = validate(b);
    dual = validate(dualize(b));
  } else if (kind == "hopf" || kind == "group") {
    HopfAlgebra h = io::hopf_from(input);
    kind = "hopf";
    rep["dim"] = h.dim();
    primal = validate(h);
    dual = validate(dualize(h));
  } else {
    throw io::ParseError("structure: unknown kind '" + kind + "'");
  }
  rep["kind"] = kind;
  rep["result"] = io::axiom_report_json(primal);
  rep["dual_result"] = io::axiom_report_json(dual);
  const bool green = primal.ok && dual.ok;
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_check_gpc(const json& input) {
  PartialComoduleDatum d = io::datum_from(input);
  json rep{{"verb", "check-gpc"},
           {"coalgebra_dim", d.H.dim},
           {"x_dim", d.x_dim},
           {"bullet_dim", d.bullet_dim}};
  AxiomReport co = validate(d.H);
  rep["coalgebra_valid"] = io::axiom_report_json(co);
  bool green = co.ok;
  try {
    validate_datum(d);
    GpcCheck c = check_gpc(d);
    rep["gpc"] = io::gpc_check_json(c);
    rep["routes_agree"] = c.criterion_verdict == c.definitional_ok;
    green = green && c.ok && c.criterion_verdict == c.definitional_ok;
  } catch (const std::invalid_argument& e) {
    rep["gpc"] = json{{"ok", false}, {"failing", e.what()}};
    green = false;
  }
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_globalize(const json& input) {
  PartialComoduleDatum d = io::datum_from(input);
  json rep{{"verb", "globalize"},
           {"coalgebra_dim", d.H.dim},
           {"x_dim", d.x_dim},
           {"bullet_dim", d.bullet_dim}};
  Globalization g = globalize(d);
  rep["certificate"] = io::certificate_json(g.certificate);
  rep["y_dim"] = g.Y.y_dim;
  rep["delta_y"] = io::matrix_json(g.Y.delta);
  rep["kappa"] = io::matrix_json(g.kappa);
  rep["eps_x"] = io::matrix_json(g.eps_x);
  rep["grouplike_on_basis"] = is_grouplike_on_basis(g.Y);
  const bool green = g.certificate.all_ok();
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_induce(const json& input) {
  NcComodule nc = nc_from(input);
  json rep{{"verb", "induce"}, {"coalgebra_dim", nc.H.dim}, {"x_dim", nc.x_dim}};
  if (!is_counital(nc)) {
    rep["counital"] = false;
    rep["green"] = false;
    return {std::move(rep), false};
  }
  rep["counital"] = true;
  Subspace q = defect_slices(nc);
  rep["defect_dim"] = q.dim();
  rep["defect_basis"] = io::matrix_json(q.basis());
  PartialComoduleDatum d = induce_from_nc(nc);
  rep["datum"] = io::datum_json(d);
  GpcCheck c = check_gpc(d);
  rep["gpc"] = io::gpc_check_json(c);
  rep["routes_agree"] = c.criterion_verdict == c.definitional_ok;
  const bool green = c.ok && c.criterion_verdict == c.definitional_ok;
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_dilate(const json& input) {
  PartialModule pm = io::module_from(input);
  json rep{{"verb", "dilate"}, {"hopf_dim", pm.H.dim()}, {"m_dim", pm.m_dim}};
  PmCheck pc = check_partial_module(pm);
  rep["module"] = pmcheck_json(pc);
  bool green = pc.ok;
  if (pc.ok) {
    rep["bullet_dim"] = bullet_subspace(pm).dim();
    Dilation d = standard_dilation(pm);
    rep["y_dim"] = d.N.n_dim;
    DilationCheck dc = check_dilation(pm, d);
    json dj{{"ok", dc.ok}, {"proper", dc.proper}, {"minimal", dc.minimal}};
    if (!dc.ok) dj["failing"] = dc.failing;
    rep["dilation"] = std::move(dj);
    IsoCertificate cx = crosscheck_dilation_globalization(pm);
    rep["globalization_crosscheck"] = isocert_json(cx);
    green = dc.ok && cx.ok;
  }
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_parrep(const json& input) {
  PartialGroupRep r = io::parrep_from(input);
  json rep{{"verb", "parrep"}, {"order", r.G.order}, {"v_dim", r.v_dim}};
  PrCheck pc = check_partial_rep(r);
  rep["rep"] = prcheck_json(pc);
  bool green = pc.ok;
  if (pc.ok) {
    Subspace s = subspace_S(r);
    Subspace z = subspace_Z(r);
    const bool sz = s == z;
    rep["s_dim"] = s.dim();
    rep["z_dim"] = z.dim();
    rep["s_equals_z"] = sz;
    PartialModule pm = to_partial_module(r);
    PmCheck mc = check_partial_module(pm);
    rep["module"] = pmcheck_json(mc);
    rep["bullet_dim"] = bullet_subspace(pm).dim();
    IsoCertificate cx = crosscheck_dilation_globalization(pm);
    rep["globalization_crosscheck"] = isocert_json(cx);
    green = sz && mc.ok && cx.ok;
  }
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_apc(const json& input) {
  io::ApcInput in = io::apc_from(input);
  const AlgebraicPartialComodule& a = in.apc;
  json rep{{"verb", "apc"}, {"hopf_dim", a.H.dim()}, {"m_dim", a.m_dim}};
  ApcCheck full = check_apc(a);
  rep["apc"] = apccheck_json(full);
  rep["q_dim"] = build_q(a).dim();
  bool green = full.ok;
  if (in.truncation) {
    const std::size_t nt = *in.truncation;
    rep["fixture"] = json{{"name", "sweedler_trunc"}, {"N", nt}};
    SweedlerTruncation tr = sweedler_truncation(nt);
    Globalization g = globalize(tr.datum);
    rep["datum_route"] = json{{"certificate", io::certificate_json(g.certificate)},
                              {"y_dim", g.Y.y_dim},
                              {"y_dim_expected", nt + 1},
                              {"grouplike_on_basis", is_grouplike_on_basis(g.Y)}};
    green = green && g.certificate.gl1_ok && g.certificate.proper_ok && g.Y.y_dim == nt + 1 &&
            is_grouplike_on_basis(g.Y);
  }
  if (full.ok) {
    Globalization g2 = globalize_apc(a);
    rep["coaction_route"] = json{{"certificate", io::certificate_json(g2.certificate)},
                                 {"y_dim", g2.Y.y_dim}};
    green = green && g2.certificate.all_ok();
  }
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_hopf(const json& input) {
  if (input.contains("act_m")) {
    HopfPartialComodule m = io::hopfpc_from(input);
    json rep{{"verb", "hopf"},
             {"mode", "structure"},
             {"bialgebra_dim", m.B.dim()},
             {"x_dim", m.datum.x_dim},
             {"bullet_dim", m.datum.bullet_dim}};
    HopfCheck c = check_hopf_pc(m);
    rep["check"] = hopfcheck_json(c);
    bool green = c.ok;
    if (c.ok) {
      HopfGlobalization g = globalize_hopf(m);
      rep["globalization"] = json{{"certificate", io::certificate_json(g.glob.certificate)},
                                  {"y_dim", g.glob.Y.y_dim},
                                  {"eps_b_linear", g.eps_b_linear},
                                  {"action_coaction_compatible", g.compat_ok}};
      green = g.glob.certificate.all_ok() && g.eps_b_linear && g.compat_ok;
      if (auto s = find_antipode(m.B)) {
        HopfAlgebra h{m.B, std::move(*s)};
        IsoCertificate rt = pair_roundtrip(m, h);
        json fp = isocert_json(rt);
        fp["available"] = true;
        rep["fundamental_pair"] = std::move(fp);
        green = green && rt.ok;
      } else {
        rep["fundamental_pair"] = json{{"available", false}};
      }
    }
    rep["green"] = green;
    return {std::move(rep), green};
  }
  io::PairInput in = io::pair_from(input);
  json rep{{"verb", "hopf"},
           {"mode", "pair"},
           {"hopf_dim", in.hopf.dim()},
           {"v_dim", in.pair.v_dim},
           {"n_dim", in.pair.n.dim()}};
  PairCheck pc = check_pair(in.pair, in.hopf);
  rep["pair"] = paircheck_json(pc);
  rep["no_homogeneous_elements"] = no_homogeneous_elements(in.pair, in.hopf.dim());
  bool green = pc.ok;
  if (pc.ok) {
    HopfPartialComodule m = from_pair(in.pair, in.hopf);
    HopfCheck hc = check_hopf_pc(m);
    rep["structure"] = hopfcheck_json(hc);
    rep["x_dim"] = m.datum.x_dim;
    rep["bullet_dim"] = m.datum.bullet_dim;
    IsoCertificate rt = pair_roundtrip(m, in.hopf);
    rep["roundtrip"] = isocert_json(rt);
    IsoCertificate rf = pair_roundtrip_from(in.pair, in.hopf);
    rep["pair_recovered"] = isocert_json(rf);
    green = hc.ok && rt.ok && rf.ok;
  }
  rep["green"] = green;
  return {std::move(rep), green};
}

inline VerbResult run_example(const std::string& name, const std::vector<std::size_t>& dims,
                              std::size_t trunc_n, unsigned seed) {
  if (name == "c2-partial-module") {
    if (dims.size() != 3)
      throw io::ParseError("example: --dims expects three entries d-1,d0,d1");
    const std::size_t a = dims[0], b = dims[1], c = dims[2];
    if (a + b + c == 0) throw io::ParseError("example: --dims must not all be zero");
    Prng rng(seed);
    LinMap t = c2_family_t(a, b, c, rng);
    PartialModule pm = c2_partial_module(t);
    PmCheck pc = check_partial_module(pm);
    const std::size_t m = a + b + c;
    const std::size_t bdim = bullet_subspace(pm).dim();
    Dilation d = standard_dilation(pm);
    DilationCheck dc = check_dilation(pm, d);
    IsoCertificate cx = crosscheck_dilation_globalization(pm);
    json rep{{"verb", "example"},
             {"name", name},
             {"seed", seed},
             {"dims", dims},
             {"m_dim", m},
             {"module_ok", pc.ok},
             {"bullet_dim", bdim},
             {"bullet_dim_expected", m + a + c},
             {"y_dim", d.N.n_dim},
             {"y_dim_expected", 2 * b + a + c},
             {"dilation_ok", dc.ok},
             {"dilation_proper", dc.proper},
             {"dilation_minimal", dc.minimal},
             {"globalization_crosscheck", isocert_json(cx)}};
    const bool green =
        pc.ok && bdim == m + a + c && d.N.n_dim == 2 * b + a + c && dc.ok && cx.ok;
    rep["green"] = green;
    return {std::move(rep), green};
  }
  if (name == "sweedler-trunc") {
    if (trunc_n < 1) throw io::ParseError("example: --N must be >= 1");
    SweedlerTruncation tr = sweedler_truncation(trunc_n);
    ApcCheck ac = check_apc(tr.apc);
    Globalization g = globalize(tr.datum);
    Globalization g2 = globalize_apc(tr.apc);
    json rep{{"verb", "example"},
             {"name", name},
             {"N", trunc_n},
             {"apc", apccheck_json(ac)},
             {"y_dim", g.Y.y_dim},
             {"y_dim_expected", trunc_n + 1},
             {"grouplike_on_basis", is_grouplike_on_basis(g.Y)},
             {"datum_certificate", io::certificate_json(g.certificate)},
             {"coaction_route_y_dim", g2.Y.y_dim},
             {"coaction_route_certificate", io::certificate_json(g2.certificate)}};
    const bool green = ac.ok && g.Y.y_dim == trunc_n + 1 && is_grouplike_on_basis(g.Y) &&
                       g.certificate.gl1_ok && g.certificate.proper_ok &&
                       g2.certificate.all_ok();
    rep["green"] = green;
    return {std::move(rep), green};
  }
  if (name == "two-dim-coalgebra") {
    NcComodule nc = grouplike_primitive_nc();
    Subspace q = defect_slices(nc);
    const Subspace expected = Subspace::span_vectors(
        4, {{Rational(0), Rational(1), Rational(0), Rational(0)}});
    const bool q_match = q == expected;
    PartialComoduleDatum d = induce_from_nc(nc);
    GpcCheck gc = check_gpc(d);
    LinMap f = LinMap::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(0)}});
    const bool nc_accepts = is_nc_morphism(nc, nc, f);
    MorphismCheck mc = check_morphism(d, d, f);
    json rep{{"verb", "example"},
             {"name", name},
             {"defect_basis", io::matrix_json(q.basis())},
             {"defect_matches_g_tensor_x", q_match},
             {"datum", io::datum_json(d)},
             {"datum_gpc", io::gpc_check_json(gc)},
             {"morphism", io::matrix_json(f)},
             {"morphism_accepted_gpc", mc.ok},
             {"morphism_accepted_nc", nc_accepts}};
    const bool green = q_match && gc.ok && mc.ok && !nc_accepts;
    rep["green"] = green;
    return {std::move(rep), green};
  }
  throw io::ParseError("example: unknown name '" + name +
                       "' (expected c2-partial-module, sweedler-trunc, two-dim-coalgebra)");
}

inline VerbResult run_selftest(unsigned seed, bool mutate = false) {
  json rep{{"verb", "selftest"}, {"seed", seed}};
  bool green = true;

  {
    std::size_t passed = 0, total = 0;
    auto tick = [&](bool ok) {
      ++total;
      passed += ok;
      green = green && ok;
    };
    for (const HopfAlgebra& h : {kc2(), ks3(), sweedler_h4()}) {
      tick(validate(h).ok);
      tick(validate(dualize(h)).ok);
    }
    const Bialgebra mono = truncated_powers_bialgebra();
    tick(validate(mono).ok);
    tick(validate(dualize(mono)).ok);
    rep["validators"] = json{{"passed", passed}, {"total", total}};
  }

  {
    // single structure-constant bumps; every one must be rejected
    std::size_t detected = 0, total = 0;
    auto expect_fail = [&](bool ok) {
      ++total;
      detected += !ok;
      green = green && !ok;
    };
    for (const HopfAlgebra& base : {kc2(), ks3(), sweedler_h4()}) {
      {
        HopfAlgebra h = base;
        h.bi.co.delta.at(0, 0) += Rational(1);
        expect_fail(validate(h).ok);
      }
      {
        HopfAlgebra h = base;
        h.bi.co.eps.at(0, 0) += Rational(1);
        expect_fail(validate(h).ok);
      }
      {
        HopfAlgebra h = base;
        h.bi.alg.mu.at(0, 0) += Rational(1);
        expect_fail(validate(h).ok);
      }
      {
        HopfAlgebra h = base;
        h.bi.alg.unit.at(0, 0) += Rational(1);
        expect_fail(validate(h).ok);
      }
      {
        HopfAlgebra h = base;
        h.antipode.at(0, 0) += Rational(1);
        expect_fail(validate(h).ok);
      }
    }
    {
      Bialgebra b = truncated_powers_bialgebra();
      b.co.delta.at(0, 0) += Rational(1);
      expect_fail(validate(b).ok);
    }
    {
      Bialgebra b = truncated_powers_bialgebra();
      b.co.delta.at(4, 1) += Rational(1);
      expect_fail(validate(b).ok);
    }
    {
      Bialgebra b = truncated_powers_bialgebra();
      b.co.eps.at(0, 0) += Rational(1);
      expect_fail(validate(b).ok);
    }
    {
      Bialgebra b = truncated_powers_bialgebra();
      b.alg.mu.at(0, 0) += Rational(1);
      expect_fail(validate(b).ok);
    }
    {
      Bialgebra b = truncated_powers_bialgebra();
      b.alg.unit.at(0, 0) += Rational(1);
      expect_fail(validate(b).ok);
    }
    rep["mutations"] = json{{"detected", detected}, {"total", total}};
  }

  {
    Prng rng(seed);
    const HopfAlgebra h2 = kc2();
    const HopfAlgebra h4 = sweedler_h4();
    std::size_t route_agree = 0, glob_green = 0;
    const std::size_t total = 8;
    for (std::size_t t = 0; t < total; ++t) {
      const Coalgebra& h = (t % 2 == 0 ? h2 : h4).coalgebra();
      NcComodule nc = random_nc_comodule(h, 1 + t % 2, rng);
      PartialComoduleDatum d = induce_from_nc(nc);
      GpcCheck c = check_gpc(d);
      const bool routes = c.ok && c.criterion_verdict == c.definitional_ok;
      route_agree += routes;
      const bool g = globalize(d).certificate.all_ok();
      glob_green += g;
      green = green && routes && g;
    }
    rep["induced_coactions"] =
        json{{"total", total}, {"route_agreement", route_agree}, {"globalize_green", glob_green}};
  }

  {
    Prng rng(seed + 1);
    PartialModule pm = c2_partial_module(c2_family_t(1, 1, 1, rng));
    const std::size_t bdim = bullet_subspace(pm).dim();
    Dilation d = standard_dilation(pm);
    const bool c2ok = check_partial_module(pm).ok && check_dilation(pm, d).ok &&
                      crosscheck_dilation_globalization(pm).ok;
    const bool c2dims = bdim == 5 && d.N.n_dim == 4;
    PartialGroupRep r = partial_permutation_rep(cyclic_group(4), {0, 1});
    const bool rok = check_partial_rep(r).ok;
    const bool sz = subspace_S(r) == subspace_Z(r);
    const bool rcross = crosscheck_dilation_globalization(to_partial_module(r)).ok;
    PartialModule rnd = random_partial_module(kc2(), cyclic_group(2), rng);
    const bool rndok =
        check_partial_module(rnd).ok && crosscheck_dilation_globalization(rnd).ok;
    green = green && c2ok && c2dims && rok && sz && rcross && rndok;
    rep["partial_modules"] = json{{"c2_family_ok", c2ok},
                                  {"c2_bullet_dim", bdim},
                                  {"c2_dilation_dim", d.N.n_dim},
                                  {"c2_dims_expected", c2dims},
                                  {"partial_permutation_ok", rok},
                                  {"s_equals_z", sz},
                                  {"permutation_crosscheck_ok", rcross},
                                  {"random_module_ok", rndok}};
  }

  {
    SweedlerTruncation tr = sweedler_truncation(3);
    const bool apc_ok = check_apc(tr.apc).ok;
    Globalization g = globalize(tr.datum);
    const bool datum_vals = g.certificate.equalizer_dim == 4 && g.certificate.gl1_ok &&
                            g.certificate.proper_ok && is_grouplike_on_basis(g.Y);
    Globalization g2 = globalize_apc(tr.apc);
    const bool route_vals = g2.certificate.all_ok() && g2.certificate.equalizer_dim == 8;
    green = green && apc_ok && datum_vals && route_vals;
    rep["truncation"] = json{{"N", 3},
                             {"apc_ok", apc_ok},
                             {"datum_y_dim", g.certificate.equalizer_dim},
                             {"datum_grouplike", is_grouplike_on_basis(g.Y)},
                             {"coaction_route_y_dim", g2.certificate.equalizer_dim},
                             {"coaction_route_green", g2.certificate.all_ok()}};
  }

  {
    const HopfAlgebra h = kc2();
    FundamentalPair p{2, Subspace::span_vectors(
                             4, {{Rational(1), Rational(0), Rational(0), Rational(-1)},
                                 {Rational(0), Rational(1), Rational(-1), Rational(0)}})};
    HopfPartialComodule m = from_pair(p, h);
    const bool mok = check_hopf_pc(m).ok;
    const bool rt = pair_roundtrip(m, h).ok;
    const bool rf = pair_roundtrip_from(p, h).ok;
    LinMap eps_phi = LinMap::from_rows({{Rational(1), Rational(1)}});
    LinMap sgn_phi = LinMap::from_rows({{Rational(1), Rational(-1)}});
    const bool scan_ok = trivial_structure_scan(h, eps_phi).all_trivial &&
                         trivial_structure_scan(h, sgn_phi).all_trivial;
    HopfPartialComodule mono = monoid_contrast();
    const bool mono_ok = check_hopf_pc(mono).ok && mono.datum.bullet_dim == 2 &&
                         globalize_hopf(mono).glob.certificate.all_ok();
    green = green && mok && rt && rf && scan_ok && mono_ok;
    rep["hopf_structures"] = json{{"graded_pair_ok", mok},
                                  {"graded_roundtrip_ok", rt},
                                  {"graded_pair_recovered", rf},
                                  {"trivial_scan_ok", scan_ok},
                                  {"monoid_contrast_ok", mono_ok}};
  }

  if (mutate) {
    HopfAlgebra h = sweedler_h4();
    h.bi.co.delta.at(0, 0) += Rational(1);
    AxiomReport r = validate(h);
    rep["mutation"] = json{{"injected", true},
                           {"detected", !r.ok},
                           {"failing", r.identity},
                           {"witness_column", r.witness}};
    green = false;
  }

  rep["green"] = green;
  return {std::move(rep), green};
}

}  // namespace parcom::reports
