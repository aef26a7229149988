#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcom/parmod.hpp"

namespace parcom {

// Right actions are maps X⊗B → X with the flat convention x_i⊗b_c ↦ i·n+c;
// slice c is the action of the basis element b_c.
inline std::vector<LinMap> action_slices(const LinMap& act, std::size_t n) {
  const std::size_t x = act.cols() / n;
  std::vector<LinMap> s(n, LinMap(act.rows(), x));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < x; ++i)
      for (std::size_t r = 0; r < act.rows(); ++r) s[c].at(r, i) = act.at(r, i * n + c);
  return s;
}

inline LinMap assemble_action(const std::vector<LinMap>& s) {
  const std::size_t n = s.size(), x = s[0].cols();
  LinMap act(s[0].rows(), x * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < x; ++i)
      for (std::size_t r = 0; r < act.rows(); ++r) act.at(r, i * n + c) = s[c].at(r, i);
  return act;
}

// Module axioms for a right action: x·1 = x and (x·a)·b = x·(ab).
inline AxiomReport validate_action(const Bialgebra& b, std::size_t m, const LinMap& act) {
  AxiomReport rep;
  const std::size_t n = b.dim();
  if (act.rows() != m || act.cols() != m * n)
    throw std::invalid_argument("validate_action: dims");
  if (!detail::check_identity(rep, act * kron(LinMap::identity(m), b.unit()),
                              LinMap::identity(m), "action-unit"))
    return rep;
  detail::check_identity(rep, act * tensor_id(act, n), act * id_tensor(m, b.mu()),
                         "action-associativity");
  return rep;
}

// Diagonal action of B on M⊗B: (m⊗b)·x = m·x₍₁₎ ⊗ b·x₍₂₎.
inline LinMap diagonal_action(const Bialgebra& b, const LinMap& act_m) {
  const std::size_t n = b.dim(), m = act_m.rows();
  std::vector<LinMap> s = action_slices(act_m, n);
  std::vector<LinMap> diag;
  for (std::size_t c = 0; c < n; ++c) {
    LinMap d(m * n, m * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& a = b.delta().at(p * n + q, c);
        if (!a.is_zero()) d = d + a * kron(s[p], right_mult(b, q));
      }
    diag.push_back(std::move(d));
  }
  return assemble_action(diag);
}

// A Hopf partial comodule: a geometric partial comodule in Vect whose X and
// bullet carry right B-actions making ρ and π B-linear (π for the diagonal
// action on X⊗B).
struct HopfPartialComodule {
  Bialgebra B;
  PartialComoduleDatum datum;
  LinMap act_m;       // X⊗B → X
  LinMap act_bullet;  // bullet⊗B → bullet
};

struct HopfCheck {
  bool ok = false;
  std::string failing;
  // ker(π) closure flags: under the componentwise B⊗B-action m·x ⊗ b·y, and
  // under multiplication on the right tensorand alone. Equivalent for Hopf B.
  bool ker_bb_submodule = false;
  bool ker_right_leg_submodule = false;
};

inline HopfCheck check_hopf_pc(const HopfPartialComodule& h) {
  const std::size_t n = h.B.dim(), m = h.datum.x_dim, k = h.datum.bullet_dim;
  HopfCheck out;
  AxiomReport rep = validate_action(h.B, m, h.act_m);
  if (!rep.ok) {
    out.failing = "act_m " + rep.identity;
    return out;
  }
  rep = validate_action(h.B, k, h.act_bullet);
  if (!rep.ok) {
    out.failing = "act_bullet " + rep.identity;
    return out;
  }
  if (!(h.datum.rho * h.act_m == h.act_bullet * tensor_id(h.datum.rho, n))) {
    out.failing = "rho-B-linear";
    return out;
  }
  LinMap diag = diagonal_action(h.B, h.act_m);
  if (!(h.datum.pi * diag == h.act_bullet * tensor_id(h.datum.pi, n))) {
    out.failing = "pi-B-linear";
    return out;
  }
  GpcCheck gc = check_gpc(h.datum);
  if (!gc.ok) {
    out.failing = "gpc: " + gc.failure.reason;
    return out;
  }

  Subspace ker_pi = kernel(h.datum.pi);
  std::vector<LinMap> s = action_slices(h.act_m, n);
  out.ker_bb_submodule = true;
  for (std::size_t p = 0; p < n && out.ker_bb_submodule; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!ker_pi.contains(image(kron(s[p], right_mult(h.B, q)) * ker_pi.inclusion()))) {
        out.ker_bb_submodule = false;
        break;
      }
  out.ker_right_leg_submodule = true;
  for (std::size_t q = 0; q < n; ++q)
    if (!ker_pi.contains(
            image(kron(LinMap::identity(m), right_mult(h.B, q)) * ker_pi.inclusion()))) {
      out.ker_right_leg_submodule = false;
      break;
    }
  out.ok = true;
  return out;
}

// The free Hopf module V⊗B: action on the right tensorand, coaction V⊗Δ,
// global datum, diagonal bullet action.
inline HopfPartialComodule free_hopf_module(const Bialgebra& b, std::size_t v_dim) {
  const std::size_t n = b.dim(), m = v_dim * n;
  LinMap act = kron(LinMap::identity(v_dim), b.mu());
  GlobalComodule y{b.coalgebra(), m, id_tensor(v_dim, b.delta())};
  return HopfPartialComodule{b, global_datum(y), act, diagonal_action(b, act)};
}

// Any right B-module with the trivial partial structure (bullet = M, π = M⊗ε).
inline HopfPartialComodule trivial_hopf_structure(const Bialgebra& b, std::size_t m,
                                                  const LinMap& act) {
  return HopfPartialComodule{b, trivial_datum(b.coalgebra(), m), act, act};
}

struct ClosureFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct HopfGlobalization {
  Globalization glob;
  LinMap act_y;  // Y⊗B → Y, corestricted diagonal action
  bool eps_b_linear = false;
  bool compat_ok = false;  // δ(y·b) = y₍₀₎·b₍₁₎ ⊗ y₍₁₎b₍₂₎
};

// Globalize in Mod_B: Y from the Vect globalization, checked closed under the
// diagonal action (failure is an internal-consistency signal), with ε_X
// B-linear and δ_Y satisfying the Hopf-module compatibility.
inline HopfGlobalization globalize_hopf(const HopfPartialComodule& h) {
  const std::size_t n = h.B.dim();
  Globalization g = globalize(h.datum);
  LinMap diag = diagonal_action(h.B, h.act_m);
  std::vector<LinMap> dslices = action_slices(diag, n);
  std::vector<LinMap> yslices;
  for (std::size_t c = 0; c < n; ++c) {
    auto lifted = solve_lift(g.kappa, dslices[c] * g.kappa);
    if (!lifted) throw ClosureFailure("globalize_hopf: Y not closed under the diagonal action");
    yslices.push_back(std::move(*lifted));
  }
  LinMap act_y = assemble_action(yslices);

  HopfGlobalization out{std::move(g), act_y, false, false};
  out.eps_b_linear =
      out.glob.eps_x * act_y == h.act_m * tensor_id(out.glob.eps_x, n);
  std::vector<LinMap> ys = action_slices(act_y, n);
  out.compat_ok = true;
  for (std::size_t c = 0; c < n && out.compat_ok; ++c) {
    LinMap rhs(out.glob.Y.y_dim * n, out.glob.Y.y_dim);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& a = h.B.delta().at(p * n + q, c);
        if (!a.is_zero()) rhs = rhs + a * (kron(ys[p], right_mult(h.B, q)) * out.glob.Y.delta);
      }
    out.compat_ok = out.glob.Y.delta * ys[c] == rhs;
  }
  return out;
}

// Fundamental pair: a space V with an H-submodule N ⊆ V⊗H (action on the
// right tensorand) such that (V⊗Δ(H)) ∩ (N⊗H) = 0.
struct FundamentalPair {
  std::size_t v_dim = 0;
  Subspace n = Subspace(0);
};

struct PairCheck {
  bool ok = false;
  std::string failing;
  std::vector<Rational> witness;
};

inline PairCheck check_pair(const FundamentalPair& p, const HopfAlgebra& h) {
  const std::size_t n = h.dim(), v = p.v_dim;
  if (p.n.ambient_dim() != v * n) throw std::invalid_argument("check_pair: ambient dim");
  for (std::size_t c = 0; c < n; ++c) {
    LinMap r = kron(LinMap::identity(v), right_mult(h.bi, c));
    Subspace moved = image(r * p.n.inclusion());
    for (std::size_t i = 0; i < moved.dim(); ++i)
      if (!p.n.contains(moved.basis().row(i)))
        return {false, "N is not an H-submodule", moved.basis().row(i)};
  }
  Subspace diag_part = image(id_tensor(v, h.delta()));
  Subspace n_tensor_h = image(tensor_id(p.n.inclusion(), n));
  Subspace meet = intersection(diag_part, n_tensor_h);
  if (meet.dim() != 0)
    return {false, "(V⊗Δ(H)) ∩ (N⊗H) != 0", *witness_vector(meet)};
  return {true, {}, {}};
}

// For a group algebra kG the pair condition is equivalent to N containing no
// homogeneous element: N ∩ (V⊗g) = 0 for every basis grouplike g.
inline bool no_homogeneous_elements(const FundamentalPair& p, std::size_t n) {
  const std::size_t v = p.v_dim;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> gens;
    for (std::size_t i = 0; i < v; ++i) {
      std::vector<Rational> e(v * n);
      e[i * n + c] = 1;
      gens.push_back(std::move(e));
    }
    if (intersection(p.n, Subspace::span_vectors(v * n, gens)).dim() != 0) return false;
  }
  return true;
}

// (V, N) ↦ the quotient (V⊗H)/N with the induced datum and quotient actions.
// The pair condition is exactly properness of the quotient cover: the kernel
// of (p⊗H)∘(V⊗Δ) is δ⁻¹((V⊗Δ(H)) ∩ (N⊗H)).
inline HopfPartialComodule from_pair(const FundamentalPair& p, const HopfAlgebra& h) {
  const std::size_t n = h.dim(), v = p.v_dim;
  PairCheck pc = check_pair(p, h);
  if (!pc.ok) throw ConditionViolated("from_pair: " + pc.failing, pc.witness);
  GlobalComodule free{h.coalgebra(), v * n, id_tensor(v, h.delta())};
  QuotientPresentation pres = quotient_by(p.n);
  PartialComoduleDatum datum = induce_from_cover(free, pres.proj);

  std::vector<LinMap> acts;
  for (std::size_t c = 0; c < n; ++c) {
    auto a = solve_factor(pres.proj, pres.proj * kron(LinMap::identity(v), right_mult(h.bi, c)));
    if (!a) throw ClosureFailure("from_pair: quotient action does not descend");
    acts.push_back(std::move(*a));
  }
  LinMap act_m = assemble_action(acts);

  LinMap diag = diagonal_action(h.bi, act_m);
  std::vector<LinMap> ds = action_slices(diag, n);
  std::vector<LinMap> bacts;
  for (std::size_t c = 0; c < n; ++c) {
    auto a = solve_factor(datum.pi, datum.pi * ds[c]);
    if (!a) throw ClosureFailure("from_pair: bullet action does not descend");
    bacts.push_back(std::move(*a));
  }
  return HopfPartialComodule{h.bi, std::move(datum), std::move(act_m), assemble_action(bacts)};
}

struct CoinvariantMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// Presentation extracted from the globalization: coinvariants V ⊆ Y, the
// classical iso Φ: V⊗H → Y, v⊗h ↦ v·h, and N = ker(ε_X∘Φ).
struct PairPresentation {
  FundamentalPair pair;
  Subspace coinvariants;  // inside Y
  LinMap phi;             // V⊗H → Y
  HopfGlobalization glob;
};

inline PairPresentation to_pair_presentation(const HopfPartialComodule& m,
                                             const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  HopfGlobalization g = globalize_hopf(m);
  const std::size_t e = g.glob.Y.y_dim;
  Subspace coinv = kernel(g.glob.Y.delta - kron(LinMap::identity(e), h.unit()));
  LinMap phi = g.act_y * tensor_id(coinv.inclusion(), n);
  auto phi_inv = inverse(phi);
  if (!phi_inv)
    throw CoinvariantMismatch("to_pair: V⊗H → Y is not an isomorphism");
  FundamentalPair pair{coinv.dim(), kernel(g.glob.eps_x * phi)};
  return PairPresentation{std::move(pair), std::move(coinv), std::move(phi), std::move(g)};
}

inline FundamentalPair to_pair(const HopfPartialComodule& m, const HopfAlgebra& h) {
  return to_pair_presentation(m, h).pair;
}

// from_pair(to_pair(M)) ≅ M: the iso is the factorization of ε_X∘Φ through
// the quotient projection, checked B-linear and a morphism of data.
inline IsoCertificate pair_roundtrip(const HopfPartialComodule& m, const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  PairPresentation pres = to_pair_presentation(m, h);
  HopfPartialComodule back = from_pair(pres.pair, h);
  QuotientPresentation q = quotient_by(pres.pair.n);
  auto f = solve_factor(q.proj, pres.glob.glob.eps_x * pres.phi);
  if (!f) return {false, {}, {}, "quotient factor does not exist"};
  auto f_inv = inverse(*f);
  if (!f_inv) return {false, *f, {}, "comparison map not invertible"};
  if (!check_morphism(back.datum, m.datum, *f).ok)
    return {false, *f, *f_inv, "not a morphism of data"};
  if (!(*f * back.act_m == m.act_m * tensor_id(*f, n)))
    return {false, *f, *f_inv, "not B-linear"};
  return {true, *f, *f_inv, {}};
}

// to_pair(from_pair(V, N)) ≅ (V, N): the coinvariants of the re-globalization
// map back to V⊗1 through the cover roundtrip iso, and carry N' onto N.
inline IsoCertificate pair_roundtrip_from(const FundamentalPair& p, const HopfAlgebra& h) {
  const std::size_t n = h.dim(), v = p.v_dim;
  HopfPartialComodule m = from_pair(p, h);
  PairPresentation pres = to_pair_presentation(m, h);
  GlobalComodule free{h.coalgebra(), v * n, id_tensor(v, h.delta())};
  Cover cover = make_cover(free, quotient_by(p.n).proj);
  IsoCertificate rt = roundtrip_gl_ind(cover);
  if (!rt.ok) return {false, {}, {}, "cover roundtrip failed: " + rt.failing};
  LinMap u = id_tensor(v, h.eps()) * rt.backward * pres.coinvariants.inclusion();
  auto u_inv = inverse(u);
  if (!u_inv) return {false, u, {}, "coinvariant comparison not invertible"};
  if (!(image(tensor_id(u, n) * pres.pair.n.inclusion()) == p.n))
    return {false, u, *u_inv, "(u⊗H)(N') != N"};
  return {true, u, *u_inv, {}};
}

// Seeded generator of fundamental pairs over a group algebra: the submodule
// closure of a random vector, rejected while it contains homogeneous
// elements (fallback N = 0).
inline FundamentalPair random_pair(const HopfAlgebra& group_hopf, std::size_t v_dim,
                                   Prng& rng, std::size_t max_tries = 16) {
  const std::size_t n = group_hopf.dim();
  for (std::size_t t = 0; t < max_tries; ++t) {
    LinMap w = random_linmap(rng, v_dim * n, 1);
    Subspace sub = image(w);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t c = 0; c < n; ++c) {
        Subspace moved =
            image(kron(LinMap::identity(v_dim), right_mult(group_hopf.bi, c)) * sub.inclusion());
        if (!sub.contains(moved)) {
          sub = sum(sub, moved);
          grew = true;
        }
      }
    }
    FundamentalPair p{v_dim, sub};
    if (sub.dim() > 0 && sub.dim() < v_dim * n && check_pair(p, group_hopf).ok) return p;
  }
  return FundamentalPair{v_dim, Subspace::zero(v_dim * n)};
}

// Enumerative check of the trivial-structure corollary for kC₂: every
// one-dimensional right ideal N < k⊗H yielding a valid pair produces a
// structure isomorphic to the trivial one on k with the induced character.
struct ScanCandidate {
  Subspace line = Subspace(0);
  bool pair_ok = false;
  LinMap character;  // 1×n action row of the quotient module
  bool matches_phi = false;
  bool trivial_iso = false;
};

struct TrivialScanReport {
  std::vector<ScanCandidate> candidates;
  bool all_trivial = false;
};

inline TrivialScanReport trivial_structure_scan(const HopfAlgebra& h, const LinMap& phi) {
  if (h.dim() != 2) throw std::invalid_argument("trivial_structure_scan: kC2 fixture scope");
  const std::size_t n = 2;
  TrivialScanReport rep;
  LinMap rg = right_mult(h.bi, 1);
  for (int sign : {1, -1}) {
    ScanCandidate cand;
    cand.line = kernel(rg - Rational(sign) * LinMap::identity(n));
    if (cand.line.dim() != 1) continue;
    FundamentalPair p{1, cand.line};
    cand.pair_ok = check_pair(p, h).ok;
    if (cand.pair_ok) {
      HopfPartialComodule m = from_pair(p, h);
      cand.character = m.act_m;  // 1×n
      cand.matches_phi = cand.character == phi;
      HopfPartialComodule triv = trivial_hopf_structure(h.bi, 1, m.act_m);
      auto sigma = solve_factor(m.datum.pi, triv.datum.pi);
      cand.trivial_iso =
          sigma.has_value() && inverse(*sigma).has_value() &&
          *sigma * m.datum.rho == triv.datum.rho &&
          *sigma * m.act_bullet == triv.act_bullet * tensor_id(*sigma, n);
    }
    rep.candidates.push_back(std::move(cand));
  }
  rep.all_trivial = !rep.candidates.empty();
  for (const ScanCandidate& c : rep.candidates)
    if (c.pair_ok && !c.trivial_iso) rep.all_trivial = false;
  return rep;
}

// Contrast over the non-Hopf monoid bialgebra {1, x, x²}: the ideal
// span{x, x²} is a Hopf module (grouplike basis), its counit restriction
// covers k_φ with φ(x) = 0, and the induced structure has a 2-dimensional
// bullet — a non-trivial Hopf partial comodule structure on k.
inline HopfPartialComodule monoid_contrast() {
  Bialgebra b = truncated_powers_bialgebra();
  const std::size_t n = 3;
  LinMap delta_y(2 * n, 2);
  delta_y.at(0 * n + 1, 0) = 1;  // x ↦ x⊗x
  delta_y.at(1 * n + 2, 1) = 1;  // x² ↦ x²⊗x²
  GlobalComodule y{b.coalgebra(), 2, delta_y};
  LinMap p(1, 2);
  p.at(0, 0) = p.at(0, 1) = 1;
  PartialComoduleDatum datum = induce_from_cover(y, p);

  LinMap act_m(1, n);  // character x ↦ 0
  act_m.at(0, 0) = 1;
  LinMap diag = diagonal_action(b, act_m);
  std::vector<LinMap> ds = action_slices(diag, n);
  std::vector<LinMap> bacts;
  for (std::size_t c = 0; c < n; ++c) {
    auto a = solve_factor(datum.pi, datum.pi * ds[c]);
    if (!a) throw ClosureFailure("monoid_contrast: bullet action does not descend");
    bacts.push_back(std::move(*a));
  }
  return HopfPartialComodule{std::move(b), std::move(datum), std::move(act_m),
                             assemble_action(bacts)};
}

}  // namespace parcom
