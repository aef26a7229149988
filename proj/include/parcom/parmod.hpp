#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcom/globalization.hpp"

namespace parcom {

// Left partial module (M, λ): λ: H⊗M → M, h⊗m ↦ h·m, subject to
//   PM1  1·m = m
//   PM2  h·(k₁·(S(k₂)·m)) = (hk₁)·(S(k₂)·m)
//   PM3  k₁·(S(k₂)·(h·m)) = k₁·((S(k₂)h)·m)
struct PartialModule {
  HopfAlgebra H;
  std::size_t m_dim = 0;
  LinMap lambda;  // n·m → m
};

// Action of the c-th basis element as an operator M → M.
inline LinMap action_of(const PartialModule& pm, std::size_t c) {
  LinMap a(pm.m_dim, pm.m_dim);
  for (std::size_t j = 0; j < pm.m_dim; ++j)
    for (std::size_t i = 0; i < pm.m_dim; ++i) a.at(i, j) = pm.lambda.at(i, c * pm.m_dim + j);
  return a;
}

// Action of an arbitrary element given by coefficients in the basis of H.
inline LinMap action_of(const PartialModule& pm, const std::vector<Rational>& h) {
  LinMap a(pm.m_dim, pm.m_dim);
  for (std::size_t c = 0; c < pm.H.dim(); ++c)
    if (!h[c].is_zero()) a = a + h[c] * action_of(pm, c);
  return a;
}

// Left/right multiplication operators on H.
inline LinMap left_mult(const Bialgebra& b, std::size_t c) {
  const std::size_t n = b.dim();
  LinMap l(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) l.at(r, p) = b.mu().at(r, c * n + p);
  return l;
}

inline LinMap right_mult(const Bialgebra& b, std::size_t c) {
  const std::size_t n = b.dim();
  LinMap r(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) r.at(q, p) = b.mu().at(q, p * n + c);
  return r;
}

struct PmCheck {
  bool ok = true;
  std::string axiom;
  std::size_t h_index = 0, k_index = 0;
};

inline PmCheck check_partial_module(const PartialModule& pm) {
  const std::size_t n = pm.H.dim(), m = pm.m_dim;
  if (pm.lambda.rows() != m || pm.lambda.cols() != n * m)
    throw std::invalid_argument("check_partial_module: lambda dims");

  std::vector<LinMap> act;
  act.reserve(n);
  for (std::size_t c = 0; c < n; ++c) act.push_back(action_of(pm, c));

  if (!(action_of(pm, pm.H.unit().col(0)) == LinMap::identity(m))) return {false, "PM1", 0, 0};

  // S(h_q) acted out as an operator, for each basis index q.
  std::vector<LinMap> act_s;
  act_s.reserve(n);
  for (std::size_t q = 0; q < n; ++q) act_s.push_back(action_of(pm, pm.H.antipode.col(q)));

  const LinMap& delta = pm.H.delta();
  const LinMap& mu = pm.H.mu();
  for (std::size_t b = 0; b < n; ++b) {
    // Sweedler pieces of Δ(h_b): pairs (p,q) with nonzero coefficient.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> pieces;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& c = delta.at(p * n + q, b);
        if (!c.is_zero()) pieces.push_back({{p, q}, c});
      }
    LinMap inner(m, m);  // k₁·(S(k₂)·−) for k = h_b
    for (auto& [pq, c] : pieces) inner = inner + c * (act[pq.first] * act_s[pq.second]);

    for (std::size_t a = 0; a < n; ++a) {
      LinMap lhs2 = act[a] * inner;
      LinMap rhs2(m, m), lhs3(m, m), rhs3 = inner * act[a];
      for (auto& [pq, c] : pieces) {
        rhs2 = rhs2 + c * (action_of(pm, mu.col(a * n + pq.first)) * act_s[pq.second]);
        // S(h_q)·h_a expanded through the antipode column.
        std::vector<Rational> sq_ha(n);
        for (std::size_t r = 0; r < n; ++r) {
          const Rational& s = pm.H.antipode.at(r, pq.second);
          if (s.is_zero()) continue;
          std::vector<Rational> prod = mu.col(r * n + a);
          for (std::size_t t = 0; t < n; ++t) sq_ha[t] += s * prod[t];
        }
        lhs3 = lhs3 + c * (act[pq.first] * action_of(pm, sq_ha));
      }
      if (!(lhs2 == rhs2)) return {false, "PM2", a, b};
      if (!(lhs3 == rhs3)) return {false, "PM3", a, b};
    }
  }
  return {true, {}, 0, 0};
}

// H•M = {Σ hᵢ⊗mᵢ : Σ k·(hᵢ·mᵢ) = Σ (khᵢ)·mᵢ for all k}, inside H⊗M.
inline Subspace bullet_subspace(const PartialModule& pm) {
  const std::size_t n = pm.H.dim(), m = pm.m_dim;
  LinMap sys(0, n * m);
  for (std::size_t c = 0; c < n; ++c) {
    LinMap cond = action_of(pm, c) * pm.lambda - pm.lambda * tensor_id(left_mult(pm.H.bi, c), m);
    sys = vstack(sys, cond);
  }
  return kernel(sys);
}

// The coalgebra seen by the transposed (standard-direction) picture: left
// H-modules are right comodules over (H, (μ∘τ)ᵀ, uᵀ).
inline Coalgebra opposite_coalgebra(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  return Coalgebra{n, flip(n, n) * h.mu().transpose(), h.unit().transpose()};
}

// Standard-direction datum of the opposite-category partial comodule carried
// by a partial module: bullet = H•M, π = ιᵀ after the M⊗H ≅ H⊗M flip,
// ρ = (λ∘ι)ᵀ.
inline PartialComoduleDatum to_opposite_datum(const PartialModule& pm) {
  const std::size_t n = pm.H.dim(), m = pm.m_dim;
  Subspace bullet = bullet_subspace(pm);
  LinMap incl = bullet.inclusion();
  return PartialComoduleDatum{opposite_coalgebra(pm.H), m, bullet.dim(),
                              incl.transpose() * flip(m, n),
                              (pm.lambda * incl).transpose(), Direction::Opposite};
}

// Global module (N, act): act∘(u⊗N) = id and act∘(μ⊗N) = act∘(H⊗act).
struct GlobalModule {
  HopfAlgebra H;
  std::size_t n_dim = 0;
  LinMap act;  // n·N → N
};

inline AxiomReport validate(const GlobalModule& g) {
  const std::size_t n = g.H.dim();
  AxiomReport rep;
  if (!detail::check_identity(rep, g.act * tensor_id(g.H.unit(), g.n_dim),
                              LinMap::identity(g.n_dim), "module-unit"))
    return rep;
  detail::check_identity(rep, g.act * tensor_id(g.H.mu(), g.n_dim),
                         g.act * id_tensor(n, g.act), "module-associativity");
  return rep;
}

struct Dilation {
  GlobalModule N;
  LinMap T;      // N → N, T² = T
  LinMap theta;  // M → N, iso onto im(T)
  LinMap varpi;  // N → M, evaluation at 1_H
};

struct ClosureOverflow : std::logic_error {
  using std::logic_error::logic_error;
};

// Standard dilation inside Hom(H,M) ≅ k^{n·m} (coordinates f ↦ (f(h_p))_p,
// flattened H-major): (h▷f)(k) = f(kh), j(m)(h) = h·m, ϖ = evaluation at 1_H.
inline Dilation standard_dilation(const PartialModule& pm) {
  const std::size_t n = pm.H.dim(), m = pm.m_dim;

  std::vector<LinMap> hom_act;
  hom_act.reserve(n);
  for (std::size_t c = 0; c < n; ++c)
    hom_act.push_back(kron(right_mult(pm.H.bi, c).transpose(), LinMap::identity(m)));

  LinMap j(n * m, m);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t q = 0; q < m; ++q) j.at(p * m + i, q) = pm.lambda.at(i, p * m + q);

  Subspace closure = image(j);
  for (;;) {
    Subspace next = closure;
    for (std::size_t c = 0; c < n; ++c)
      next = sum(next, image(hom_act[c] * closure.inclusion()));
    if (next.dim() == closure.dim()) break;
    if (next.dim() > n * m) throw ClosureOverflow("standard_dilation: closure exceeds ambient");
    closure = next;
  }

  LinMap incl = closure.inclusion();
  const std::size_t dn = closure.dim();
  LinMap act(dn, n * dn);
  for (std::size_t c = 0; c < n; ++c) {
    auto restricted = solve_lift(incl, hom_act[c] * incl);
    if (!restricted) throw ClosureOverflow("standard_dilation: closure not action-stable");
    for (std::size_t j2 = 0; j2 < dn; ++j2)
      for (std::size_t i = 0; i < dn; ++i) act.at(i, c * dn + j2) = restricted->at(i, j2);
  }

  LinMap eval1(m, n * m);
  for (std::size_t p = 0; p < n; ++p) {
    const Rational& up = pm.H.unit().at(p, 0);
    if (up.is_zero()) continue;
    for (std::size_t i = 0; i < m; ++i) eval1.at(i, p * m + i) += up;
  }
  LinMap varpi = eval1 * incl;
  auto theta = solve_lift(incl, j);
  if (!theta) throw ClosureOverflow("standard_dilation: j does not land in closure");

  return Dilation{GlobalModule{pm.H, dn, std::move(act)}, *theta * varpi, *theta,
                  std::move(varpi)};
}

inline LinMap module_action_of(const GlobalModule& g, std::size_t c) {
  LinMap a(g.n_dim, g.n_dim);
  for (std::size_t j = 0; j < g.n_dim; ++j)
    for (std::size_t i = 0; i < g.n_dim; ++i) a.at(i, j) = g.act.at(i, c * g.n_dim + j);
  return a;
}

inline LinMap module_action_of(const GlobalModule& g, const std::vector<Rational>& h) {
  LinMap a(g.n_dim, g.n_dim);
  for (std::size_t c = 0; c < g.H.dim(); ++c)
    if (!h[c].is_zero()) a = a + h[c] * module_action_of(g, c);
  return a;
}

struct DilationCheck {
  bool ok = false;
  bool proper = false;
  bool minimal = false;
  std::string failing;
};

// Largest action-invariant subspace contained in s: shrink until stable.
inline Subspace largest_invariant_inside(const GlobalModule& g, Subspace s) {
  for (;;) {
    Subspace next = s;
    for (std::size_t c = 0; c < g.H.dim(); ++c)
      next = intersection(next, preimage(module_action_of(g, c), s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

inline Subspace action_closure(const GlobalModule& g, Subspace s) {
  for (;;) {
    Subspace next = s;
    for (std::size_t c = 0; c < g.H.dim(); ++c)
      next = sum(next, image(module_action_of(g, c) * s.inclusion()));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

inline DilationCheck check_dilation(const PartialModule& pm, const Dilation& d) {
  const std::size_t n = pm.H.dim();
  DilationCheck out;
  if (!validate(d.N).ok) { out.failing = "module axioms"; return out; }
  if (!(d.T * d.T == d.T)) { out.failing = "T^2 = T"; return out; }

  std::vector<LinMap> act, act_s;
  for (std::size_t c = 0; c < n; ++c) act.push_back(module_action_of(d.N, c));
  for (std::size_t q = 0; q < n; ++q)
    act_s.push_back(module_action_of(d.N, pm.H.antipode.col(q)));

  // T(h₁▷T(S(h₂)▷y)) = h₁▷T(S(h₂)▷T(y)) for every basis element h.
  for (std::size_t b = 0; b < n; ++b) {
    LinMap lhs(d.N.n_dim, d.N.n_dim), rhs(d.N.n_dim, d.N.n_dim);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& c = pm.H.delta().at(p * n + q, b);
        if (c.is_zero()) continue;
        lhs = lhs + c * (d.T * act[p] * d.T * act_s[q]);
        rhs = rhs + c * (act[p] * d.T * act_s[q] * d.T);
      }
    if (!(lhs == rhs)) { out.failing = "dilation identity"; return out; }
  }

  if (!is_injective(d.theta) || !(image(d.theta) == image(d.T))) {
    out.failing = "theta is not an iso onto im(T)";
    return out;
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!(d.theta * action_of(pm, c) == d.T * act[c] * d.theta)) {
      out.failing = "theta(h·m) = T(h▷theta(m))";
      return out;
    }
  if (!(d.theta * d.varpi == d.T)) { out.failing = "T = theta∘varpi"; return out; }

  out.proper = action_closure(d.N, image(d.theta)).dim() == d.N.n_dim;
  out.minimal = largest_invariant_inside(d.N, kernel(d.T)).dim() == 0;
  out.ok = out.proper && out.minimal;
  if (!out.ok) out.failing = out.proper ? "not minimal" : "not proper";
  return out;
}

// The standard dilation realizes the opposite-picture globalization: both are
// presented as quotients of H⊗M and the canonical comparison map is an iso.
inline IsoCertificate crosscheck_dilation_globalization(const PartialModule& pm) {
  const std::size_t n = pm.H.dim(), m = pm.m_dim;
  PartialComoduleDatum d = to_opposite_datum(pm);
  Globalization g = globalize(d);
  Dilation dil = standard_dilation(pm);
  if (dil.N.n_dim != g.certificate.equalizer_dim)
    return {false, {}, {}, "dimension mismatch between dilation and globalization"};

  // Vect-side realizations: κ_v: H⊗M → Y and h⊗m ↦ h▷θ(m): H⊗M → N.
  LinMap kappa_v = g.kappa.transpose() * flip(n, m);
  LinMap to_n = dil.N.act * id_tensor(n, dil.theta);
  auto phi = solve_factor(to_n, kappa_v);
  auto phi_inv = solve_factor(kappa_v, to_n);
  if (!phi || !phi_inv) return {false, {}, {}, "comparison map does not factor"};
  if (!(*phi * *phi_inv == LinMap::identity(g.certificate.equalizer_dim)) ||
      !(*phi_inv * *phi == LinMap::identity(dil.N.n_dim)))
    return {false, *phi, *phi_inv, "comparison maps are not mutually inverse"};

  // Action compatibility and the cover triangle Φ∘θ = ε_Xᵀ.
  LinMap act_y = g.Y.delta.transpose() * flip(n, g.Y.y_dim);
  for (std::size_t c = 0; c < n; ++c) {
    LinMap ay(g.Y.y_dim, g.Y.y_dim);
    for (std::size_t j = 0; j < g.Y.y_dim; ++j)
      for (std::size_t i = 0; i < g.Y.y_dim; ++i) ay.at(i, j) = act_y.at(i, c * g.Y.y_dim + j);
    if (!(*phi * module_action_of(dil.N, c) == ay * *phi))
      return {false, *phi, *phi_inv, "comparison map is not H-linear"};
  }
  if (!(*phi * dil.theta == g.eps_x.transpose()))
    return {false, *phi, *phi_inv, "comparison map does not respect the covers"};
  return {true, *phi, *phi_inv, {}};
}

// ---- Partial group representations -----------------------------------------

struct PartialGroupRep {
  FiniteGroup G;
  std::size_t v_dim = 0;
  std::vector<LinMap> pi;  // one v×v matrix per group element
};

struct PrCheck {
  bool ok = true;
  std::string axiom;
  std::size_t g_index = 0, h_index = 0;
};

inline PrCheck check_partial_rep(const PartialGroupRep& r) {
  const std::size_t o = r.G.order;
  if (r.pi.size() != o) throw std::invalid_argument("check_partial_rep: pi size");
  if (!(r.pi[r.G.identity] == LinMap::identity(r.v_dim))) return {false, "PR1", 0, 0};
  for (std::size_t g = 0; g < o; ++g)
    for (std::size_t h = 0; h < o; ++h) {
      const std::size_t gi = r.G.inv(g), hi = r.G.inv(h);
      if (!(r.pi[gi] * r.pi[r.G.mul(g, h)] == r.pi[gi] * r.pi[g] * r.pi[h]))
        return {false, "PR2", g, h};
      if (!(r.pi[r.G.mul(g, h)] * r.pi[hi] == r.pi[g] * r.pi[h] * r.pi[hi]))
        return {false, "PR3", g, h};
    }
  return {true, {}, 0, 0};
}

inline PartialModule to_partial_module(const PartialGroupRep& r) {
  HopfAlgebra h = group_algebra(r.G);
  LinMap lambda(r.v_dim, r.G.order * r.v_dim);
  for (std::size_t g = 0; g < r.G.order; ++g)
    for (std::size_t j = 0; j < r.v_dim; ++j)
      for (std::size_t i = 0; i < r.v_dim; ++i)
        lambda.at(i, g * r.v_dim + j) = r.pi[g].at(i, j);
  return PartialModule{std::move(h), r.v_dim, std::move(lambda)};
}

// Left multiplication by a group element on kG⊗V.
inline LinMap group_translate(const FiniteGroup& gr, std::size_t h, std::size_t v_dim) {
  LinMap l(gr.order, gr.order);
  for (std::size_t g = 0; g < gr.order; ++g) l.at(gr.mul(h, g), g) = 1;
  return tensor_id(l, v_dim);
}

// S = kG·{Σ g⊗v_g : Σ π(k)π(g)(v_g) = Σ π(kg)(v_g) ∀k} inside kG⊗V.
inline Subspace subspace_S(const PartialGroupRep& r) {
  const std::size_t o = r.G.order, v = r.v_dim;
  LinMap sys(0, o * v);
  for (std::size_t k = 0; k < o; ++k) {
    LinMap block(v, o * v);
    for (std::size_t g = 0; g < o; ++g) {
      LinMap diff = r.pi[k] * r.pi[g] - r.pi[r.G.mul(k, g)];
      for (std::size_t j = 0; j < v; ++j)
        for (std::size_t i = 0; i < v; ++i) block.at(i, g * v + j) = diff.at(i, j);
    }
    sys = vstack(sys, block);
  }
  Subspace constrained = kernel(sys);
  // Generators: w − 1⊗(Σ π(g)(v_g)) for w = Σ g⊗v_g in the constrained family.
  std::vector<std::vector<Rational>> family;
  for (std::size_t j = 0; j < constrained.dim(); ++j) {
    std::vector<Rational> w = constrained.inclusion().col(j);
    std::vector<Rational> out(o * v);
    for (std::size_t g = 0; g < o; ++g)
      for (std::size_t t = 0; t < v; ++t) {
        const Rational& c = w[g * v + t];
        if (c.is_zero()) continue;
        out[g * v + t] += c;  // g⊗v_g
        for (std::size_t i = 0; i < v; ++i)
          out[r.G.identity * v + i] -= c * r.pi[g].at(i, t);  // −1⊗π(g)(v_g)
      }
    family.push_back(std::move(out));
  }
  Subspace fam = Subspace::span_vectors(o * v, family);
  Subspace s = fam;
  for (std::size_t g = 0; g < o; ++g)
    s = sum(s, image(group_translate(r.G, g, v) * fam.inclusion()));
  return s;
}

// Z = kG·{g⊗v − 1⊗π(g)(v) : v ∈ V_{g⁻¹}} with V_g = im(π(g)π(g⁻¹)).
inline Subspace subspace_Z(const PartialGroupRep& r) {
  const std::size_t o = r.G.order, v = r.v_dim;
  std::vector<std::vector<Rational>> gens;
  for (std::size_t g = 0; g < o; ++g) {
    Subspace vg_inv = image(r.pi[r.G.inv(g)] * r.pi[g]);
    LinMap incl = vg_inv.inclusion();
    for (std::size_t j = 0; j < vg_inv.dim(); ++j) {
      std::vector<Rational> w = incl.col(j);
      for (std::size_t h = 0; h < o; ++h) {
        std::vector<Rational> out(o * v);
        const std::size_t hg = r.G.mul(h, g);
        for (std::size_t t = 0; t < v; ++t) {
          if (w[t].is_zero()) continue;
          out[hg * v + t] += w[t];  // hg⊗v
          for (std::size_t i = 0; i < v; ++i)
            out[h * v + i] -= w[t] * r.pi[g].at(i, t);  // −h⊗π(g)(v)
        }
        gens.push_back(std::move(out));
      }
    }
  }
  return Subspace::span_vectors(o * v, gens);
}

// ---- Fixture families -------------------------------------------------------

// Restriction of the regular G-action to the subset A ⊆ G:
// π(g)(δ_a) = δ_{ga} when both a, ga ∈ A, else 0.
inline PartialGroupRep partial_permutation_rep(const FiniteGroup& gr,
                                               const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> pos(gr.order, gr.order);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = i;
  PartialGroupRep r{gr, subset.size(), {}};
  for (std::size_t g = 0; g < gr.order; ++g) {
    LinMap p(subset.size(), subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const std::size_t ga = gr.mul(g, subset[i]);
      if (pos[ga] != gr.order) p.at(pos[ga], i) = 1;
    }
    r.pi.push_back(std::move(p));
  }
  return r;
}

// Partial kC₂-module from an endomorphism with T³ = T: 1·v = v, g·v = T(v).
inline PartialModule c2_partial_module(const LinMap& t) {
  const std::size_t m = t.rows();
  if (t.cols() != m) throw std::invalid_argument("c2_partial_module: T not square");
  HopfAlgebra h = kc2();
  LinMap lambda(m, 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    lambda.at(j, j) = 1;
    for (std::size_t i = 0; i < m; ++i) lambda.at(i, m + j) = t.at(i, j);
  }
  return PartialModule{std::move(h), m, std::move(lambda)};
}

// T with prescribed eigenspace dimensions for −1, 0, +1, conjugated by a
// random change of basis; satisfies T³ = T by construction.
inline LinMap c2_family_t(std::size_t d_m1, std::size_t d_0, std::size_t d_1, Prng& rng) {
  const std::size_t m = d_m1 + d_0 + d_1;
  LinMap diag(m, m);
  for (std::size_t i = 0; i < d_m1; ++i) diag.at(i, i) = -1;
  for (std::size_t i = d_m1 + d_0; i < m; ++i) diag.at(i, i) = 1;
  LinMap p = random_invertible(rng, m);
  return p * diag * *inverse(p);
}

// Seeded generator: a few raw rejection attempts, then fall back to the
// always-valid families (conjugated partial permutation restrictions).
inline PartialModule random_partial_module(const HopfAlgebra& group_hopf, const FiniteGroup& gr,
                                           Prng& rng, std::size_t max_raw_tries = 8) {
  const std::size_t n = group_hopf.dim();
  std::uniform_int_distribution<std::size_t> mdist(1, 3);
  for (std::size_t tries = 0; tries < max_raw_tries; ++tries) {
    const std::size_t m = mdist(rng);
    LinMap lambda = random_linmap(rng, m, n * m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        lambda.at(i, gr.identity * m + j) = i == j ? 1 : 0;
    PartialModule pm{group_hopf, m, std::move(lambda)};
    if (check_partial_module(pm).ok) return pm;
  }
  std::vector<std::size_t> subset;
  for (std::size_t g = 0; g < gr.order; ++g)
    if (g == gr.identity || rng() % 2 == 0) subset.push_back(g);
  PartialModule pm = to_partial_module(partial_permutation_rep(gr, subset));
  LinMap p = random_invertible(rng, pm.m_dim);
  LinMap p_inv = *inverse(p);
  pm.lambda = p_inv * pm.lambda * id_tensor(gr.order, p);
  return pm;
}

inline PartialGroupRep random_partial_rep(const FiniteGroup& gr, Prng& rng) {
  std::vector<std::size_t> subset;
  for (std::size_t g = 0; g < gr.order; ++g)
    if (g == gr.identity || rng() % 2 == 0) subset.push_back(g);
  PartialGroupRep r = partial_permutation_rep(gr, subset);
  LinMap p = random_invertible(rng, r.v_dim);
  LinMap p_inv = *inverse(p);
  for (auto& m : r.pi) m = p_inv * m * p;
  return r;
}

}  // namespace parcom
