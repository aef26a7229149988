#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcom/gpc.hpp"

namespace parcom {

// Thrown when a computation that the globalization theorem guarantees for
// valid inputs fails anyway: an internal-consistency bug signal, not a
// data-dependent verdict.
struct CertificateFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotProper : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GlobCertificate {
  std::size_t equalizer_dim = 0;
  bool gl1_ok = false;
  bool pushout_ok = false;
  bool proper_ok = false;
  std::optional<LinMap> roundtrip_iso;
  bool all_ok() const { return gl1_ok && pushout_ok && proper_ok; }
};

struct Globalization {
  GlobalComodule Y;
  LinMap kappa;  // Y → X⊗H, injective
  LinMap eps_x;  // Y → X, surjective
  GlobCertificate certificate;
};

struct Cover {
  GlobalComodule Y;
  LinMap p;  // Y → X, surjective
  bool proper = false;
};

// Properness: (p⊗H)∘δ_Y injective (the cover is co-generated by X).
inline bool properness(const GlobalComodule& y, const LinMap& p) {
  return is_injective(tensor_id(p, y.H.dim) * y.delta);
}

inline Cover make_cover(const GlobalComodule& y, const LinMap& p) {
  if (!is_surjective(p)) throw NotEpi("make_cover: p not epi");
  AxiomReport rep = validate(y);
  if (!rep.ok) throw InvalidComodule("make_cover: " + rep.identity);
  return Cover{y, p, properness(y, p)};
}

// Globalization Y_X = ker((ρ⊗H) − (π⊗H)∘(X⊗Δ)) ⊆ X⊗H with δ_Y the
// restriction of X⊗Δ and ε_X = (X⊗ε)∘κ. The certificate carries GL1, the
// GL3 pushout square (verified by explicit isos, not dimension count), and
// properness. GL2 is certified indirectly through these plus the roundtrips.
inline Globalization globalize(const PartialComoduleDatum& d) {
  const std::size_t m = d.x_dim, n = d.H.dim;
  auto [f1, f2] = gpc2_pair(d);
  Subspace y_sub = kernel(f1 - f2);
  const std::size_t e = y_sub.dim();
  LinMap kappa = y_sub.inclusion();  // e columns inside X⊗H

  // δ_Y: first assert im((X⊗Δ)∘κ) ⊆ Y⊗H exactly, then corestrict.
  LinMap big = id_tensor(m, d.H.delta) * kappa;  // Y → X⊗H⊗H
  LinMap y_tensor_h = tensor_id(kappa, n);       // Y⊗H → X⊗H⊗H
  if (!image(y_tensor_h).contains(image(big)))
    throw CertificateFailure("globalize: X⊗Δ does not restrict to Y");
  auto delta_y = solve_lift(y_tensor_h, big);
  if (!delta_y) throw CertificateFailure("globalize: corestriction solve failed");

  GlobalComodule y{d.H, e, *delta_y};
  AxiomReport rep = validate(y);
  if (!rep.ok) throw CertificateFailure("globalize: delta_Y fails " + rep.identity);

  LinMap eps_x = id_tensor(m, d.H.eps) * kappa;
  if (!(tensor_id(eps_x, n) * *delta_y == kappa))
    throw CertificateFailure("globalize: kappa != (eps_X⊗H)∘delta_Y");

  GlobCertificate cert;
  cert.equalizer_dim = e;
  cert.gl1_ok = d.pi * kappa == d.rho * eps_x;
  cert.proper_ok = is_injective(kappa) && is_surjective(eps_x);

  // GL3: the square (ε_X, κ, ρ, π) is a pushout. Build the pushout of
  // (ε_X, κ) and exhibit mutually inverse mediating maps with X•H.
  Pushout po = pushout(eps_x, kappa);
  auto u = mediate_pushout(po, d.rho, d.pi);
  auto v = solve_factor(d.pi, po.cospan.right);
  cert.pushout_ok = u.has_value() && v.has_value();
  if (cert.pushout_ok) {
    cert.pushout_ok = (*v * d.rho == po.cospan.left) &&
                      (*u * *v == LinMap::identity(d.bullet_dim)) &&
                      (*v * *u == LinMap::identity(po.cospan.apex_dim));
  }
  return Globalization{std::move(y), std::move(kappa), std::move(eps_x), std::move(cert)};
}

struct IsoCertificate {
  bool ok = false;
  LinMap forward;   // iso between the two bullet presentations (or comodules)
  LinMap backward;  // exact two-sided inverse
  std::string failing;
};

// Ind(Gl(d)) ≅ d: re-induce from the globalization's cover and produce the
// explicit bullet-level iso pair (id_X, β).
inline IsoCertificate roundtrip_ind_gl(const PartialComoduleDatum& d) {
  Globalization g = globalize(d);
  PartialComoduleDatum d2 = induce_from_cover(g.Y, g.eps_x);
  auto beta = solve_factor(d2.pi, d.pi);
  auto beta_inv = solve_factor(d.pi, d2.pi);
  if (!beta || !beta_inv) return {false, {}, {}, "bullet factor does not exist"};
  if (!(*beta * *beta_inv == LinMap::identity(d.bullet_dim)) ||
      !(*beta_inv * *beta == LinMap::identity(d2.bullet_dim)))
    return {false, *beta, *beta_inv, "factors are not mutually inverse"};
  if (!(*beta * d2.rho == d.rho)) return {false, *beta, *beta_inv, "rho square"};
  return {true, *beta, *beta_inv, {}};
}

// Gl(Ind(c)) ≅ c for proper covers: the canonical comodule morphism
// η = corestriction of (p⊗H)∘δ to Y_X is an isomorphism of covers.
inline IsoCertificate roundtrip_gl_ind(const Cover& c) {
  if (!c.proper) throw NotProper("roundtrip_gl_ind: cover not proper");
  const std::size_t n = c.Y.H.dim;
  PartialComoduleDatum d = induce_from_cover(c.Y, c.p);
  Globalization g = globalize(d);
  auto eta = solve_lift(g.kappa, tensor_id(c.p, n) * c.Y.delta);
  if (!eta) return {false, {}, {}, "eta does not corestrict"};
  auto eta_inv = inverse(*eta);
  if (!eta_inv) return {false, *eta, {}, "eta not invertible"};
  if (!(g.Y.delta * *eta == tensor_id(*eta, n) * c.Y.delta))
    return {false, *eta, *eta_inv, "eta not a comodule morphism"};
  if (!(g.eps_x * *eta == c.p)) return {false, *eta, *eta_inv, "eta does not respect covers"};
  return {true, *eta, *eta_inv, {}};
}

struct ConditionViolated : std::invalid_argument {
  std::vector<Rational> witness;
  ConditionViolated(const std::string& what, std::vector<Rational> w)
      : std::invalid_argument(what), witness(std::move(w)) {}
};

// Pair presentation (M, V): a global comodule plus V ⊆ M with
// δ(M) ∩ (V⊗H) = 0.
struct ComodulePair {
  GlobalComodule M;
  Subspace V;
};

inline PartialComoduleDatum from_pair(const ComodulePair& p) {
  const std::size_t n = p.M.H.dim;
  Subspace v_tensor_h = image(tensor_id(p.V.inclusion(), n));
  Subspace meet = intersection(image(p.M.delta), v_tensor_h);
  if (meet.dim() > 0)
    throw ConditionViolated("from_pair: delta(M) ∩ (V⊗H) != 0", *witness_vector(meet));
  return induce_from_cover(p.M, quotient_by(p.V).proj);
}

inline ComodulePair to_pair(const PartialComoduleDatum& d) {
  Globalization g = globalize(d);
  return ComodulePair{g.Y, kernel(g.eps_x)};
}

// Seeded comodule generator over a group algebra: a random grading
// transported along a random change of basis.
inline GlobalComodule random_graded_comodule(const HopfAlgebra& group_hopf, std::size_t y_dim,
                                             Prng& rng) {
  const std::size_t n = group_hopf.dim();
  LinMap grading(y_dim * n, y_dim);
  std::uniform_int_distribution<std::size_t> color(0, n - 1);
  for (std::size_t i = 0; i < y_dim; ++i) grading.at(i * n + color(rng), i) = 1;
  LinMap p = random_invertible(rng, y_dim);
  LinMap delta = tensor_id(p, n) * grading * *inverse(p);
  return GlobalComodule{group_hopf.coalgebra(), y_dim, delta};
}

// Rejection-sampled proper cover of a random graded comodule. Properness
// needs p injective on each homogeneous component, so x_dim*n >= y_dim is
// required for the sampler to terminate.
inline Cover random_proper_cover(const HopfAlgebra& group_hopf, std::size_t y_dim,
                                 std::size_t x_dim, Prng& rng) {
  if (x_dim * group_hopf.dim() < y_dim)
    throw std::invalid_argument("random_proper_cover: x_dim too small for a proper cover");
  for (;;) {
    GlobalComodule y = random_graded_comodule(group_hopf, y_dim, rng);
    for (int tries = 0; tries < 32; ++tries) {
      LinMap p = random_linmap(rng, x_dim, y_dim);
      if (!is_surjective(p)) continue;
      if (!properness(y, p)) continue;
      return Cover{std::move(y), std::move(p), true};
    }
  }
}

}  // namespace parcom
