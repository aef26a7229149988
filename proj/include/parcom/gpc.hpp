#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcom/category.hpp"
#include "parcom/structures.hpp"
#include "parcom/subspace.hpp"

namespace parcom {

// Partial comodule datum (X, X•H, π, ρ): π: X⊗H → X•H epi, ρ: X → X•H.
// Opposite direction marks data obtained by dualizing a Vect^op picture
// (partial modules); the stored matrices are the transposed Vect matrices and
// all checks run on them unchanged.
struct PartialComoduleDatum {
  Coalgebra H;
  std::size_t x_dim = 0;
  std::size_t bullet_dim = 0;
  LinMap pi;   // x_dim·n → bullet_dim
  LinMap rho;  // x_dim → bullet_dim
  Direction direction = Direction::Standard;
};

struct GlobalComodule {
  Coalgebra H;
  std::size_t y_dim = 0;
  LinMap delta;  // y_dim → y_dim·n
};

inline AxiomReport validate(const GlobalComodule& y) {
  AxiomReport rep;
  const std::size_t n = y.H.dim;
  if (y.delta.rows() != y.y_dim * n || y.delta.cols() != y.y_dim)
    throw std::invalid_argument("GlobalComodule: incoherent dims");
  if (!detail::check_identity(rep, tensor_id(y.delta, n) * y.delta,
                              id_tensor(y.y_dim, y.H.delta) * y.delta,
                              "comodule-coassociativity"))
    return rep;
  detail::check_identity(rep, id_tensor(y.y_dim, y.H.eps) * y.delta,
                         LinMap::identity(y.y_dim), "comodule-counit");
  return rep;
}

inline void validate_datum(const PartialComoduleDatum& d) {
  const std::size_t n = d.H.dim;
  if (d.pi.rows() != d.bullet_dim || d.pi.cols() != d.x_dim * n)
    throw std::invalid_argument("datum: pi dims");
  if (d.rho.rows() != d.bullet_dim || d.rho.cols() != d.x_dim)
    throw std::invalid_argument("datum: rho dims");
  if (!is_surjective(d.pi)) throw std::invalid_argument("datum: pi not epi");
}

// (X, X, X⊗ε, id): the trivial structure every X carries.
inline PartialComoduleDatum trivial_datum(const Coalgebra& h, std::size_t m) {
  return PartialComoduleDatum{h, m, m, id_tensor(m, h.eps), LinMap::identity(m),
                              Direction::Standard};
}

// (Y, Y⊗H, id, δ): a global comodule seen as a partial one.
inline PartialComoduleDatum global_datum(const GlobalComodule& y) {
  return PartialComoduleDatum{y.H, y.y_dim, y.y_dim * y.H.dim,
                              LinMap::identity(y.y_dim * y.H.dim), y.delta,
                              Direction::Standard};
}

struct GpcFailure {
  std::string reason;
  std::vector<Rational> witness;  // empty when no single obstruction vector applies
};

struct Gpc1Result {
  bool ok = false;
  LinMap counit_map;  // bullet_dim → x_dim, the symbol X•ε
  GpcFailure failure;
};

// GPC1: X⊗ε factors through π (uniquely, π epi) and the factor splits ρ.
inline Gpc1Result check_gpc1(const PartialComoduleDatum& d) {
  const std::size_t n = d.H.dim;
  LinMap x_eps = id_tensor(d.x_dim, d.H.eps);
  auto u = solve_factor(d.pi, x_eps);
  if (!u) {
    Subspace ker_pi = kernel(d.pi);
    GpcFailure f{"GPC1: X⊗eps does not factor through pi", {}};
    for (std::size_t i = 0; i < ker_pi.dim(); ++i) {
      std::vector<Rational> v = ker_pi.basis().row(i);
      bool nonzero = false;
      for (const Rational& r : x_eps.apply(v))
        if (!r.is_zero()) nonzero = true;
      if (nonzero) {
        f.witness = v;
        break;
      }
    }
    return Gpc1Result{false, LinMap(), std::move(f)};
  }
  LinMap comp = *u * d.rho;
  if (!(comp == LinMap::identity(d.x_dim))) {
    GpcFailure f{"GPC1: counit_map∘rho != id", {}};
    for (std::size_t j = 0; j < d.x_dim; ++j) {
      if (comp.col(j) != LinMap::identity(d.x_dim).col(j)) {
        std::vector<Rational> e(d.x_dim);
        e[j] = 1;
        f.witness = e;
        break;
      }
    }
    return Gpc1Result{false, *u, std::move(f)};
  }
  return Gpc1Result{true, *u, {}};
}

// The two maps X⊗H ⇉ (X•H)⊗H whose equalizer detects GPC2 (and later houses
// the globalization): ρ⊗H and (π⊗H)∘(X⊗Δ).
inline std::pair<LinMap, LinMap> gpc2_pair(const PartialComoduleDatum& d) {
  const std::size_t n = d.H.dim;
  return {tensor_id(d.rho, n), tensor_id(d.pi, n) * id_tensor(d.x_dim, d.H.delta)};
}

struct Gpc2Criterion {
  Subspace pullback_apex;   // {w ∈ X⊗H : π(w) ∈ im ρ}
  Subspace equalizer_apex;  // ker((ρ⊗H) − (π⊗H)∘(X⊗Δ))
  bool verdict = false;
};

// Abelian-criterion route: assumes GPC1 (which splits ρ, so the pullback of
// (ρ, π) embeds into X⊗H as π⁻¹(im ρ)).
inline Gpc2Criterion check_gpc2_criterion(const PartialComoduleDatum& d) {
  Subspace pb = preimage(d.pi, image(d.rho));
  auto [f1, f2] = gpc2_pair(d);
  Subspace eq = kernel(f1 - f2);
  bool verdict = pb == eq;
  return Gpc2Criterion{std::move(pb), std::move(eq), verdict};
}

struct Gpc2Definitional {
  bool ok = false;
  LinMap theta;  // X•(H•H) → (X•H)•H
  std::string failing;
};

// Definitional route: build both iterated pushouts and solve for θ through
// the epi π_{X,Δ}; θ must be invertible and close both triangles.
inline Gpc2Definitional check_gpc2_definitional(const PartialComoduleDatum& d) {
  const std::size_t n = d.H.dim;
  // (X•H)•H: pushout of π_X along ρ_X⊗H.
  Pushout po1 = pushout(d.pi, tensor_id(d.rho, n));
  // X•(H•H): pushout of π_X along (π_X⊗H)∘(X⊗Δ).
  Pushout po2 = pushout(d.pi, tensor_id(d.pi, n) * id_tensor(d.x_dim, d.H.delta));
  auto theta = solve_factor(po2.cospan.right, po1.cospan.right);
  if (!theta) return {false, LinMap(), "theta does not factor through pi_{X,delta}"};
  if (!inverse(*theta).has_value()) return {false, *theta, "theta not invertible"};
  if (!(*theta * po2.cospan.left * d.rho == po1.cospan.left * d.rho))
    return {false, *theta, "rho triangle does not commute"};
  return {true, *theta, {}};
}

// Full certificate per the datum: GPC1 factor, both GPC2 routes.
struct GpcCertificate {
  LinMap counit_map;
  LinMap theta;
  Subspace pullback_apex = Subspace(0);
  Subspace equalizer_apex = Subspace(0);
};

struct GpcCheck {
  bool ok = false;
  bool gpc1_ok = false;
  bool criterion_verdict = false;
  bool definitional_ok = false;
  GpcCertificate certificate;
  GpcFailure failure;
};

inline GpcCheck check_gpc(const PartialComoduleDatum& d) {
  GpcCheck out;
  Gpc1Result g1 = check_gpc1(d);
  out.gpc1_ok = g1.ok;
  if (!g1.ok) {
    out.failure = g1.failure;
    return out;
  }
  out.certificate.counit_map = g1.counit_map;
  Gpc2Criterion crit = check_gpc2_criterion(d);
  out.criterion_verdict = crit.verdict;
  out.certificate.pullback_apex = crit.pullback_apex;
  out.certificate.equalizer_apex = crit.equalizer_apex;
  Gpc2Definitional def = check_gpc2_definitional(d);
  out.definitional_ok = def.ok;
  if (def.ok) out.certificate.theta = def.theta;
  out.ok = g1.ok && crit.verdict && def.ok;
  if (!out.ok && out.failure.reason.empty())
    out.failure.reason = !crit.verdict ? "GPC2: pullback and equalizer apexes differ"
                                       : "GPC2: " + def.failing;
  return out;
}

// Counital but possibly non-coassociative coaction ∂: X → X⊗H.
struct NcComodule {
  Coalgebra H;
  std::size_t x_dim = 0;
  LinMap partial_coaction;  // x_dim·n → x_dim column convention: X → X⊗H
};

struct CounitalityViolation : AxiomViolation {
  using AxiomViolation::AxiomViolation;
};

inline bool is_counital(const NcComodule& c) {
  return id_tensor(c.x_dim, c.H.eps) * c.partial_coaction == LinMap::identity(c.x_dim);
}

// The coassociativity defect (∂⊗H)∘∂ − (X⊗Δ)∘∂ : X → X⊗H⊗H.
inline LinMap coassociativity_defect(const NcComodule& c) {
  return tensor_id(c.partial_coaction, c.H.dim) * c.partial_coaction -
         id_tensor(c.x_dim, c.H.delta) * c.partial_coaction;
}

// Q ⊆ X⊗H: span of all last-slot slices (id⊗id⊗f)(D(x)), f over the dual
// basis of H, x over the basis of X.
inline Subspace defect_slices(const NcComodule& c) {
  const std::size_t m = c.x_dim, n = c.H.dim;
  LinMap d = coassociativity_defect(c);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> v(m * n);
      bool nonzero = false;
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i) {
          v[p * n + i] = d.at((p * n + i) * n + j, l);
          nonzero = nonzero || !v[p * n + i].is_zero();
        }
      if (nonzero) gens.push_back(std::move(v));
    }
  return Subspace::span_vectors(m * n, gens);
}

// Induction: bullet = (X⊗H)/Q, π the projection, ρ = π∘∂.
inline PartialComoduleDatum induce_from_nc(const NcComodule& c) {
  if (!is_counital(c)) throw CounitalityViolation("induce_from_nc: coaction not counital");
  QuotientPresentation pres = quotient_by(defect_slices(c));
  PartialComoduleDatum d{c.H, c.x_dim, pres.quotient_dim(), pres.proj,
                         pres.proj * c.partial_coaction, Direction::Standard};
  return d;
}

struct NotEpi : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidComodule : AxiomViolation {
  using AxiomViolation::AxiomViolation;
};

// Induction along a cover p: Y → X of a global comodule: pushout of
// (p, (p⊗H)∘δ); the right leg is π, the left leg is ρ.
inline PartialComoduleDatum induce_from_cover(const GlobalComodule& y, const LinMap& p) {
  if (p.cols() != y.y_dim) throw std::invalid_argument("induce_from_cover: p domain");
  if (!is_surjective(p)) throw NotEpi("induce_from_cover: p not epi");
  AxiomReport rep = validate(y);
  if (!rep.ok) throw InvalidComodule("induce_from_cover: " + rep.identity);
  const std::size_t n = y.H.dim;
  Pushout po = pushout(p, tensor_id(p, n) * y.delta);
  return PartialComoduleDatum{y.H, p.rows(), po.cospan.apex_dim, po.cospan.right,
                              po.cospan.left, Direction::Standard};
}

struct GpcMorphism {
  LinMap f;         // src X → dst X
  LinMap f_bullet;  // src bullet → dst bullet
};

struct MorphismCheck {
  bool ok = false;
  GpcMorphism morphism;
  std::string failing;
};

// A morphism is a pair (f, f•H) with f•H∘π = π'∘(f⊗H) and f•H∘ρ = ρ'∘f;
// f•H is unique through the epi π when it exists.
inline MorphismCheck check_morphism(const PartialComoduleDatum& src,
                                    const PartialComoduleDatum& dst, const LinMap& f) {
  if (f.cols() != src.x_dim || f.rows() != dst.x_dim)
    throw std::invalid_argument("check_morphism: f dims");
  const std::size_t n = src.H.dim;
  auto fb = solve_factor(src.pi, dst.pi * tensor_id(f, n));
  if (!fb) return {false, {}, "pi square: (f⊗H)(ker pi) not inside ker pi'"};
  if (!(*fb * src.rho == dst.rho * f)) return {false, {f, *fb}, "rho square does not commute"};
  return {true, {f, *fb}, {}};
}

inline bool is_nc_morphism(const NcComodule& src, const NcComodule& dst, const LinMap& f) {
  return dst.partial_coaction * f == tensor_id(f, src.H.dim) * src.partial_coaction;
}

// Deterministic counital point: e with ε(e) = 1, supported on the first
// nonzero column of ε.
inline LinMap counital_point(const Coalgebra& h) {
  for (std::size_t j = 0; j < h.dim; ++j) {
    if (!h.eps.at(0, j).is_zero()) {
      LinMap e(h.dim, 1);
      e.at(j, 0) = h.eps.at(0, j).inverse();
      return e;
    }
  }
  throw AxiomViolation("counital_point: eps = 0");
}

// Seeded generator of counital coactions: ∂(x) = x⊗e + (term in X⊗ker ε).
inline NcComodule random_nc_comodule(const Coalgebra& h, std::size_t m, Prng& rng) {
  const std::size_t n = h.dim;
  LinMap e = counital_point(h);
  LinMap base = kron(LinMap::identity(m), e);  // x_i ↦ x_i⊗e
  Subspace ker_eps = kernel(h.eps);
  LinMap coeff = random_linmap(rng, m * ker_eps.dim(), m);
  LinMap partial = base + id_tensor(m, ker_eps.inclusion()) * coeff;
  return NcComodule{h, m, partial};
}

// Fixture: the 2-dim coalgebra with grouplike g and g-primitive x, plus the
// counital non-coassociative coaction ∂(g) = g⊗g + g⊗x, ∂(x) = x⊗g.
inline Coalgebra grouplike_primitive_coalgebra() {
  LinMap delta(4, 2), eps(1, 2);
  delta.at(0, 0) = 1;                    // Δ(g) = g⊗g
  delta.at(1, 1) = delta.at(2, 1) = 1;   // Δ(x) = g⊗x + x⊗g
  eps.at(0, 0) = 1;
  return Coalgebra{2, delta, eps};
}

inline NcComodule grouplike_primitive_nc() {
  Coalgebra h = grouplike_primitive_coalgebra();
  LinMap partial(4, 2);
  partial.at(0, 0) = 1;  // ∂(g) = g⊗g + g⊗x
  partial.at(1, 0) = 1;
  partial.at(2, 1) = 1;  // ∂(x) = x⊗g
  return NcComodule{h, 2, partial};
}

}  // namespace parcom
