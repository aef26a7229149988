#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parcom/globalization.hpp"

namespace parcom {

// Algebraic partial right comodule (M, ∂): ∂: M → M⊗H subject to
//   APC1  (M⊗ε)∘∂ = id
//   APC2  (M⊗H⊗μ)(M⊗H⊗S⊗H)(M⊗Δ⊗H)(∂⊗H)∂ = (M⊗H⊗μ)(M⊗H⊗S⊗H)(∂⊗H⊗H)(∂⊗H)∂
//   APC3  (M⊗μ⊗H)(M⊗S⊗H⊗H)(M⊗H⊗Δ)(∂⊗H)∂ = (M⊗μ⊗H)(M⊗S⊗H⊗H)(∂⊗H⊗H)(∂⊗H)∂
struct AlgebraicPartialComodule {
  HopfAlgebra H;
  std::size_t m_dim = 0;
  LinMap partial_coaction;  // m → m·n
};

inline NcComodule to_nc(const AlgebraicPartialComodule& a) {
  return NcComodule{a.H.coalgebra(), a.m_dim, a.partial_coaction};
}

struct ApcCheck {
  bool ok = true;
  std::string axiom;
  std::size_t witness_column = 0;
};

// Verifies APC1–APC3 by explicit matrix composition, assembled leg by leg
// with the innermost tensor factor first. When first_cols is given, only
// that many leading basis columns are compared (used by truncation fixtures
// whose top degrees are not meaningful).
inline ApcCheck check_apc(const AlgebraicPartialComodule& a,
                          std::optional<std::size_t> first_cols = std::nullopt) {
  const std::size_t n = a.H.dim(), m = a.m_dim;
  const LinMap& d = a.partial_coaction;
  if (d.rows() != m * n || d.cols() != m)
    throw std::invalid_argument("check_apc: partial_coaction dims");
  const std::size_t cols = first_cols.value_or(m);

  auto verdict = [&](const LinMap& lhs, const LinMap& rhs,
                     const char* axiom) -> std::optional<ApcCheck> {
    for (std::size_t l = 0; l < cols; ++l)
      if (lhs.col(l) != rhs.col(l)) return ApcCheck{false, axiom, l};
    return std::nullopt;
  };

  LinMap id_m = LinMap::identity(m);
  if (auto bad = verdict(id_tensor(m, a.H.eps()) * d, id_m, "APC1")) return *bad;

  LinMap dd = tensor_id(d, n) * d;                       // m → m·n·n
  LinMap dddd = tensor_id(d, n * n) * dd;                // (∂⊗H⊗H)(∂⊗H)∂
  LinMap s_h = kron(a.H.antipode, LinMap::identity(n));  // S⊗H

  LinMap twist2 = kron(LinMap::identity(m * n), a.H.mu()) *
                  kron(LinMap::identity(m * n), s_h);
  LinMap lhs2 = twist2 * kron(id_m, kron(a.H.delta(), LinMap::identity(n))) * dd;
  if (auto bad = verdict(lhs2, twist2 * dddd, "APC2")) return *bad;

  LinMap twist3 = kron(id_m, kron(a.H.mu(), LinMap::identity(n))) *
                  kron(id_m, kron(a.H.antipode, LinMap::identity(n * n)));
  LinMap lhs3 = twist3 * kron(LinMap::identity(m * n), a.H.delta()) * dd;
  if (auto bad = verdict(lhs3, twist3 * dddd, "APC3")) return *bad;

  return {};
}

// Q ⊆ M⊗H from the structure constants ∂(m_ℓ) = Σ b^ℓ_{p,i} m_p⊗h_i and
// Δ(h_i) = Σ a^i_{j,k} h_j⊗h_k: for every ℓ and dual-basis slot t the
// generator Σ b^ℓ_{p,t}b^p_{q,k} m_q⊗h_k − Σ b^ℓ_{q,p}a^p_{k,t} m_q⊗h_k.
// Agrees with the last-slot slices of the coassociativity defect.
inline Subspace build_q(const AlgebraicPartialComodule& a,
                        std::optional<std::size_t> first_cols = std::nullopt) {
  const std::size_t n = a.H.dim(), m = a.m_dim;
  const LinMap& b = a.partial_coaction;
  const LinMap& dl = a.H.delta();
  const std::size_t cols = first_cols.value_or(m);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t l = 0; l < cols; ++l)
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<Rational> v(m * n);
      for (std::size_t p = 0; p < m; ++p) {
        const Rational& blpt = b.at(p * n + t, l);
        if (blpt.is_zero()) continue;
        for (std::size_t q = 0; q < m; ++q)
          for (std::size_t k = 0; k < n; ++k) v[q * n + k] += blpt * b.at(q * n + k, p);
      }
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t p = 0; p < n; ++p) {
          const Rational& blqp = b.at(q * n + p, l);
          if (blqp.is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k) v[q * n + k] -= blqp * dl.at(k * n + t, p);
        }
      gens.push_back(std::move(v));
    }
  return Subspace::span_vectors(m * n, gens);
}

// Induce the geometric datum and globalize it. Counitality is required; APC
// failures do not obstruct the construction.
inline Globalization globalize_apc(const AlgebraicPartialComodule& a) {
  return globalize(induce_from_nc(to_nc(a)));
}

// Truncation fixture for the polynomial comodule over Sweedler's H₄ with
// ∂(zⁿ) = z^{n+1}⊗y + zⁿ⊗(1+g)/2. The datum on span{1, z, …, z^N} is built
// directly from the quotient relations
//   Q_N = span{z^{n+1}⊗y − zⁿ⊗(1−g)/2 : 0 ≤ n ≤ N−1},  ρ(zⁿ) = class(zⁿ⊗g),
// not by truncating ∂ (which does not close in finite degree). The ∂ carried
// alongside drops the overflow term in its top column, so APC identities are
// meaningful only on columns ℓ ≤ N−3 and defect slices on ℓ ≤ N−2.
struct SweedlerTruncation {
  std::size_t N = 0;
  AlgebraicPartialComodule apc;
  PartialComoduleDatum datum;
};

inline SweedlerTruncation sweedler_truncation(std::size_t trunc) {
  if (trunc < 1) throw std::invalid_argument("sweedler_truncation: need N >= 1");
  HopfAlgebra h = sweedler_h4();
  const std::size_t m = trunc + 1, n = 4;

  LinMap partial(m * n, m);
  for (std::size_t l = 0; l < m; ++l) {
    partial.at(l * n + 0, l) = Rational(1, 2);  // zⁿ⊗(1+g)/2
    partial.at(l * n + 1, l) = Rational(1, 2);
    if (l + 1 < m) partial.at((l + 1) * n + 2, l) = 1;  // z^{n+1}⊗y
  }

  std::vector<std::vector<Rational>> rels;
  for (std::size_t l = 0; l + 1 < m; ++l) {
    std::vector<Rational> v(m * n);
    v[(l + 1) * n + 2] = 1;
    v[l * n + 0] = Rational(-1, 2);
    v[l * n + 1] = Rational(1, 2);
    rels.push_back(std::move(v));
  }
  QuotientPresentation pres = quotient_by(Subspace::span_vectors(m * n, rels));

  LinMap rho(pres.quotient_dim(), m);
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<Rational> cls = pres.proj.col(l * n + 1);
    for (std::size_t i = 0; i < cls.size(); ++i) rho.at(i, l) = cls[i];
  }

  AlgebraicPartialComodule apc{h, m, std::move(partial)};
  PartialComoduleDatum datum{h.coalgebra(), m, pres.quotient_dim(), pres.proj, std::move(rho),
                             Direction::Standard};
  return SweedlerTruncation{trunc, std::move(apc), std::move(datum)};
}

// Sub-datum carried by a ρ-closed subspace W ⊆ X: bullet' = π(W⊗H) with the
// corestricted structure maps; nullopt when ρ(W) falls outside π(W⊗H).
inline std::optional<PartialComoduleDatum> subcomodule_datum(const PartialComoduleDatum& d,
                                                             const Subspace& w) {
  const std::size_t n = d.H.dim;
  LinMap incl = w.inclusion();
  LinMap pi_restr = d.pi * tensor_id(incl, n);
  Subspace bullet = image(pi_restr);
  LinMap bullet_incl = bullet.inclusion();
  if (!bullet.contains(image(d.rho * incl))) return std::nullopt;
  auto pi2 = solve_lift(bullet_incl, pi_restr);
  auto rho2 = solve_lift(bullet_incl, d.rho * incl);
  if (!pi2 || !rho2) return std::nullopt;
  return PartialComoduleDatum{d.H, w.dim(), bullet.dim(), *pi2, *rho2, d.direction};
}

}  // namespace parcom
