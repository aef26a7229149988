#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcom/category.hpp"
#include "parcom/linmap.hpp"

namespace parcom {

struct AxiomViolation : std::runtime_error {
  explicit AxiomViolation(const std::string& what) : std::runtime_error(what) {}
};

// Validation outcome: ok, or the first failing identity with a witness basis
// index (the first basis column where the two sides of the identity differ).
struct AxiomReport {
  bool ok = true;
  std::string identity;
  std::size_t witness = static_cast<std::size_t>(-1);
};

namespace detail {
inline bool check_identity(AxiomReport& rep, const LinMap& lhs, const LinMap& rhs,
                           const std::string& name) {
  if (lhs == rhs) return true;
  rep.ok = false;
  rep.identity = name;
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    if (lhs.col(j) != rhs.col(j)) {
      rep.witness = j;
      break;
    }
  }
  return false;
}
}  // namespace detail

struct Coalgebra {
  std::size_t dim = 0;
  LinMap delta;  // n → n²: Δ(h_i) = Σ a^i_{j,k} h_j⊗h_k
  LinMap eps;    // n → 1
};

struct Algebra {
  std::size_t dim = 0;
  LinMap mu;    // n² → n
  LinMap unit;  // 1 → n
};

struct Bialgebra {
  Coalgebra co;
  Algebra alg;
  std::size_t dim() const { return co.dim; }
  const LinMap& delta() const { return co.delta; }
  const LinMap& eps() const { return co.eps; }
  const LinMap& mu() const { return alg.mu; }
  const LinMap& unit() const { return alg.unit; }
  const Coalgebra& coalgebra() const { return co; }
};

struct HopfAlgebra {
  Bialgebra bi;
  LinMap antipode;  // n → n
  std::size_t dim() const { return bi.dim(); }
  const LinMap& delta() const { return bi.delta(); }
  const LinMap& eps() const { return bi.eps(); }
  const LinMap& mu() const { return bi.mu(); }
  const LinMap& unit() const { return bi.unit(); }
  const Coalgebra& coalgebra() const { return bi.co; }
};

inline AxiomReport validate(const Coalgebra& c) {
  AxiomReport rep;
  const std::size_t n = c.dim;
  if (c.delta.rows() != n * n || c.delta.cols() != n || c.eps.rows() != 1 || c.eps.cols() != n)
    throw std::invalid_argument("Coalgebra: incoherent matrix dims");
  if (!detail::check_identity(rep, tensor_id(c.delta, n) * c.delta,
                              id_tensor(n, c.delta) * c.delta, "coassociativity"))
    return rep;
  if (!detail::check_identity(rep, tensor_id(c.eps, n) * c.delta, LinMap::identity(n),
                              "counit-left"))
    return rep;
  detail::check_identity(rep, id_tensor(n, c.eps) * c.delta, LinMap::identity(n),
                         "counit-right");
  return rep;
}

inline AxiomReport validate(const Algebra& a) {
  AxiomReport rep;
  const std::size_t n = a.dim;
  if (a.mu.rows() != n || a.mu.cols() != n * n || a.unit.rows() != n || a.unit.cols() != 1)
    throw std::invalid_argument("Algebra: incoherent matrix dims");
  if (!detail::check_identity(rep, a.mu * tensor_id(a.mu, n), a.mu * id_tensor(n, a.mu),
                              "associativity"))
    return rep;
  if (!detail::check_identity(rep, a.mu * kron(a.unit, LinMap::identity(n)),
                              LinMap::identity(n), "unit-left"))
    return rep;
  detail::check_identity(rep, a.mu * kron(LinMap::identity(n), a.unit), LinMap::identity(n),
                         "unit-right");
  return rep;
}

inline AxiomReport validate(const Bialgebra& b) {
  if (b.co.dim != b.alg.dim) throw std::invalid_argument("Bialgebra: dim mismatch");
  AxiomReport rep = validate(b.co);
  if (!rep.ok) return rep;
  rep = validate(b.alg);
  if (!rep.ok) return rep;
  const std::size_t n = b.dim();
  LinMap mid = id_tensor(n, kron(flip(n, n), LinMap::identity(n)));
  if (!detail::check_identity(rep, b.delta() * b.mu(),
                              kron(b.mu(), b.mu()) * mid * kron(b.delta(), b.delta()),
                              "delta-multiplicative"))
    return rep;
  if (!detail::check_identity(rep, b.delta() * b.unit(), kron(b.unit(), b.unit()),
                              "delta-unital"))
    return rep;
  if (!detail::check_identity(rep, b.eps() * b.mu(), kron(b.eps(), b.eps()),
                              "eps-multiplicative"))
    return rep;
  detail::check_identity(rep, b.eps() * b.unit(), LinMap::identity(1), "eps-unital");
  return rep;
}

inline AxiomReport validate(const HopfAlgebra& h) {
  AxiomReport rep = validate(h.bi);
  if (!rep.ok) return rep;
  const std::size_t n = h.dim();
  LinMap target = h.unit() * h.eps();
  if (!detail::check_identity(rep, h.mu() * tensor_id(h.antipode, n) * h.delta(), target,
                              "antipode-left"))
    return rep;
  detail::check_identity(rep, h.mu() * id_tensor(n, h.antipode) * h.delta(), target,
                         "antipode-right");
  return rep;
}

inline Algebra dualize(const Coalgebra& c) {
  return Algebra{c.dim, c.delta.transpose(), c.eps.transpose()};
}
inline Coalgebra dualize(const Algebra& a) {
  return Coalgebra{a.dim, a.mu.transpose(), a.unit.transpose()};
}
inline Bialgebra dualize(const Bialgebra& b) {
  return Bialgebra{dualize(b.alg), dualize(b.co)};
}
inline HopfAlgebra dualize(const HopfAlgebra& h) {
  return HopfAlgebra{dualize(h.bi), h.antipode.transpose()};
}

namespace detail {
// Row-major flatten of a matrix into one column, for linear solves where the
// matrix itself is the unknown.
inline LinMap vec(const LinMap& m) {
  LinMap v(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}
}  // namespace detail

// Solves both antipode identities µ∘(S⊗id)∘Δ = u∘ε = µ∘(id⊗S)∘Δ as one linear
// system in the n² entries of S. Fixtures never hand-code S, so they cannot
// drift from the axioms.
inline std::optional<LinMap> find_antipode(const Bialgebra& b) {
  const std::size_t n = b.dim();
  LinMap lhs(2 * n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      LinMap e(n, n);
      e.at(p, q) = 1;
      LinMap c1 = detail::vec(b.mu() * tensor_id(e, n) * b.delta());
      LinMap c2 = detail::vec(b.mu() * id_tensor(n, e) * b.delta());
      for (std::size_t r = 0; r < n * n; ++r) {
        lhs.at(r, p * n + q) = c1.at(r, 0);
        lhs.at(n * n + r, p * n + q) = c2.at(r, 0);
      }
    }
  LinMap target = detail::vec(b.unit() * b.eps());
  auto sol = solve_linear(lhs, vstack(target, target));
  if (!sol) return std::nullopt;
  LinMap s(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) s.at(p, q) = sol->at(p * n + q, 0);
  HopfAlgebra h{b, s};
  if (!validate(h).ok) return std::nullopt;
  return s;
}

struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i·g_j
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;

  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table) {
    FiniteGroup g;
    g.order = table.size();
    g.table = table;
    for (const auto& row : table)
      if (row.size() != g.order) throw AxiomViolation("group: ragged table");
    for (const auto& row : table)
      for (std::size_t v : row)
        if (v >= g.order) throw AxiomViolation("group: entry out of range");
    for (std::size_t i = 0; i < g.order; ++i)
      for (std::size_t j = 0; j < g.order; ++j)
        for (std::size_t k = 0; k < g.order; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]])
            throw AxiomViolation("group: associativity");
    bool found = false;
    for (std::size_t e = 0; e < g.order && !found; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < g.order; ++i)
        ok = ok && table[e][i] == i && table[i][e] == i;
      if (ok) {
        g.identity = e;
        found = true;
      }
    }
    if (!found) throw AxiomViolation("group: no identity");
    g.inverse.assign(g.order, g.order);
    for (std::size_t i = 0; i < g.order; ++i) {
      for (std::size_t j = 0; j < g.order; ++j)
        if (table[i][j] == g.identity && table[j][i] == g.identity) {
          g.inverse[i] = j;
          break;
        }
      if (g.inverse[i] == g.order) throw AxiomViolation("group: missing inverse");
    }
    return g;
  }

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
  std::size_t inv(std::size_t i) const { return inverse[i]; }
};

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(t);
}

// Permutations of {0..n−1} in lexicographic order; composition (p∘q)(x) = p(q(x)).
inline FiniteGroup symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    for (std::size_t i = 0; i < m; ++i)
      if (perms[i] == q) return i;
    throw std::logic_error("symmetric_group: lookup");
  };
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> comp(n);
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(comp);
    }
  return FiniteGroup::from_table(t);
}

inline HopfAlgebra group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order;
  LinMap mu(n, n * n), unit(n, 1), delta(n * n, n), eps(1, n), s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mu.at(g.mul(i, j), i * n + j) = 1;
    delta.at(i * n + i, i) = 1;
    eps.at(0, i) = 1;
    s.at(g.inv(i), i) = 1;
  }
  unit.at(g.identity, 0) = 1;
  return HopfAlgebra{Bialgebra{Coalgebra{n, delta, eps}, Algebra{n, mu, unit}}, s};
}

// Bialgebra of a finite monoid: every basis element grouplike. Throws if the
// table is not an associative unital monoid. Generally carries no antipode.
inline Bialgebra monoid_bialgebra(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  for (const auto& row : table)
    if (row.size() != n) throw AxiomViolation("monoid: ragged table");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw AxiomViolation("monoid: associativity");
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && table[e][i] == i && table[i][e] == i;
    if (ok) id = e;
  }
  if (id == n) throw AxiomViolation("monoid: no identity");
  LinMap mu(n, n * n), unit(n, 1), delta(n * n, n), eps(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mu.at(table[i][j], i * n + j) = 1;
    delta.at(i * n + i, i) = 1;
    eps.at(0, i) = 1;
  }
  unit.at(id, 0) = 1;
  return Bialgebra{Coalgebra{n, delta, eps}, Algebra{n, mu, unit}};
}

// The finite stand-in for the monoid bialgebra on a grouplike generator:
// {1, x, x²} with x³ = x².
inline Bialgebra truncated_powers_bialgebra() {
  return monoid_bialgebra({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
}

// 4-dim Hopf algebra on basis (1, g, y, gy): g² = 1, y² = 0, yg = −gy,
// Δ(g) = g⊗g, Δ(y) = y⊗g + 1⊗y. The antipode is solved, not hand-coded.
inline HopfAlgebra sweedler_h4() {
  const std::size_t n = 4;
  LinMap mu(n, n * n);
  auto set_product = [&](std::size_t i, std::size_t j, long coeff, std::size_t k) {
    mu.at(k, i * n + j) = coeff;
  };
  for (std::size_t j = 0; j < n; ++j) set_product(0, j, 1, j);
  for (std::size_t i = 1; i < n; ++i) set_product(i, 0, 1, i);
  set_product(1, 1, 1, 0);   // g·g = 1
  set_product(1, 2, 1, 3);   // g·y = gy
  set_product(1, 3, 1, 2);   // g·gy = y
  set_product(2, 1, -1, 3);  // y·g = −gy
  set_product(3, 1, -1, 2);  // gy·g = −y
  // y·y, y·gy, gy·y, gy·gy all vanish.
  LinMap unit(n, 1);
  unit.at(0, 0) = 1;
  LinMap delta(n * n, n);
  delta.at(0 * n + 0, 0) = 1;                          // Δ(1) = 1⊗1
  delta.at(1 * n + 1, 1) = 1;                          // Δ(g) = g⊗g
  delta.at(2 * n + 1, 2) = delta.at(0 * n + 2, 2) = 1;  // Δ(y) = y⊗g + 1⊗y
  delta.at(3 * n + 0, 3) = delta.at(1 * n + 3, 3) = 1;  // Δ(gy) = gy⊗1 + g⊗gy
  LinMap eps(1, n);
  eps.at(0, 0) = eps.at(0, 1) = 1;
  Bialgebra b{Coalgebra{n, delta, eps}, Algebra{n, mu, unit}};
  auto s = find_antipode(b);
  if (!s) throw AxiomViolation("sweedler_h4: antipode solve failed");
  return HopfAlgebra{b, *s};
}

inline HopfAlgebra kc2() { return group_algebra(cyclic_group(2)); }
inline HopfAlgebra ks3() { return group_algebra(symmetric_group(3)); }

}  // namespace parcom
