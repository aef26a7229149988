#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parcom/linmap.hpp"

namespace parcom {

// Subspace of k^n in canonical form: basis rows are in RREF with leading-one
// pivots and ascending pivot columns, zero rows dropped. Two subspaces are
// equal iff their canonical bases are identical entry by entry.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

  static Subspace full(std::size_t ambient_dim) {
    return span_rows(LinMap::identity(ambient_dim));
  }

  // Span of the rows of m inside k^{m.cols()}.
  static Subspace span_rows(const LinMap& m) {
    Rref r = rref(m);
    Subspace s(m.cols());
    LinMap b(r.rank(), m.cols());
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = r.matrix.at(i, j);
    s.basis_ = b;
    s.pivots_ = r.pivots;
    return s;
  }

  static Subspace span_vectors(std::size_t ambient_dim,
                               const std::vector<std::vector<Rational>>& vs) {
    return span_rows(LinMap::from_rows(ambient_dim, vs));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const LinMap& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Inclusion map k^dim → k^ambient whose columns are the basis vectors.
  LinMap inclusion() const { return basis_.transpose(); }

  bool contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector dim mismatch");
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const Rational c = w[pivots_[i]];  // copy: the loop below overwrites the pivot slot
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_;
  LinMap basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::span_rows(vstack(a.basis(), b.basis()));
}

// Null space with canonical RREF basis.
inline Subspace kernel(const LinMap& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> gens;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(m.cols());
    v[j] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.matrix.at(k, j);
    gens.push_back(std::move(v));
  }
  return Subspace::span_vectors(m.cols(), gens);
}

// Column space of m as a subspace of the codomain.
inline Subspace image(const LinMap& m) { return Subspace::span_rows(m.transpose()); }

inline Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersection: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // Solve u·A = w = v·B: kernel of [Aᵀ | −Bᵀ], then push the A-coefficients in.
  LinMap sys = hstack(a.inclusion(), Rational(-1) * b.inclusion());
  Subspace coeff = kernel(sys);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < coeff.dim(); ++i) {
    std::vector<Rational> c = coeff.basis().row(i);
    std::vector<Rational> v(a.ambient_dim());
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (std::size_t j = 0; j < a.ambient_dim(); ++j) v[j] += c[k] * a.basis().at(k, j);
    gens.push_back(std::move(v));
  }
  return Subspace::span_vectors(a.ambient_dim(), gens);
}

// Presentation of ambient/relations with a chosen section: the complement is
// spanned by the standard basis vectors at the non-pivot columns of relations.
struct QuotientPresentation {
  std::size_t ambient_dim;
  Subspace relations;
  LinMap proj;     // ambient → quotient, full row rank
  LinMap section;  // quotient → ambient, proj∘section = id
  std::size_t quotient_dim() const { return proj.rows(); }
};

inline QuotientPresentation quotient_by(const Subspace& relations) {
  const std::size_t n = relations.ambient_dim();
  const std::size_t r = relations.dim();
  const std::size_t q = n - r;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  LinMap proj(q, n), section(n, q);
  for (std::size_t i = 0; i < q; ++i) {
    proj.at(i, free_cols[i]) = 1;
    section.at(free_cols[i], i) = 1;
    for (std::size_t k = 0; k < r; ++k)
      proj.at(i, relations.pivots()[k]) = -relations.basis().at(k, free_cols[i]);
  }
  return QuotientPresentation{n, relations, std::move(proj), std::move(section)};
}

inline Subspace preimage(const LinMap& f, const Subspace& s) {
  if (f.rows() != s.ambient_dim()) throw std::invalid_argument("preimage: dim mismatch");
  return kernel(quotient_by(s).proj * f);
}

// First basis vector of a nonzero subspace, used as a failure witness.
inline std::optional<std::vector<Rational>> witness_vector(const Subspace& s) {
  if (s.dim() == 0) return std::nullopt;
  return s.basis().row(0);
}

}  // namespace parcom
