#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "parcom/linmap.hpp"
#include "parcom/sampling.hpp"
#include "parcom/subspace.hpp"

namespace parcom {

// All tensor coordinates use one flat convention: e_i⊗e_j in A⊗B sits at
// index i·dim(B)+j (left factor major). kron realizes maps in it; the
// builders below cover flips and identity factors so no caller hand-rolls
// index arithmetic.

inline LinMap tensor_id(const LinMap& f, std::size_t n) { return kron(f, LinMap::identity(n)); }
inline LinMap id_tensor(std::size_t n, const LinMap& f) { return kron(LinMap::identity(n), f); }

// τ_{A,B}: A⊗B → B⊗A, e_i⊗e_j ↦ e_j⊗e_i.
inline LinMap flip(std::size_t a_dim, std::size_t b_dim) {
  LinMap t(b_dim * a_dim, a_dim * b_dim);
  for (std::size_t i = 0; i < a_dim; ++i)
    for (std::size_t j = 0; j < b_dim; ++j) t.at(j * a_dim + i, i * b_dim + j) = 1;
  return t;
}

struct Cospan {
  LinMap left;   // A → P
  LinMap right;  // B → P
  std::size_t apex_dim;
};

struct Span {
  LinMap left;   // P → A
  LinMap right;  // P → B
  std::size_t apex_dim() const { return left.cols(); }
};

enum class Direction { Standard, Opposite };

inline Direction dualize(Direction d) {
  return d == Direction::Standard ? Direction::Opposite : Direction::Standard;
}

inline LinMap dualize(const LinMap& m) { return m.transpose(); }
inline Span dualize(const Cospan& c) { return Span{c.left.transpose(), c.right.transpose()}; }
inline Cospan dualize(const Span& s) {
  return Cospan{s.left.transpose(), s.right.transpose(), s.apex_dim()};
}

inline LinMap coprod_incl_left(std::size_t b, std::size_t c) {
  return vstack(LinMap::identity(b), LinMap::zero(c, b));
}
inline LinMap coprod_incl_right(std::size_t b, std::size_t c) {
  return vstack(LinMap::zero(b, c), LinMap::identity(c));
}
inline LinMap prod_proj_left(std::size_t b, std::size_t c) {
  return hstack(LinMap::identity(b), LinMap::zero(b, c));
}
inline LinMap prod_proj_right(std::size_t b, std::size_t c) {
  return hstack(LinMap::zero(c, b), LinMap::identity(c));
}

struct Pushout {
  Cospan cospan;  // left: B → apex, right: C → apex
  QuotientPresentation presentation;
};

// Pushout of B ←f− A −g→ C: apex = (B⊕C)/im(f⊕(−g)).
inline Pushout pushout(const LinMap& f, const LinMap& g) {
  if (f.cols() != g.cols()) throw std::invalid_argument("pushout: domain mismatch");
  const std::size_t b = f.rows(), c = g.rows();
  Subspace relations = image(vstack(f, Rational(-1) * g));
  QuotientPresentation pres = quotient_by(relations);
  Cospan cs{pres.proj * coprod_incl_left(b, c), pres.proj * coprod_incl_right(b, c),
            pres.quotient_dim()};
  return Pushout{std::move(cs), std::move(pres)};
}

struct Pullback {
  Span span;      // left: apex → B, right: apex → C
  Subspace apex;  // inside B⊕C
};

// Pullback of B −f→ D ←h− C: apex = kernel[f | −h] ⊆ B⊕C.
inline Pullback pullback(const LinMap& f, const LinMap& h) {
  if (f.rows() != h.rows()) throw std::invalid_argument("pullback: codomain mismatch");
  const std::size_t b = f.cols(), c = h.cols();
  Subspace apex = kernel(hstack(f, Rational(-1) * h));
  LinMap incl = apex.inclusion();
  Span sp{prod_proj_left(b, c) * incl, prod_proj_right(b, c) * incl};
  return Pullback{std::move(sp), std::move(apex)};
}

struct Equalizer {
  Subspace subspace;
  LinMap inclusion;
};

inline Equalizer equalizer(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("equalizer: dim mismatch");
  Subspace s = kernel(f - g);
  LinMap incl = s.inclusion();
  return Equalizer{std::move(s), std::move(incl)};
}

inline QuotientPresentation coequalizer(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("coequalizer: dim mismatch");
  return quotient_by(image(f - g));
}

// Mediating map for a test cospan (t1, t2) with t1∘f = t2∘g: unique u with
// u∘left = t1, u∘right = t2. The legs are jointly epi, so u is unique.
inline std::optional<LinMap> mediate_pushout(const Pushout& po, const LinMap& t1,
                                             const LinMap& t2) {
  return solve_factor(hstack(po.cospan.left, po.cospan.right), hstack(t1, t2));
}

// Mediating map for a test span (s1, s2) with f∘s1 = h∘s2: unique u with
// left∘u = s1, right∘u = s2. The legs are jointly mono, so u is unique.
inline std::optional<LinMap> mediate_pullback(const Pullback& pb, const LinMap& s1,
                                              const LinMap& s2) {
  return solve_lift(vstack(pb.span.left, pb.span.right), vstack(s1, s2));
}

// Sampling check of the pushout universal property: test cospans through the
// apex must factor back uniquely, and joint surjectivity pins uniqueness.
inline bool verify_pushout_universal(const LinMap& f, const LinMap& g, const Pushout& po,
                                     Prng& rng, int samples = 5) {
  if (!is_surjective(hstack(po.cospan.left, po.cospan.right))) return false;
  if (!(po.cospan.left * f == po.cospan.right * g)) return false;
  for (int s = 0; s < samples; ++s) {
    std::size_t t_dim = 1 + static_cast<std::size_t>(s % 3);
    LinMap t = random_linmap(rng, t_dim, po.cospan.apex_dim);
    auto u = mediate_pushout(po, t * po.cospan.left, t * po.cospan.right);
    if (!u || !(*u == t)) return false;
  }
  return true;
}

inline bool verify_pullback_universal(const LinMap& f, const LinMap& h, const Pullback& pb,
                                      Prng& rng, int samples = 5) {
  if (!is_injective(vstack(pb.span.left, pb.span.right))) return false;
  if (!(f * pb.span.left == h * pb.span.right)) return false;
  for (int s = 0; s < samples; ++s) {
    std::size_t t_dim = 1 + static_cast<std::size_t>(s % 3);
    LinMap t = random_linmap(rng, pb.span.apex_dim(), t_dim);
    auto u = mediate_pullback(pb, pb.span.left * t, pb.span.right * t);
    if (!u || !(*u == t)) return false;
  }
  return true;
}

}  // namespace parcom
