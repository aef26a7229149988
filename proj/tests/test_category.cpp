#include <catch2/catch_amalgamated.hpp>

#include "parcom/category.hpp"

using namespace parcom;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("flip and identity tensor builders", "[category]") {
  LinMap t = flip(2, 3);
  // e_1⊗e_2 at flat 1·3+2=5 goes to e_2⊗e_1 at flat 2·2+1=5.
  CHECK(t.at(5, 5) == rq(1));
  CHECK(t.at(0, 0) == rq(1));
  CHECK(flip(3, 2) * t == LinMap::identity(6));
  LinMap f = LinMap::from_rows({{rq(1), rq(2)}});
  CHECK(tensor_id(f, 2) == kron(f, LinMap::identity(2)));
  CHECK(id_tensor(2, f) == kron(LinMap::identity(2), f));
  // Naturality: τ∘(f⊗g) = (g⊗f)∘τ.
  LinMap g = LinMap::from_rows({{rq(3)}, {rq(4)}});
  CHECK(flip(1, 2) * kron(f, g) == kron(g, f) * flip(2, 1));
}

TEST_CASE("pushout frozen examples", "[category]") {
  SECTION("pushout along identity has iso right leg") {
    LinMap f = LinMap::identity(2);
    LinMap g = LinMap::from_rows({{rq(1), rq(0)}, {rq(2), rq(1)}, {rq(0), rq(3)}});
    Pushout po = pushout(f, g);
    CHECK(po.cospan.apex_dim == 3);
    CHECK(inverse(po.cospan.right).has_value());
  }
  SECTION("empty initial object gives direct sum") {
    Pushout po = pushout(LinMap::zero(2, 0), LinMap::zero(3, 0));
    CHECK(po.cospan.apex_dim == 5);
  }
  SECTION("one dimensional pushout of [1] and [2]") {
    Pushout po = pushout(LinMap::from_rows({{rq(1)}}), LinMap::from_rows({{rq(2)}}));
    CHECK(po.cospan.apex_dim == 1);
    // Universal test against the cospan (k, id, [1/2]).
    auto u = mediate_pushout(po, LinMap::identity(1), LinMap::from_rows({{rq(1, 2)}}));
    REQUIRE(u.has_value());
    CHECK(*u * po.cospan.left == LinMap::identity(1));
    CHECK(*u * po.cospan.right == LinMap::from_rows({{rq(1, 2)}}));
    CHECK(inverse(*u).has_value());
  }
}

TEST_CASE("pullback frozen examples", "[category]") {
  SECTION("pullback along identity has iso left leg") {
    LinMap f = LinMap::from_rows({{rq(1), rq(2)}, {rq(0), rq(1)}});
    Pullback pb = pullback(f, LinMap::identity(2));
    CHECK(pb.span.apex_dim() == 2);
    CHECK(inverse(pb.span.left).has_value());
    CHECK(pb.span.right == f * pb.span.left);
  }
  SECTION("zero maps give the product") {
    Pullback pb = pullback(LinMap::zero(1, 2), LinMap::zero(1, 3));
    CHECK(pb.span.apex_dim() == 5);
  }
  SECTION("corank one example") {
    Pullback pb = pullback(LinMap::from_rows({{rq(1), rq(0)}}), LinMap::from_rows({{rq(1)}}));
    CHECK(pb.span.apex_dim() == 2);
  }
}

TEST_CASE("equalizer and coequalizer frozen examples", "[category]") {
  LinMap f = LinMap::from_rows({{rq(1), rq(0)}, {rq(0), rq(0)}});
  Equalizer eq = equalizer(f, LinMap::identity(2));
  CHECK(eq.subspace == Subspace::span_vectors(2, {{rq(1), rq(0)}}));
  CHECK(eq.inclusion == LinMap::from_rows({{rq(1)}, {rq(0)}}));

  CHECK(equalizer(f, f).subspace == Subspace::full(2));
  CHECK(equalizer(LinMap::identity(3), LinMap::zero(3, 3)).subspace == Subspace::zero(3));

  CHECK(coequalizer(f, f).quotient_dim() == 2);
  CHECK(coequalizer(LinMap::identity(3), LinMap::zero(3, 3)).quotient_dim() == 0);
  LinMap r1 = LinMap::from_rows({{rq(1)}, {rq(2)}, {rq(3)}});
  CHECK(coequalizer(r1, LinMap::zero(3, 1)).quotient_dim() == 2);
}

TEST_CASE("universal properties hold on sampled instances", "[category]") {
  Prng rng(20250815);
  for (int t = 0; t < 20; ++t) {
    std::size_t a = 1 + t % 3, b = 1 + (t / 3) % 3, c = 1 + (t / 9) % 3;
    LinMap f = random_linmap(rng, b, a);
    LinMap g = random_linmap(rng, c, a);
    Pushout po = pushout(f, g);
    CHECK(verify_pushout_universal(f, g, po, rng));
    std::size_t d = 1 + t % 2;
    LinMap pf = random_linmap(rng, d, b);
    LinMap ph = random_linmap(rng, d, c);
    Pullback pb = pullback(pf, ph);
    CHECK(verify_pullback_universal(pf, ph, pb, rng));
    CHECK(po.cospan.apex_dim ==
          b + c - rank(vstack(f, Rational(-1) * g)));
    CHECK(pb.span.apex_dim() == b + c - rank(hstack(pf, Rational(-1) * ph)));
  }
}

TEST_CASE("dualize is an involution and swaps constructions", "[category]") {
  Prng rng(7);
  LinMap m = random_linmap(rng, 3, 2);
  CHECK(dualize(dualize(m)) == m);
  CHECK(dualize(Direction::Standard) == Direction::Opposite);
  CHECK(dualize(dualize(Direction::Opposite)) == Direction::Opposite);

  // pushout(f,g) dualized is the pullback of the transposes, up to unique iso.
  for (int t = 0; t < 10; ++t) {
    LinMap f = random_linmap(rng, 1 + t % 3, 1 + (t / 2) % 3);
    LinMap g = random_linmap(rng, 2, f.cols());
    Pushout po = pushout(f, g);
    Span dual = dualize(po.cospan);
    Pullback pb = pullback(f.transpose(), g.transpose());
    auto u = mediate_pullback(pb, dual.left, dual.right);
    REQUIRE(u.has_value());
    CHECK(inverse(*u).has_value());
  }
}

TEST_CASE("mono-epi squares are pushouts iff pullbacks", "[category]") {
  Prng rng(314159);
  int built = 0;
  for (int t = 0; t < 24 && built < 10; ++t) {
    std::size_t a = 1 + t % 2, bdim = a + 1 + t % 2, cdim = 1 + t % 2;
    LinMap i = random_linmap(rng, bdim, a);
    if (!is_injective(i)) continue;
    LinMap p = random_linmap(rng, cdim > a ? a : cdim, a);
    if (!is_surjective(p)) continue;
    ++built;
    Pushout po = pushout(i, p);
    // The pushout square of (mono, epi) must also be a pullback square.
    Pullback pb = pullback(po.cospan.left, po.cospan.right);
    auto u = mediate_pullback(pb, i, p);
    REQUIRE(u.has_value());
    CHECK(inverse(*u).has_value());
  }
  CHECK(built >= 10);
}

TEST_CASE("dualize maps equalizers to coequalizers", "[category]") {
  Prng rng(99);
  LinMap f = random_linmap(rng, 3, 3);
  LinMap g = random_linmap(rng, 3, 3);
  Equalizer eq = equalizer(f, g);
  QuotientPresentation co = coequalizer(f.transpose(), g.transpose());
  CHECK(eq.subspace.dim() == co.quotient_dim());
  // The transposed inclusion coequalizes the transposed pair.
  CHECK(eq.inclusion.transpose() * f.transpose() == eq.inclusion.transpose() * g.transpose());
}
