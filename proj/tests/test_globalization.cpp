#include <catch2/catch_amalgamated.hpp>

#include "parcom/globalization.hpp"

using namespace parcom;

namespace {

PartialComoduleDatum two_dim_example() { return induce_from_nc(grouplike_primitive_nc()); }

// dim(X•H) = dim X + dim(X⊗H) − dim Y, since κ is injective.
void check_dimension_identity(const PartialComoduleDatum& d, const Globalization& g) {
  CHECK(d.bullet_dim ==
        d.x_dim + d.x_dim * d.H.dim - g.certificate.equalizer_dim);
}

}  // namespace

TEST_CASE("globalizing a global comodule recovers it", "[globalization]") {
  for (const HopfAlgebra& h : {kc2(), sweedler_h4()}) {
    GlobalComodule y{h.coalgebra(), h.dim(), h.delta()};
    PartialComoduleDatum d = global_datum(y);
    Globalization g = globalize(d);
    CHECK(g.certificate.equalizer_dim == y.y_dim);
    CHECK(g.certificate.all_ok());
    check_dimension_identity(d, g);

    // δ itself corestricts to an iso X → Y split by ε_X.
    auto iso = solve_lift(g.kappa, y.delta);
    REQUIRE(iso.has_value());
    CHECK(g.eps_x * *iso == LinMap::identity(y.y_dim));
    CHECK(inverse(*iso).has_value());
  }
}

TEST_CASE("trivial datum over a group algebra globalizes to X⊗H", "[globalization]") {
  HopfAlgebra h = kc2();
  const std::size_t m = 3, n = h.dim();
  PartialComoduleDatum d = trivial_datum(h.coalgebra(), m);
  Globalization g = globalize(d);

  // Brute-force oracle: Y is the kernel of (ρ⊗H) − (π⊗H)(X⊗Δ) assembled
  // entry by entry from the structure maps.
  LinMap f1 = kron(d.rho, LinMap::identity(n));
  LinMap f2 = kron(d.pi, LinMap::identity(n)) * id_tensor(m, h.delta());
  Subspace oracle = kernel(f1 - f2);
  CHECK(oracle.dim() == m * n);  // every basis vector of kC2 is grouplike
  CHECK(g.certificate.equalizer_dim == oracle.dim());
  CHECK(image(g.kappa) == oracle);

  CHECK(g.eps_x == id_tensor(m, h.eps()));
  CHECK(g.Y.delta == id_tensor(m, h.delta()) * g.kappa);
  CHECK(g.certificate.all_ok());
  check_dimension_identity(d, g);
}

TEST_CASE("two-dimensional grouplike/primitive example globalizes", "[globalization]") {
  PartialComoduleDatum d = two_dim_example();
  Globalization g = globalize(d);
  CHECK(g.certificate.equalizer_dim == 3);  // 2 + 4 − 3 = bullet dim
  CHECK(g.certificate.all_ok());
  check_dimension_identity(d, g);

  IsoCertificate rt = roundtrip_ind_gl(d);
  CHECK(rt.ok);
  CHECK(rt.forward.rows() == d.bullet_dim);
}

TEST_CASE("regular cover of kC2 onto the line round-trips", "[globalization]") {
  HopfAlgebra h = kc2();
  GlobalComodule y{h.coalgebra(), 2, h.delta()};
  Cover c = make_cover(y, LinMap::from_rows({{1, 1}}));
  CHECK(c.proper);

  PartialComoduleDatum d = induce_from_cover(c.Y, c.p);
  CHECK(d.x_dim == 1);
  CHECK(d.bullet_dim == 1);
  CHECK(check_gpc(d).ok);

  IsoCertificate rt = roundtrip_gl_ind(c);
  CHECK(rt.ok);
  CHECK(rt.forward.rows() == 2);
  CHECK(rt.forward * rt.backward == LinMap::identity(2));
}

TEST_CASE("regular cover of a non-Hopf monoid bialgebra is not proper", "[globalization]") {
  Bialgebra b = truncated_powers_bialgebra();
  GlobalComodule y{b.coalgebra(), b.dim(), b.delta()};
  LinMap p = LinMap::from_rows({{1, 0, 0}});
  CHECK_FALSE(properness(y, p));

  Cover c = make_cover(y, p);
  CHECK_FALSE(c.proper);
  // x is grouplike and p(x) = 0, so x generates the kernel of (p⊗B)∘Δ.
  Subspace ker = kernel(tensor_id(p, b.dim()) * y.delta);
  CHECK(ker.contains({Rational(0), Rational(1), Rational(0)}));
  CHECK_THROWS_AS(roundtrip_gl_ind(c), NotProper);
}

TEST_CASE("pair presentation round-trips through the globalization", "[globalization]") {
  PartialComoduleDatum d = two_dim_example();
  ComodulePair pair = to_pair(d);
  CHECK(pair.M.y_dim == 3);
  CHECK(pair.V.dim() == pair.M.y_dim - d.x_dim);

  PartialComoduleDatum d2 = from_pair(pair);
  CHECK(d2.x_dim == d.x_dim);
  CHECK(d2.bullet_dim == d.bullet_dim);

  // X' = M/V ≅ X via the map induced by ε_X, and that iso carries d2 to d.
  Globalization g = globalize(d);
  auto h = solve_factor(quotient_by(pair.V).proj, g.eps_x);
  REQUIRE(h.has_value());
  REQUIRE(inverse(*h).has_value());
  MorphismCheck mc = check_morphism(d2, d, *h);
  CHECK(mc.ok);
  CHECK(inverse(mc.morphism.f_bullet).has_value());
}

TEST_CASE("pair with V = 0 is the global comodule itself", "[globalization]") {
  HopfAlgebra h = kc2();
  GlobalComodule y{h.coalgebra(), 2, h.delta()};
  PartialComoduleDatum d = from_pair({y, Subspace::zero(2)});
  CHECK(d.x_dim == 2);
  // Identity cover: the pushout collapses onto X⊗H, i.e. the global datum.
  CHECK(d.bullet_dim == 4);
  CHECK(check_gpc(d).ok);
  MorphismCheck mc = check_morphism(d, global_datum(y), LinMap::identity(2));
  CHECK(mc.ok);
  CHECK(inverse(mc.morphism.f_bullet).has_value());
  CHECK(globalize(d).certificate.equalizer_dim == 2);
}

TEST_CASE("pair condition failure reports a witness", "[globalization]") {
  HopfAlgebra h = kc2();
  GlobalComodule y{h.coalgebra(), 2, h.delta()};
  // δ(1) = 1⊗1 lies in span{1}⊗H: the condition fails.
  ComodulePair bad{y, Subspace::span_vectors(2, {{1, 0}})};
  try {
    from_pair(bad);
    FAIL("expected ConditionViolated");
  } catch (const ConditionViolated& e) {
    REQUIRE(e.witness.size() == 4);
    Subspace v_tensor_h = image(tensor_id(bad.V.inclusion(), 2));
    CHECK(v_tensor_h.contains(e.witness));
    CHECK(image(y.delta).contains(e.witness));
  }
}

TEST_CASE("seeded induced data round-trip through globalization", "[globalization]") {
  Prng rng(2026);
  for (const HopfAlgebra& h : {kc2(), sweedler_h4()}) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t m = 1 + trial % 3;
      PartialComoduleDatum d = induce_from_nc(random_nc_comodule(h.coalgebra(), m, rng));
      Globalization g = globalize(d);
      CHECK(g.certificate.all_ok());
      check_dimension_identity(d, g);
      CHECK(roundtrip_ind_gl(d).ok);

      ComodulePair pair = to_pair(d);
      PartialComoduleDatum d2 = from_pair(pair);
      CHECK(d2.bullet_dim == d.bullet_dim);
      auto iso = solve_factor(quotient_by(pair.V).proj, g.eps_x);
      REQUIRE(iso.has_value());
      CHECK(check_morphism(d2, d, *iso).ok);
    }
  }
}

TEST_CASE("seeded proper covers round-trip through induction", "[globalization]") {
  Prng rng(77);
  HopfAlgebra h = ks3();
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t y_dim = 2 + trial % 3;
    const std::size_t x_dim = 1 + trial % y_dim;
    Cover c = random_proper_cover(h, y_dim, x_dim, rng);
    PartialComoduleDatum d = induce_from_cover(c.Y, c.p);
    CHECK(check_gpc(d).ok);
    IsoCertificate rt = roundtrip_gl_ind(c);
    CHECK(rt.ok);
    CHECK(globalize(d).certificate.equalizer_dim == c.Y.y_dim);
  }
}
