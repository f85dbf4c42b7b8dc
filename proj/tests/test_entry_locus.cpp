// Entry loci of the catalog surfaces: invariants, classification, component counts.

#include "doctest.h"

#include "el/catalog.hpp"
#include "el/entry_locus.hpp"

using namespace el;

namespace {

const PrimeField kFp(2147483659ULL);

Point<PrimeField> random_point(int n, Rng& rng) {
  Point<PrimeField> q;
  for (int i = 0; i < n; ++i) q.push_back(kFp.random(rng));
  return q;
}

}  // namespace

TEST_CASE("entry_locus_ideal examples") {
  Rng rng(1);
  SUBCASE("scroll12: an irreducible conic, both strategies agree") {
    auto X = build_catalog_variety("scroll12", 1, kFp);
    auto q = random_point(5, rng);
    auto G = entry_locus_ideal(X, q, rng, EntryLocusStrategy::both);
    CHECK(reduced_dim_degree(G, rng) == DimDegree{1, 2});
    CHECK(span_dim(G, rng) == 2);
    CHECK(component_count(G, rng) == 1);
  }
  SUBCASE("cone over the twisted cubic: two lines through the vertex") {
    auto X = build_catalog_variety("cone_twisted_cubic", 1, kFp);
    auto G = entry_locus_ideal(X, random_point(5, rng), rng, EntryLocusStrategy::both);
    CHECK(reduced_dim_degree(G, rng) == DimDegree{1, 2});
    CHECK(curve_components(G, rng).degrees == std::vector<int>{1, 1});
    ProjectiveVariety<PrimeField> V;
    V.ideal = G;
    CHECK(V.contains({0, 0, 0, 0, 1}));
    // projecting from the vertex collapses each line to a point
    auto img = project_ideal(G, annihilator(kFp, {{0, 0, 0, 0, 1}}, 5), rng);
    CHECK(reduced_dim_degree(img, rng) == DimDegree{0, 2});
  }
  SUBCASE("Veronese projection: three conics") {
    auto X = build_catalog_variety("veronese_proj4", 1, kFp);
    auto G = entry_locus_ideal(X, random_point(5, rng), rng);
    CHECK(reduced_dim_degree(G, rng) == DimDegree{1, 6});
    CHECK(curve_components(G, rng).degrees == std::vector<int>{2, 2, 2});
  }
  SUBCASE("q on X is rejected") {
    auto X = build_catalog_variety("scroll12", 1, kFp);
    CHECK_THROWS_AS(entry_locus_ideal(X, sample_point(X, rng), rng), InvalidInput);
  }
}

TEST_CASE("component_count") {
  Rng rng(2);
  auto R = projective_ring(kFp, 3);
  Ideal<PrimeField> lines(R, {parse_polynomial("x0*x2", R), parse_polynomial("x0*x3", R), parse_polynomial("x1*x2", R),
                              parse_polynomial("x1*x3", R)});
  CHECK(component_count(lines, rng) == 2);
  auto C = build_catalog_variety("rnc3", 1, kFp);
  CHECK(component_count(C.ideal, rng) == 1);
  // oracle: the plane model of the twisted cubic is an irreducible cubic with one node
  auto f = plane_model(C.ideal, rng);
  CHECK(f.degree() == 3);
  Ideal<PrimeField> sing(f.ring(), {f, f.derivative(0), f.derivative(1), f.derivative(2)});
  CHECK(reduced_dim_degree(sing, rng) == DimDegree{0, 1});
}

TEST_CASE("classify_entry_locus on the catalog surfaces") {
  struct Expect {
    const char* key;
    int gamma, ell;
    long long degree;
    int components;
    const char* irr;
  };
  for (const auto& e : {Expect{"scroll12", 1, 2, 2, 1, "I"}, Expect{"cone_twisted_cubic", 1, 2, 2, 2, "II"},
                        Expect{"veronese_proj4", 1, 4, 6, 3, "II"}, Expect{"delpezzo4", 1, 3, 4, 1, "I"}}) {
    CAPTURE(e.key);
    auto X = build_catalog_variety(e.key, 1, kFp);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto rep = classify_entry_locus(X, seed);
      CHECK(rep.gamma == e.gamma);
      CHECK(rep.ell == e.ell);
      CHECK(rep.degree == e.degree);
      CHECK(rep.components == e.components);
      CHECK(rep.type_irreducibility == e.irr);
      CHECK(rep.degree_formula_ok);
      CHECK(rep.dimension_formula_ok);
      CHECK(!rep.degree_mismatch);
      // report invariants
      CHECK(rep.gamma <= rep.ell);
      CHECK(rep.ell <= X.ambient());
      CHECK(rep.degree >= rep.components);
    }
  }
}

TEST_CASE("type_ab_test") {
  Rng rng(3);
  SUBCASE("scroll12 is of type A") {
    auto X = build_catalog_variety("scroll12", 1, kFp);
    auto G = entry_locus_ideal(X, random_point(5, rng), rng);
    CHECK(type_ab_test(X, G, 3, rng) == TypeAB::A);
  }
  SUBCASE("delpezzo4 is of type B") {
    auto X = build_catalog_variety("delpezzo4", 2, kFp);
    auto G = entry_locus_ideal(X, random_point(5, rng), rng);
    CHECK(type_ab_test(X, G, 3, rng) == TypeAB::B);
  }
  SUBCASE("o = q gives back the same ideal") {
    auto X = build_catalog_variety("delpezzo4", 2, kFp);
    auto q = random_point(5, rng);
    CHECK(same_ideal(entry_locus_ideal(X, q, rng), entry_locus_ideal(X, q, rng)));
  }
}

TEST_CASE("delpezzo4: Gamma_q is the hyperplane section by its span") {
  Rng rng(4);
  auto X = build_catalog_variety("delpezzo4", 3, kFp);
  Ideal<PrimeField> G;
  classify_entry_locus(X, 5, {}, &G);
  auto span = span_info(G, rng);
  REQUIRE(span.ell == 3);
  CHECK(same_reduced_slice(G, restrict_to_span(X.ideal, span), rng));
}

TEST_CASE("property: Gamma_q lies on X, and each of its points has a partner") {
  Rng rng(5);
  for (const char* key : {"scroll12", "cone_twisted_cubic", "veronese_proj4", "delpezzo4"}) {
    CAPTURE(key);
    auto X = build_catalog_variety(key, 1, kFp);
    auto q = random_point(5, rng);
    auto G = entry_locus_ideal(X, q, rng);
    // containment: every generator of I(X) reduces to zero modulo Gamma
    CHECK(ideal_contains(G, X.ideal));
    // witness closure on a zero-dimensional slice
    Ideal<PrimeField> slice = G;
    slice.add(Polynomial<PrimeField>::from_terms(G.ring(), {{Monomial::variable(0), kFp.random(rng)},
                                                            {Monomial::variable(1), kFp.random(rng)},
                                                            {Monomial::variable(4), kFp.random(rng)}}));
    for (const auto& a : projective_rational_points(slice, rng)) {
      // b = a + t q on X for some t != 0: the incidence at a is non-empty
      auto J = decomposition_incidence(X, q);
      Ideal<PrimeField> at = J;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          at.add(Polynomial<PrimeField>::variable(J.ring(), i + 1).scaled(a[j]) -
                 Polynomial<PrimeField>::variable(J.ring(), j + 1).scaled(a[i]));
      CHECK(!hilbert_invariants(at).empty());
    }
  }
}

TEST_CASE("property: invariants are stable across q-seeds") {
  for (const char* key : {"scroll12", "delpezzo4"}) {
    CAPTURE(key);
    auto X = build_catalog_variety(key, 4, kFp);
    auto first = classify_entry_locus(X, 1);
    for (std::uint64_t seed = 2; seed <= 5; ++seed) {
      auto rep = classify_entry_locus(X, seed);
      CHECK(rep.gamma == first.gamma);
      CHECK(rep.ell == first.ell);
      CHECK(rep.degree == first.degree);
      CHECK(rep.components == first.components);
      CHECK(rep.type_irreducibility == first.type_irreducibility);
      CHECK(rep.type_ab == first.type_ab);
    }
  }
}

TEST_CASE("property: plane models have no zero-dimensional components") {
  Rng rng(6);
  auto X = build_catalog_variety("veronese_proj4", 2, kFp);
  auto G = entry_locus_ideal(X, random_point(5, rng), rng);
  auto degs = curve_components(G, rng).degrees;
  long long total = 0;
  for (int d : degs) {
    CHECK(d > 0);
    total += d;
  }
  CHECK(total == reduced_dim_degree(G, rng).degree);
}
