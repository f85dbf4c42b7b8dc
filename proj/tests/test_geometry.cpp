// Catalog construction, implicitization, projections, cones, slicing, spans, sampling, file format.

#include <sstream>

#include "doctest.h"

#include "el/catalog.hpp"
#include "el/variety_io.hpp"

using namespace el;

namespace {

const PrimeField kFp(2147483659ULL);

bool vanishes_at_samples(const ProjectiveVariety<PrimeField>& X, int count, Rng& rng) {
  for (int k = 0; k < count; ++k)
    if (!X.contains(sample_point(X, rng))) return false;
  return true;
}

// Rank of the symmetric matrix of a quadratic form (char != 2).
std::size_t quadric_rank(const Polynomial<PrimeField>& q) {
  const int n = q.ring()->nvars();
  Matrix<PrimeField> H(kFp, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) H(i, j) = q.derivative(i).derivative(j).evaluate(std::vector<std::uint64_t>(n, 0));
  return rank(H);
}

}  // namespace

TEST_CASE("catalog entries: ideal vanishes on the parametrization and matches metadata") {
  Rng rng(1);
  for (const auto& key : catalog_keys()) {
    if (key == "k3_23") continue;  // covered in the slow suite
    CAPTURE(key);
    auto X = build_catalog_variety(key, 17, kFp);
    auto h = hilbert_invariants(X.ideal);
    CHECK(h.projective_dim == X.meta.n);
    CHECK(h.degree == X.meta.d);
    if (X.param) CHECK(vanishes_at_samples(X, 20, rng));
    if (X.meta.n == 1) CHECK(h.arithmetic_genus() == X.meta.g);
    if (X.meta.n == 2 && X.ambient() == 4) {
      auto sec = hyperplane_section_invariants(X.ideal, rng);
      CHECK(sec.projective_dim == 1);
      CHECK(sec.arithmetic_genus() == X.meta.g);
    }
    CHECK(span_dim(X.ideal, rng) == X.ambient());
  }
}

TEST_CASE("catalog examples") {
  Rng rng(2);
  SUBCASE("scroll12 is cut out by three 2x2 minors") {
    auto X = build_catalog_variety("scroll12", 1, kFp);
    CHECK(X.ambient() == 4);
    CHECK(X.ideal.size() == 3);
    for (const auto& g : X.ideal.generators()) CHECK(g.degree() == 2);
    CHECK(hilbert_invariants(X.ideal).degree == 3);
  }
  SUBCASE("delpezzo4 has a genus one hyperplane section") {
    auto X = build_catalog_variety("delpezzo4", 5, kFp);
    auto h = hilbert_invariants(X.ideal);
    CHECK(h.projective_dim == 2);
    CHECK(h.degree == 4);
    CHECK(hyperplane_section_invariants(X.ideal, rng).arithmetic_genus() == 1);
  }
  SUBCASE("rnc3 against an independent slicing oracle") {
    auto X = build_catalog_variety("rnc3", 1, kFp);
    auto h = hilbert_invariants(X.ideal);
    CHECK(h.projective_dim == 1);
    CHECK(h.degree == 3);
    CHECK(h.arithmetic_genus() == 0);
    // hyperplane sum c_i x_i pulled back along (s^3, s^2 t, s t^2, t^3), chart s = 1
    std::vector<std::uint64_t> c(4);
    for (auto& v : c) v = kFp.random(rng);
    UPoly<PrimeField> pulled(kFp, {c[0], c[1], c[2], c[3]});
    CHECK(distinct_root_count(pulled) == 3);
  }
  SUBCASE("same seed, same instance; unknown key rejected") {
    auto a = build_catalog_variety("delpezzo4", 9, kFp), b = build_catalog_variety("delpezzo4", 9, kFp);
    CHECK(same_ideal(a.ideal, b.ideal));
    CHECK_THROWS_AS(build_catalog_variety("rnc9", 1, kFp), InvalidInput);
    CHECK_THROWS_AS(build_catalog_variety("torus", 1, kFp), InvalidInput);
  }
}

TEST_CASE("implicitize") {
  Rng rng(3);
  SUBCASE("Veronese conic") {
    auto P = detail::monomial_param(kFp, {"s", "t"}, {"s^2", "s*t", "t^2"});
    auto I = implicitize(P);
    REQUIRE(I.size() == 1);
    CHECK(I.generators()[0].monic() == parse_polynomial("x0*x2 - x1^2", I.ring()).monic());
  }
  SUBCASE("twisted cubic: substitution and 10-point oracle") {
    auto P = detail::monomial_param(kFp, {"s", "t"}, {"s^3", "s^2*t", "s*t^2", "t^3"});
    auto I = implicitize(P);
    CHECK(I.size() == 3);
    for (const auto& g : I.generators()) {
      CHECK(g.degree() == 2);
      CHECK(g.substitute(P.params, P.forms).is_zero());
    }
    Matrix<PrimeField> M(kFp, 10, 10);
    for (int r = 0; r < 10; ++r) {
      auto y = P.evaluate({kFp.random(rng), kFp.random(rng)});
      int col = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) M(r, col++) = kFp.mul(y[i], y[j]);
    }
    CHECK(kernel_basis(M).basis.size() == 3);
  }
  SUBCASE("Veronese surface: six quadrics") {
    auto V = build_catalog_variety("veronese5", 1, kFp);
    auto I = implicitize(*V.param);
    CHECK(I.size() == 6);
    for (const auto& g : I.generators()) {
      CHECK(g.degree() == 2);
      CHECK(g.substitute(V.param->params, V.param->forms).is_zero());
    }
    CHECK(same_ideal(I, V.ideal));
  }
}

TEST_CASE("project_image") {
  Rng rng(4);
  SUBCASE("Veronese surface from a general point") {
    auto X = build_catalog_variety("veronese_proj4", 7, kFp);
    CHECK(X.ambient() == 4);
    auto h = hilbert_invariants(X.ideal);
    CHECK(h.projective_dim == 2);
    CHECK(h.degree == 4);
    CHECK(vanishes_at_samples(X, 10, rng));
  }
  SUBCASE("twisted cubic from a general point is a plane cubic") {
    auto C = build_catalog_variety("rnc3", 1, kFp);
    Point<PrimeField> o;
    for (int i = 0; i < 4; ++i) o.push_back(kFp.random(rng));
    auto img = project_image(C, {o}, rng, true).image;
    CHECK(img.ambient() == 2);
    REQUIRE(img.ideal.size() == 1);
    CHECK(img.ideal.generators()[0].degree() == 3);
    CHECK(vanishes_at_samples(img, 10, rng));
    // nodal: exactly one singular point
    auto f = img.ideal.generators()[0];
    Ideal<PrimeField> sing(img.ring(), {f, f.derivative(0), f.derivative(1), f.derivative(2)});
    CHECK(reduced_dim_degree(sing, rng) == DimDegree{0, 1});
  }
  SUBCASE("center on the variety is rejected") {
    auto C = build_catalog_variety("rnc3", 1, kFp);
    auto p = sample_point(C, rng);
    CHECK_THROWS_AS(project_image(C, {p}, rng, true), InvalidInput);
  }
}

TEST_CASE("cone_over") {
  Rng rng(5);
  auto C = build_catalog_variety("rnc3", 1, kFp);
  auto K = cone_over(C);
  auto h = hilbert_invariants(K.ideal);
  CHECK(h.projective_dim == 2);
  CHECK(h.degree == 3);
  CHECK(K.contains({0, 0, 0, 0, 1}));
  CHECK(vanishes_at_samples(K, 10, rng));

  auto conic = materialize(VarietyText{{"x0", "x1", "x2"}, FieldDescriptor::modular(kFp.characteristic()), {}, {"x0*x2 - x1^2"}, {}, {}}, kFp);
  auto qc = cone_over(conic);
  REQUIRE(qc.ideal.size() == 1);
  CHECK(quadric_rank(qc.ideal.generators()[0]) == 3);
  CHECK(qc.contains({0, 0, 0, 1}));
}

TEST_CASE("reduced_dim_degree") {
  Rng rng(6);
  auto C = build_catalog_variety("rnc3", 1, kFp);
  CHECK(reduced_dim_degree(C.ideal, rng) == DimDegree{1, 3});
  auto R = projective_ring(kFp, 2);
  Ideal<PrimeField> dbl(R, {parse_polynomial("x0^2", R)});
  CHECK(hilbert_invariants(dbl).degree == 2);
  CHECK(reduced_dim_degree(dbl, rng) == DimDegree{1, 1});
  auto D = build_catalog_variety("delpezzo4", 3, kFp);
  CHECK(reduced_dim_degree(D.ideal, rng) == DimDegree{2, 4});
}

TEST_CASE("span_dim") {
  Rng rng(7);
  CHECK(span_dim(build_catalog_variety("rnc3", 1, kFp).ideal, rng) == 3);
  auto R3 = projective_ring(kFp, 3);
  Ideal<PrimeField> two_points(R3, {parse_polynomial("x2", R3), parse_polynomial("x3", R3), parse_polynomial("x0*x1", R3)});
  CHECK(span_dim(two_points, rng) == 1);
  auto R4 = projective_ring(kFp, 4);
  Ideal<PrimeField> plane_conic(R4, {parse_polynomial("x3", R4), parse_polynomial("x4", R4), parse_polynomial("x0*x2 - x1^2", R4)});
  auto info = span_info(plane_conic, rng);
  CHECK(info.ell == 2);
  CHECK(info.points.size() == 3);
  // spanning points satisfy the linear forms
  for (const auto& p : info.points)
    for (const auto& l : info.linear_forms) CHECK(l.evaluate(p) == 0);
}

TEST_CASE("sample_point") {
  auto C = build_catalog_variety("rnc3", 1, kFp);
  CHECK(C.param->evaluate({1, 2}) == Point<PrimeField>{1, 2, 4, 8});
  Rng a(1), b(2);
  auto p = sample_point(C, a), q = sample_point(C, b);
  CHECK(C.contains(p));
  CHECK(C.contains(q));
  CHECK(!same_point(kFp, p, q));
  Rng rng(8);
  auto D = build_catalog_variety("delpezzo4", 3, kFp);
  for (int k = 0; k < 3; ++k) CHECK(D.contains(sample_point_implicit(D.ideal, 2, rng)));
}

TEST_CASE("property: projection degree law and cone degree law") {
  Rng rng(9);
  for (const char* key : {"rnc3", "rational_quartic3", "elliptic4"}) {
    CAPTURE(key);
    auto C = build_catalog_variety(key, 11, kFp);
    Point<PrimeField> o;
    for (int i = 0; i < 4; ++i) o.push_back(kFp.random(rng));
    auto img = project_image(C, {o}, rng).image;
    CHECK(reduced_dim_degree(img.ideal, rng) == DimDegree{1, C.meta.d});
    auto K = cone_over(C);
    auto h = hilbert_invariants(K.ideal);
    CHECK(h.degree == C.meta.d);
    CHECK(h.projective_dim == 2);
  }
}

TEST_CASE("variety file format round trip") {
  auto X = build_catalog_variety("scroll12", 1, kFp);
  auto text = write_variety_text(to_text(X));
  std::istringstream in(text);
  auto t = read_variety_text(in);
  CHECK(t.field == FieldDescriptor::modular(kFp.characteristic()));
  CHECK(t.meta.d == 3);
  CHECK(t.meta.n == 2);
  auto Y = materialize(t, kFp);
  CHECK(same_ideal(X.ideal, Y.ideal));
  REQUIRE(Y.param);
  CHECK(Y.param->forms.size() == 5);

  std::istringstream bad("ring x0 x1 over Q\nfoo: 1\n");
  CHECK_THROWS_AS(read_variety_text(bad), ParseError);
  std::istringstream autop("ring x0 x1 over fp:auto\n");
  CHECK_THROWS_AS(read_variety_text(autop), ParseError);
}
