// Secant dimensions via Terracini and enumeration of 2-point decompositions.

#include "doctest.h"

#include "el/catalog.hpp"
#include "el/rank_secant.hpp"

using namespace el;

namespace {

const PrimeField kFp(2147483659ULL);

using Row = std::vector<std::uint64_t>;

// Hand-written tangent rows of the Veronese surface (s0^2, s0s1, s0s2, s1^2, s1s2, s2^2).
std::vector<Row> veronese_rows(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto two = [](std::uint64_t v) { return kFp.add(v, v); };
  return {{two(a), b, c, 0, 0, 0}, {0, a, 0, two(b), c, 0}, {0, 0, a, 0, b, two(c)}};
}

// Hand-written tangent rows of the scroll (s0^2, s0s1, s1^2, s0s2, s1s2).
std::vector<Row> scroll_rows(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto two = [](std::uint64_t v) { return kFp.add(v, v); };
  return {{two(a), b, 0, c, 0}, {0, a, two(b), 0, c}, {0, 0, 0, a, b}};
}

std::size_t stacked_rank(const std::vector<std::vector<Row>>& blocks) {
  std::vector<Row> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  return rank(Matrix<PrimeField>::from_rows(kFp, all));
}

Point<PrimeField> add_points(const Point<PrimeField>& a, const Point<PrimeField>& b, std::uint64_t c) {
  Point<PrimeField> q;
  for (std::size_t i = 0; i < a.size(); ++i) q.push_back(kFp.add(a[i], kFp.mul(c, b[i])));
  return q;
}

}  // namespace

TEST_CASE("secant_dims examples") {
  Rng rng(1);
  SUBCASE("rnc4, s = 2") {
    auto p = secant_dims(build_catalog_variety("rnc4", 1, kFp), 2, 3, rng);
    CHECK(p.entries[1].dim == 3);
    CHECK(p.entries[1].expected == 3);
    CHECK(!p.entries[1].defective);
  }
  SUBCASE("veronese5 is 2-defective") {
    auto p = secant_dims(build_catalog_variety("veronese5", 1, kFp), 2, 3, rng);
    CHECK(p.entries[1].dim == 4);
    CHECK(p.entries[1].expected == 5);
    CHECK(p.entries[1].defective);
    // oracle: hand-written Jacobian at two random points has rank 5
    CHECK(stacked_rank({veronese_rows(kFp.random(rng), kFp.random(rng), kFp.random(rng)),
                        veronese_rows(kFp.random(rng), kFp.random(rng), kFp.random(rng))}) == 5);
  }
  SUBCASE("scroll12 fills P^4 at s = 2") {
    auto p = secant_dims(build_catalog_variety("scroll12", 1, kFp), 2, 3, rng);
    CHECK(p.entries[1].dim == 4);
    REQUIRE(p.r_gen);
    CHECK(*p.r_gen == 2);
    CHECK(stacked_rank({scroll_rows(kFp.random(rng), kFp.random(rng), kFp.random(rng)),
                        scroll_rows(kFp.random(rng), kFp.random(rng), kFp.random(rng))}) == 5);
  }
  SUBCASE("rational normal curves") {
    for (int d = 3; d <= 6; ++d) {
      auto p = secant_dims(build_catalog_variety("rnc" + std::to_string(d), 1, kFp), 4, 3, rng);
      for (const auto& e : p.entries) {
        CAPTURE(d);
        CAPTURE(e.s);
        CHECK(e.dim == std::min(2 * e.s - 1, d));
      }
    }
  }
  SUBCASE("implicit varieties use sampled smooth points") {
    auto p = secant_dims(build_catalog_variety("delpezzo4", 3, kFp), 2, 2, rng);
    CHECK(p.entries[0].dim == 2);
    CHECK(p.entries[1].dim == 4);
  }
}

TEST_CASE("property: secant profiles are monotone and bounded") {
  for (const auto& key : catalog_keys()) {
    if (key == "k3_23") continue;
    CAPTURE(key);
    auto X = build_catalog_variety(key, 2, kFp);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Rng rng(seed);
      auto p = secant_dims(X, 3, 2, rng);
      CHECK(p.entries[0].dim == X.meta.n);
      for (std::size_t i = 0; i < p.entries.size(); ++i) {
        CHECK(p.entries[i].dim <= p.entries[i].expected);
        if (i) CHECK(p.entries[i].dim >= p.entries[i - 1].dim);
      }
    }
  }
}

TEST_CASE("two_decompositions") {
  Rng rng(3);
  SUBCASE("rnc3: exactly one pair, recovered exactly") {
    auto X = build_catalog_variety("rnc3", 1, kFp);
    for (int trial = 0; trial < 5; ++trial) {
      auto a = sample_point(X, rng), b = sample_point(X, rng);
      auto q = add_points(a, b, kFp.random(rng));
      auto D = two_decompositions(X, q, rng);
      CHECK(!D.positive_dimensional);
      CHECK(D.pair_count == 1);
      REQUIRE(D.pairs.size() == 1);
      CHECK(((same_point(kFp, D.pairs[0].first, a) && same_point(kFp, D.pairs[0].second, b)) ||
             (same_point(kFp, D.pairs[0].first, b) && same_point(kFp, D.pairs[0].second, a))));
    }
    // a fully random q: the pair may be conjugate over F_p, but the count is still 1
    Point<PrimeField> q;
    for (int i = 0; i < 4; ++i) q.push_back(kFp.random(rng));
    CHECK(two_decompositions(X, q, rng).pair_count == 1);
  }
  SUBCASE("rational quartic: three pairs = nodes of the projection from q") {
    auto X = build_catalog_variety("rational_quartic3", 1, kFp);
    for (int trial = 0; trial < 3; ++trial) {
      Point<PrimeField> q;
      for (int i = 0; i < 4; ++i) q.push_back(kFp.random(rng));
      auto D = two_decompositions(X, q, rng);
      CHECK(D.pair_count == 3);
      for (const auto& [a, b] : D.pairs) CHECK(is_decomposition(X, q, a, b));
      // independent count: singular points of the plane quartic pi_q(X)
      auto img = project_image(X, {q}, rng).image;
      REQUIRE(img.ideal.size() == 1);
      auto f = img.ideal.generators()[0];
      Ideal<PrimeField> sing(img.ring(), {f, f.derivative(0), f.derivative(1), f.derivative(2)});
      CHECK(reduced_dim_degree(sing, rng).degree == D.pair_count);
    }
  }
  SUBCASE("q on the variety is rejected") {
    auto X = build_catalog_variety("rnc3", 1, kFp);
    CHECK_THROWS_AS(two_decompositions(X, sample_point(X, rng), rng), InvalidInput);
  }
}
