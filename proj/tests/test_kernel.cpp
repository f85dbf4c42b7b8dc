// Algebra kernel: parsing, Gröbner bases, elimination, saturation, Hilbert data,
// linear algebra, squarefree parts and the absolute factor count.

#include <algorithm>

#include "doctest.h"

#include "el/factor.hpp"
#include "el/hilbert.hpp"
#include "el/ideal_ops.hpp"
#include "el/parse.hpp"

using namespace el;

namespace {

const PrimeField kFp(2147483659ULL);  // a prime just above 2^31

template <class F>
Polynomial<F> P(const RingPtr<F>& R, const char* s) {
  return parse_polynomial(s, R);
}

template <class F>
Ideal<F> I(const RingPtr<F>& R, std::initializer_list<const char*> gens) {
  Ideal<F> out(R);
  for (auto g : gens) out.add(parse_polynomial(g, R));
  return out;
}

// Every S-polynomial of basis pairs reduces to zero.
template <class F>
bool spoly_closed(const GroebnerBasis<F>& G) {
  const auto& E = G.elements();
  const auto& K = G.ring()->field();
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      auto l = Monomial::lcm(E[i].lm(), E[j].lm());
      auto s = E[i].times_term(K.one(), l / E[i].lm()) - E[j].times_term(K.one(), l / E[j].lm());
      if (!G.normal_form(s).is_zero()) return false;
    }
  return true;
}

template <class F>
bool is_reduced(const GroebnerBasis<F>& G) {
  const auto& E = G.elements();
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (!E[i].field().is_one(E[i].lc())) return false;
    for (std::size_t j = 0; j < E.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : E[i].terms())
        if (E[j].lm().divides(t.m)) return false;
    }
  }
  return true;
}

// Sylvester resultant of two univariate polynomials given by coefficient lists (high first).
PrimeField::Element sylvester(const PrimeField& K, std::vector<PrimeField::Element> a,
                              std::vector<PrimeField::Element> b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  Matrix<PrimeField> S(K, m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) S(r, r + k) = a[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) S(n + r, r + k) = b[k];
  return determinant(S);
}

}  // namespace

TEST_CASE("parse_polynomial normal form and errors") {
  auto R = make_ring(RationalField{}, indexed_names("x", 3));
  auto f = P(R, "x0^2 - 2*x0*x1 + x1^2");
  CHECK(f.size() == 3);
  CHECK(f.degree() == 2);
  CHECK(P(R, "x0 - x0").is_zero());
  CHECK(P(R, "3/6*x2").to_string() == "1/2*x2");
  CHECK(P(R, "  x0 * x1 ^ 2 + 1 ").size() == 2);
  CHECK(P(R, "-x0 + 3").to_string() == "-x0 + 3");

  auto R7 = make_ring(PrimeField(7), indexed_names("x", 3));
  CHECK_THROWS_AS(P(R7, "3/2*x2"), ParseError);
  CHECK_THROWS_AS(P(R, "x0 + y"), ParseError);
  CHECK_THROWS_AS(P(R, "x0 + "), ParseError);
  CHECK_THROWS_AS(P(R, "2.5*x0"), ParseError);
  try {
    P(R, "x0 + y");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK(P(R7, "8*x0").to_string() == "x0");
}

TEST_CASE("groebner_basis examples") {
  SUBCASE("already a basis") {
    auto R = make_ring(RationalField{}, {"x", "y"});
    auto G = groebner_basis(I(R, {"x"}), MonomialOrder::grevlex());
    REQUIRE(G.size() == 1);
    CHECK(G.elements()[0].to_string() == "x");
  }
  SUBCASE("affine cuspidal cubic by elimination") {
    auto R = make_ring(kFp, {"t", "x", "y"});
    auto E = eliminate(I(R, {"x - t^2", "y - t^3"}), 1);
    REQUIRE(E.size() == 1);
    auto g = E.generators()[0];
    CHECK(g.degree() == 3);
    // substitution oracle: x = t^2, y = t^3 annihilates the eliminant
    auto T = make_ring(kFp, {"t"});
    auto t = Polynomial<PrimeField>::variable(T, 0);
    CHECK(g.substitute(T, {t * t, t * t * t}).is_zero());
    // resultant oracle: Res_t(t^2 - x, t^3 - y) is a constant multiple of g at sampled points
    Rng rng(11);
    PrimeField::Element ratio = 0;
    for (int k = 0; k < 8; ++k) {
      auto xv = kFp.random(rng), yv = kFp.random(rng);
      auto res = sylvester(kFp, {1, 0, kFp.neg(xv)}, {1, 0, 0, kFp.neg(yv)});
      std::vector<PrimeField::Element> pt{xv, yv};
      auto gv = g.evaluate(pt);
      REQUIRE(gv != 0);
      auto r = kFp.div(res, gv);
      if (k == 0) ratio = r;
      CHECK(r == ratio);
    }
  }
  SUBCASE("shape position for circle and line") {
    auto R = make_ring(RationalField{}, {"x", "y"});
    auto G = groebner_basis(I(R, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
    REQUIRE(G.size() == 2);
    std::vector<std::string> lms;
    for (const auto& g : G.elements()) lms.push_back(Polynomial<RationalField>::term(G.ring(), 1, g.lm()).to_string());
    CHECK(std::find(lms.begin(), lms.end(), "x") != lms.end());
    CHECK(std::find(lms.begin(), lms.end(), "y^2") != lms.end());
    // hand substitution: x = y, 2y^2 = 1 gives two solutions
    CHECK(G.contains(P(R, "y^2 - 1/2")));
    CHECK(G.contains(P(R, "x - y")));
  }
  SUBCASE("unit ideal") {
    auto R = make_ring(kFp, {"x", "y"});
    auto G = groebner_basis(I(R, {"x*y - 1", "x"}), MonomialOrder::grevlex());
    CHECK(G.is_unit());
  }
  SUBCASE("budget exhaustion is an error, not an answer") {
    auto R = make_ring(kFp, indexed_names("x", 4));
    Budget tiny;
    tiny.max_pairs = 2;
    auto J = I(R, {"x0^3 - x1*x2*x3", "x1^3 - x0*x2^2", "x2^3 - x0^2*x3 + x1", "x3^2 - x0*x1"});
    CHECK_THROWS_AS(groebner_basis(J, MonomialOrder::grevlex(), tiny), BudgetExceeded);
  }
}

TEST_CASE("normal_form") {
  auto R = make_ring(RationalField{}, {"x", "y"});
  auto G = groebner_basis(I(R, {"x"}), MonomialOrder::grevlex());
  CHECK(G.normal_form(P(R, "x^2")).is_zero());
  CHECK(G.normal_form(P(R, "y")).to_string() == "y");

  auto R3 = make_ring(RationalField{}, {"t", "x", "y"});
  auto H = groebner_basis(I(R3, {"x - t^2", "y - t^3"}), MonomialOrder::block(1));
  CHECK(H.normal_form(P(R3, "y^2 - x^3")).is_zero());

  auto other = make_ring(RationalField{}, {"a", "b"});
  CHECK_THROWS_AS(G.normal_form(P(other, "a")), RingMismatch);
}

TEST_CASE("eliminate") {
  auto R = make_ring(kFp, {"t", "x", "y"});
  auto J = I(R, {"x - t^2", "y - t^3"});
  auto k0 = eliminate(J, 0);
  CHECK(same_ideal(k0, J));

  SUBCASE("twisted cubic from 2x2 minors with parameter saturation") {
    auto S = make_ring(kFp, {"s", "u", "y0", "y1", "y2", "y3"});
    const char* param[4] = {"s^3", "s^2*u", "s*u^2", "u^3"};
    Ideal<PrimeField> minors(S);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        auto yi = Polynomial<PrimeField>::variable(S, 2 + i), yj = Polynomial<PrimeField>::variable(S, 2 + j);
        minors.add(yi * P(S, param[j]) - yj * P(S, param[i]));
      }
    Ideal<PrimeField> irr(S, {P(S, "s"), P(S, "u")});
    auto sat = saturate(minors, irr);
    auto E = eliminate(sat, 2);
    REQUIRE(E.size() == 3);
    auto T = make_ring(kFp, {"s", "u"});
    std::vector<Polynomial<PrimeField>> phi;
    for (auto p : param) phi.push_back(P(T, p));
    for (const auto& g : E.generators()) {
      CHECK(g.degree() == 2);
      CHECK(g.substitute(T, phi).is_zero());
    }
    // 10 sampled curve points: the quadrics vanishing on them form a 3-dimensional space
    Rng rng(5);
    Matrix<PrimeField> M(kFp, 10, 10);
    for (int r = 0; r < 10; ++r) {
      auto s = kFp.random(rng), u = kFp.random(rng);
      std::vector<PrimeField::Element> y{kFp.pow(s, 3), kFp.mul(kFp.mul(s, s), u), kFp.mul(s, kFp.mul(u, u)), kFp.pow(u, 3)};
      int c = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) M(r, c++) = kFp.mul(y[i], y[j]);
    }
    CHECK(kernel_basis(M).basis.size() == 3);
  }
}

TEST_CASE("saturate examples") {
  auto R = make_ring(RationalField{}, {"x", "y", "z"});
  auto G = [&](const Ideal<RationalField>& J) { return groebner_basis(J, MonomialOrder::grevlex()); };
  auto s1 = saturate(I(R, {"x*y"}), I(R, {"x"}));
  CHECK(same_ideal(s1, I(R, {"y"})));
  auto s2 = saturate(I(R, {"x^2"}), I(R, {"x"}));
  CHECK(G(s2).is_unit());
  auto s3 = saturate(I(R, {"x*z", "y*z"}), I(R, {"z"}));
  CHECK(same_ideal(s3, I(R, {"x", "y"})));
  // variable and irrelevant fast paths agree with the generic route
  auto Rp = make_ring(kFp, {"x", "y", "z"});
  auto J = I(Rp, {"x^2*z", "x*y*z", "y^3"});
  CHECK(same_ideal(saturate_by_variable(J, 2), saturate(J, I(Rp, {"z"}))));
  Rng rng(3);
  auto K = I(Rp, {"x^2", "x*y", "x*z^2", "y^3*z"});
  CHECK(same_ideal(saturate_irrelevant(K, rng), saturate(K, irrelevant_ideal(Rp))));
}

TEST_CASE("hilbert_invariants examples") {
  auto R = make_ring(kFp, indexed_names("x", 4));
  SUBCASE("twisted cubic") {
    auto tc = I(R, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
    auto h = hilbert_invariants(tc);
    CHECK(h.projective_dim == 1);
    CHECK(h.degree == 3);
    CHECK(h.arithmetic_genus() == 0);
    // slicing oracle: a random hyperplane pulled back along (s^3, s^2u, su^2, u^3) is a binary cubic
    // with 3 distinct roots
    Rng rng(9);
    std::vector<PrimeField::Element> c(4);
    for (auto& v : c) v = kFp.random(rng);
    UPoly<PrimeField> cubic(kFp, {c[3], c[2], c[1], c[0]});  // chart u = 1
    CHECK(distinct_root_count(cubic) == 3);
  }
  SUBCASE("complete intersection of two quadrics") {
    auto ci = I(R, {"x0^2 + x1^2 - x2*x3", "x0*x1 + 2*x2^2 - x3^2 + x0*x3"});
    auto h = hilbert_invariants(ci);
    // Koszul oracle: (1 - t^2)^2 / (1 - t)^4 = (1 + t)^2 / (1 - t)^2
    std::vector<long long> koszul{1, 2, 1};
    CHECK(h.numerator == koszul);
    CHECK(h.projective_dim == 1);
    CHECK(h.degree == 4);
    CHECK(h.arithmetic_genus() == 1);
    CHECK(h.hilbert_polynomial_coefficients() == std::vector<std::string>{"0", "4"});
  }
  SUBCASE("irrelevant ideal is empty") {
    auto h = hilbert_invariants(irrelevant_ideal(R));
    CHECK(h.empty());
    CHECK(h.degree == 0);
  }
  SUBCASE("non-homogeneous input rejected") {
    CHECK_THROWS_AS(hilbert_invariants(I(R, {"x0 - 1"})), InvalidInput);
  }
}

TEST_CASE("kernel_basis examples") {
  RationalField Q;
  auto id = Matrix<RationalField>::identity(Q, 3);
  auto k1 = kernel_basis(id);
  CHECK(k1.basis.empty());
  CHECK(k1.rank == 3);
  Matrix<RationalField> zero(Q, 2, 4);
  auto k2 = kernel_basis(zero);
  CHECK(k2.basis.size() == 4);
  CHECK(k2.rank == 0);
  auto m = Matrix<RationalField>::from_rows(Q, {{1, 2}, {2, 4}});
  auto k3 = kernel_basis(m);
  CHECK(k3.rank == 1);
  REQUIRE(k3.basis.size() == 1);
  // proportional to (2, -1)
  CHECK(k3.basis[0][0] * -1 == k3.basis[0][1] * 2);
}

TEST_CASE("squarefree_part examples") {
  auto R = make_ring(RationalField{}, {"x", "y"});
  auto f = P(R, "x - y");
  auto g = P(R, "x + y");
  auto sq = squarefree_part(f * f * g);
  CHECK(sq == (f * g).monic());
  CHECK(squarefree_part(f * g) == (f * g).monic());
  CHECK(squarefree_part(P(R, "x^4 - 2*x^2*y^2 + y^4")) == P(R, "x^2 - y^2"));
  auto R5 = make_ring(PrimeField(5), {"x", "y"});
  CHECK_THROWS_AS(squarefree_part(P(R5, "x^5 + y")), InvalidInput);
}

TEST_CASE("absolute_factor_count examples") {
  auto R = make_ring(RationalField{}, {"x", "y"});
  Rng rng(1);
  CHECK(absolute_factor_count(P(R, "x^2 - y^2"), rng) == 2);
  CHECK(absolute_factor_count(P(R, "x^2 + y^2"), rng) == 2);
  CHECK(absolute_factor_count(P(R, "y^2 - x^3 + x"), rng) == 1);
  CHECK_THROWS_AS(absolute_factor_count(P(R, "x^2 - 2*x*y + y^2"), rng), InvalidInput);
  // a factor independent of x is handled by shearing
  CHECK(absolute_factor_count(P(R, "y^2 - 1"), rng) == 2);
  CHECK(absolute_factor_count(P(R, "x*y^2 - x"), rng) == 3);

  SUBCASE("smoothness oracle for y^2 - x^3 + x") {
    // the projective closure is a smooth plane cubic, hence irreducible
    auto H = make_ring(RationalField{}, {"x", "y", "z"});
    auto F = P(H, "y^2*z - x^3 + x*z^2");
    Ideal<RationalField> sing(H, {F, F.derivative(0), F.derivative(1), F.derivative(2)});
    CHECK(hilbert_invariants(sing).empty());
  }
  SUBCASE("field too small") {
    auto R5 = make_ring(PrimeField(5), {"x", "y"});
    CHECK_THROWS_AS(absolute_factor_count(P(R5, "x^3 + y^3 + 1"), rng), InvalidInput);
  }
}

namespace {

template <class F>
std::vector<Polynomial<F>> random_linear_change(const RingPtr<F>& R, Rng& rng) {
  const auto& K = R->field();
  const int n = R->nvars();
  for (;;) {
    Matrix<F> M(K, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = K.random_small(rng, 20);
    if (K.is_zero(determinant(M))) continue;
    std::vector<Polynomial<F>> images;
    for (int i = 0; i < n; ++i) {
      Polynomial<F> li(R);
      for (int j = 0; j < n; ++j) li += Polynomial<F>::variable(R, j).scaled(M(i, j));
      images.push_back(li);
    }
    return images;
  }
}

template <class F>
Ideal<F> changed(const Ideal<F>& I, const std::vector<Polynomial<F>>& images) {
  Ideal<F> out(I.ring());
  for (const auto& g : I.generators()) out.add(g.substitute(I.ring(), images));
  return out;
}

const std::vector<std::vector<const char*>> kSampleIdeals = {
    {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"},
    {"x0^2 + x1^2 - x2*x3", "x0*x1 + 2*x2^2 - x3^2 + x0*x3"},
    {"x0^3 - x1*x2*x3", "x1^2*x0 - x2^3 + x3^3"},
    {"x0*x1", "x1*x2", "x2*x3", "x3*x0"},
    {"x0^2 - x1*x3", "x1^3 - 2*x0*x2*x3 + x3^3", "x2^2*x1 - x0^3"},
};

}  // namespace

TEST_CASE("irreducible_factors over F_p") {
  Rng rng(21);
  // p = 3 mod 4, so x^2 + 1 is irreducible
  UPoly<PrimeField> lin(kFp, {kFp.neg(1), 1}), quad(kFp, {1, 0, 1}), other(kFp, {5, 0, 1});
  auto f = lin * quad * other * UPoly<PrimeField>(kFp, {kFp.neg(7), 1});
  auto fs = irreducible_factors(f, rng);
  UPoly<PrimeField> prod = UPoly<PrimeField>::constant(kFp, 1);
  std::vector<int> degs;
  for (const auto& g : fs) {
    prod = prod * g;
    degs.push_back(g.degree());
    if (g.degree() > 1) CHECK(prime_field_roots(g, rng).empty());
  }
  std::sort(degs.begin(), degs.end());
  CHECK(prod.monic().coeffs() == f.monic().coeffs());
  CHECK(degs.size() == 4);
  CHECK(degs[0] + degs[1] + degs[2] + degs[3] == 6);
  CHECK(std::count(degs.begin(), degs.end(), 1) == 2);
}

TEST_CASE("absolute_component_degrees examples") {
  Rng rng(22);
  auto R = make_ring(kFp, {"x", "y"});
  CHECK(absolute_component_degrees(P(R, "x^3 - y^3 + x"), rng) == std::vector<int>{3});
  // p = 1 mod 3: three rational lines
  CHECK(absolute_component_degrees(P(R, "x^3 - y^3"), rng) == std::vector<int>{1, 1, 1});
  // conjugate lines over F_{p^2}
  CHECK(absolute_component_degrees(P(R, "x^2 + y^2"), rng) == std::vector<int>{1, 1});
  CHECK(absolute_component_degrees(P(R, "x^4 + 2*x^2 + 1 + y^4"), rng) == std::vector<int>{2, 2});
  CHECK(absolute_component_degrees(P(R, "x + 1") * P(R, "x^2 + y^2 - y + 2"), rng) == std::vector<int>{1, 2});
  // oracle: counts agree with absolute_factor_count on random products
  for (int trial = 0; trial < 5; ++trial) {
    auto a = P(R, "x^2 + 3*y^2 - 1").scaled(kFp.random(rng)) + P(R, "x*y").scaled(kFp.random(rng));
    auto b = P(R, "x + y") + P(R, "y").scaled(kFp.random(rng)) + P(R, "1").scaled(kFp.random(rng));
    auto degs = absolute_component_degrees(a * b, rng);
    CHECK(static_cast<int>(degs.size()) == absolute_factor_count(a * b, rng));
    CHECK(degs == std::vector<int>{1, 2});
  }
}

TEST_CASE("property: every basis is reduced and S-polynomial closed") {
  auto R = make_ring(kFp, indexed_names("x", 4));
  for (const auto& gens : kSampleIdeals)
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
      Ideal<PrimeField> J(R);
      for (auto g : gens) J.add(P(R, g));
      auto G = groebner_basis(J, order);
      CHECK(G.size() <= 30);
      CHECK(spoly_closed(G));
      CHECK(is_reduced(G));
      for (const auto& g : J.generators()) CHECK(G.contains(g));
    }
}

TEST_CASE("property: normal_form is idempotent") {
  auto R = make_ring(kFp, indexed_names("x", 4));
  Rng rng(21);
  for (const auto& gens : kSampleIdeals) {
    Ideal<PrimeField> J(R);
    for (auto g : gens) J.add(P(R, g));
    auto G = groebner_basis(J, MonomialOrder::grevlex());
    for (int k = 0; k < 5; ++k) {
      std::vector<Polynomial<PrimeField>::Term> terms;
      for (int t = 0; t < 6; ++t) {
        std::vector<int> e(4);
        for (auto& x : e) x = static_cast<int>(rng() % 4);
        terms.push_back({Monomial::from_exponents(e), kFp.random(rng)});
      }
      auto f = Polynomial<PrimeField>::from_terms(R, terms);
      auto nf = G.normal_form(f);
      CHECK(G.normal_form(nf) == nf);
      CHECK(G.contains(f - nf));
    }
  }
}

TEST_CASE("property: eliminants lie in the ideal") {
  auto R = make_ring(kFp, {"s", "t", "y0", "y1", "y2", "y3"});
  auto J = I(R, {"y0 - s^3", "y1 - s^2*t", "y2 - s*t^2 + s", "y3 - t^3 + s*t"});
  auto full = groebner_basis(J, MonomialOrder::grevlex());
  for (int k : {1, 2}) {
    auto E = eliminate(J, k);
    CHECK(E.size() > 0);
    for (const auto& g : E.generators()) {
      std::vector<int> map;
      for (int i = 0; i < E.ring()->nvars(); ++i) map.push_back(i + k);
      auto back = g.in_ring(R, map);
      CHECK(full.contains(back));
      for (int v = 0; v < k; ++v) CHECK(!back.uses_variable(v));
    }
  }
}

TEST_CASE("property: saturation contains I and is idempotent") {
  auto R = make_ring(kFp, indexed_names("x", 4));
  const std::vector<std::pair<std::vector<const char*>, std::vector<const char*>>> cases = {
      {{"x0*x1", "x0*x2^2"}, {"x0"}},
      {{"x0^2*x3", "x1*x3^2", "x2^3 - x0*x1*x3"}, {"x3"}},
      {{"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3^2 - x1*x2*x3"}, {"x2", "x3"}},
  };
  for (const auto& [gi, gj] : cases) {
    Ideal<PrimeField> A(R);
    for (auto g : gi) A.add(P(R, g));
    Ideal<PrimeField> B(R);
    for (auto g : gj) B.add(P(R, g));
    auto S = saturate(A, B);
    CHECK(ideal_contains(S, A));
    CHECK(same_ideal(saturate(S, B), S));
  }
}

TEST_CASE("property: Hilbert data is invariant under linear coordinate changes") {
  auto R = make_ring(kFp, indexed_names("x", 4));
  Rng rng(33);
  for (const auto& gens : kSampleIdeals) {
    Ideal<PrimeField> J(R);
    for (auto g : gens) J.add(P(R, g));
    auto h = hilbert_invariants(J);
    for (int trial = 0; trial < 3; ++trial) {
      auto h2 = hilbert_invariants(changed(J, random_linear_change(R, rng)));
      CHECK(h2.projective_dim == h.projective_dim);
      CHECK(h2.degree == h.degree);
      CHECK(h2.hilbert_polynomial_coefficients() == h.hilbert_polynomial_coefficients());
    }
  }
}

TEST_CASE("property: Hilbert data agrees between Q and two large primes") {
  auto RQ = make_ring(RationalField{}, indexed_names("x", 4));
  auto primes = primes_near_2_31(2);
  for (const auto& gens : kSampleIdeals) {
    Ideal<RationalField> JQ(RQ);
    for (auto g : gens) JQ.add(P(RQ, g));
    auto hq = hilbert_invariants(JQ);
    for (auto p : primes) {
      REQUIRE(p > (1ULL << 30));
      auto Rp = make_ring(PrimeField(p), indexed_names("x", 4));
      Ideal<PrimeField> Jp(Rp);
      for (const auto& g : JQ.generators()) Jp.add(parse_polynomial(g.to_string(), Rp));
      auto hp = hilbert_invariants(Jp);
      CHECK(hp.projective_dim == hq.projective_dim);
      CHECK(hp.degree == hq.degree);
      CHECK(hp.numerator == hq.numerator);
    }
  }
}

TEST_CASE("property: absolute factor count is affine invariant") {
  auto R = make_ring(kFp, {"x", "y"});
  Rng rng(44);
  const std::vector<std::pair<const char*, int>> cases = {
      {"x^2 - y^2", 2}, {"x^2 + y^2", 2}, {"y^2 - x^3 + x", 1},
      {"x^2 + y^2 - 1", 1}, {"x^3 - y^3", 3}, {"x^2*y + x*y^2 - x*y", 3}};
  for (const auto& [text, expected] : cases) {
    auto f = P(R, text);
    CHECK(absolute_factor_count(f, rng) == expected);
    for (int trial = 0; trial < 3; ++trial) {
      PrimeField::Element a, b, d, e;
      do {
        a = kFp.random_small(rng, 50), b = kFp.random_small(rng, 50);
        d = kFp.random_small(rng, 50), e = kFp.random_small(rng, 50);
      } while (kFp.is_zero(kFp.sub(kFp.mul(a, e), kFp.mul(b, d))));
      auto X = Polynomial<PrimeField>::variable(R, 0), Y = Polynomial<PrimeField>::variable(R, 1);
      auto one = Polynomial<PrimeField>::constant(R, kFp.one());
      std::vector<Polynomial<PrimeField>> images{
          X.scaled(a) + Y.scaled(b) + one.scaled(kFp.random_small(rng, 50)),
          X.scaled(d) + Y.scaled(e) + one.scaled(kFp.random_small(rng, 50))};
      auto scale = kFp.random_small(rng, 50);
      if (kFp.is_zero(scale)) scale = kFp.one();
      auto g = f.substitute(R, images).scaled(scale);
      CHECK(absolute_factor_count(g, rng) == expected);
    }
  }
}
