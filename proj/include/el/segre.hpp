#pragma once

#include <optional>
#include <string>
#include <vector>

#include "el/entry_locus.hpp"

namespace el {

template <class F>
struct SegreVerdict {
  Point<F> o;
  bool verdict = false;
  long long image_degree = 0;
  long long source_degree = 0;
};

/// o is a Segre point of Y when the projection from o is not birational on Y, detected as a drop
/// of the reduced degree. For a finite Y this says o lies on a line joining two of its points.
template <class F>
SegreVerdict<F> is_segre_point(const Ideal<F>& Y, const Point<F>& o, Rng& rng, const Budget& budget = {}) {
  const auto& K = Y.ring()->field();
  ProjectiveVariety<F> V;
  V.ideal = Y;
  if (V.contains(o)) throw InvalidInput("is_segre_point: o lies on the curve");
  SegreVerdict<F> out;
  out.o = o;
  auto src = reduced_dim_degree(Y, rng, budget);
  if (src.dim < 0) throw InvalidInput("is_segre_point: empty variety");
  auto img = project_ideal(Y, annihilator(K, {o}, Y.ring()->nvars()), rng, budget);
  auto dst = reduced_dim_degree(img, rng, budget);
  out.source_degree = src.degree;
  out.image_degree = dst.degree;
  out.verdict = dst.dim == src.dim && dst.degree < src.degree;
  return out;
}

/// o on the line through a and b, distinct from both.
template <class F>
bool on_secant_line(const F& K, const Point<F>& a, const Point<F>& b, const Point<F>& o) {
  if (same_point(K, a, o) || same_point(K, b, o) || same_point(K, a, b)) return false;
  return rank(Matrix<F>::from_rows(K, {a, b, o})) == 2;
}

template <class F>
struct SegreCount {
  int count = 0;                 // distinct singular members of the pencil
  bool generic = false;          // count == 4
  bool split = false;            // every singular member defined over the base field
  std::vector<Point<F>> vertices;
};

/// Symmetric matrix of a quadratic form (characteristic != 2).
template <class F>
Matrix<F> quadric_matrix(const Polynomial<F>& q) {
  const auto& K = q.field();
  const int n = q.ring()->nvars();
  Matrix<F> S(K, n, n);
  auto half = K.inv(K.from_int(2));
  for (const auto& t : q.terms()) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      for (int e = 0; e < t.m.exp[v]; ++e) vs.push_back(v);
    if (vs.size() != 2) throw InvalidInput("quadric_matrix: not a quadratic form");
    if (vs[0] == vs[1]) {
      S(vs[0], vs[0]) = t.c;
    } else {
      S(vs[0], vs[1]) = K.mul(t.c, half);
      S(vs[1], vs[0]) = S(vs[0], vs[1]);
    }
  }
  return S;
}

/// Binary quartic det(lambda*A + B), dehomogenized at mu = 1, by interpolation; the root
/// lambda = infinity shows up as a degree drop.
template <class F>
UPoly<F> pencil_determinant(const Matrix<F>& A, const Matrix<F>& B) {
  const auto& K = A.field();
  const std::size_t n = A.rows();
  UPoly<F> out(K);
  std::vector<typename F::Element> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    auto lam = K.from_int(static_cast<long long>(t));
    Matrix<F> M(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = K.add(K.mul(lam, A(i, j)), B(i, j));
    xs.push_back(lam);
    ys.push_back(determinant(M));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    UPoly<F> basis = UPoly<F>::constant(K, ys[i]);
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      auto inv = K.inv(K.sub(xs[i], xs[j]));
      basis = basis * UPoly<F>(K, {K.mul(K.neg(xs[j]), inv), inv});
    }
    out = out + basis;
  }
  return out;
}

/// Singular quadrics in the pencil of an elliptic quartic curve in P^3: their number and, when
/// all of them are defined over F_p, their vertices.
template <class F>
SegreCount<F> segre_count_elliptic_quartic(const Ideal<F>& C, Rng& rng, const Budget& budget = {}) {
  const auto& K = C.ring()->field();
  if (C.ring()->nvars() != 4) throw InvalidInput("segre_count_elliptic_quartic: the curve must lie in P^3");
  auto G = groebner_basis(C, MonomialOrder::grevlex(), budget);
  std::vector<Polynomial<F>> quadrics;
  for (const auto& g : G.elements())
    if (g.degree() == 2) quadrics.push_back(g);
  if (quadrics.size() != 2) throw InvalidInput("segre_count_elliptic_quartic: the quadrics do not form a pencil");
  auto A = quadric_matrix(quadrics[0]), B = quadric_matrix(quadrics[1]);
  auto det = pencil_determinant(A, B);
  if (det.is_zero()) throw GenericityFailure("segre_count_elliptic_quartic: every member of the pencil is singular");
  SegreCount<F> out;
  const bool at_infinity = det.degree() < 4;
  out.count = squarefree_part(det).degree() + (at_infinity ? 1 : 0);
  out.generic = out.count == 4;
  if constexpr (std::is_same_v<F, PrimeField>) {
    auto roots = prime_field_roots(squarefree_part(det), rng);
    out.split = static_cast<int>(roots.size()) + (at_infinity ? 1 : 0) == out.count;
    if (out.split && out.generic) {  // vertices only for the four rank-3 cones
      std::vector<Matrix<F>> members;
      for (auto lam : roots) {
        Matrix<F> M(K, 4, 4);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) M(i, j) = K.add(K.mul(lam, A(i, j)), B(i, j));
        members.push_back(M);
      }
      if (at_infinity) members.push_back(A);
      for (const auto& M : members) {
        auto ker = kernel_basis(M).basis;
        if (ker.size() != 1) throw GenericityFailure("segre_count_elliptic_quartic: singular member of corank > 1");
        out.vertices.push_back(normalized(K, ker[0]));
      }
      std::sort(out.vertices.begin(), out.vertices.end());
    }
  }
  return out;
}

struct SplitSearch {
  std::uint64_t prime = 0;
  int count = 0;
  int tried = 0;
};

/// Tries each prime in turn; count_split(K) rebuilds the instance over K and reports
/// (count, split). Stops at the first prime where the singular members are all rational.
template <class Fn>
SplitSearch find_split_prime(const std::vector<std::uint64_t>& primes, Fn&& count_split) {
  SplitSearch out;
  for (auto p : primes) {
    ++out.tried;
    PrimeField K(p);
    auto [count, split] = count_split(K);
    out.count = count;
    if (split) {
      out.prime = p;
      return out;
    }
  }
  return out;
}

/// pi_o(T) inside pi_o(Y) as sets; with `both`, equality of the two images.
template <class F>
bool pair_segre_test(const Ideal<F>& Y, const Ideal<F>& T, const Point<F>& o, Rng& rng, bool both = false,
                     const Budget& budget = {}) {
  const auto& K = Y.ring()->field();
  const std::size_t n = Y.ring()->nvars();
  if (span_dim(intersect(Y, T, budget), rng, budget) != static_cast<int>(n) - 1)
    throw InvalidInput("pair_segre_test: the two curves do not span the ambient space");
  ProjectiveVariety<F> VY, VT;
  VY.ideal = Y;
  VT.ideal = T;
  if (VY.contains(o) || VT.contains(o)) throw InvalidInput("pair_segre_test: o lies on one of the curves");
  auto forms = annihilator(K, {o}, n);
  // image coordinates are the forms themselves, so both images share one plane
  auto target = projective_ring(K, static_cast<int>(n) - 2);
  auto project = [&](const Ideal<F>& I) {
    Ideal<F> out(target);
    auto pi = project_ideal(I, forms, rng, budget);
    for (const auto& g : pi.generators()) out.add(g.reordered(target));
    return out;
  };
  auto pY = project(Y), pT = project(T);
  // the images of reduced curves are reduced, so ideal containment is set containment
  bool t_in_y = ideal_contains(pT, pY, budget);
  if (!both) return t_in_y;
  return t_in_y && ideal_contains(pY, pT, budget);
}

}  // namespace el
