#pragma once

#include <string>
#include <vector>

#include "el/geometry.hpp"
#include "el/parse.hpp"

namespace el {

/// Keys accepted by build_catalog_variety.
std::vector<std::string> catalog_keys();

/// Expected (n, d, g) for a catalog key; throws InvalidInput for unknown keys.
VarietyMeta catalog_meta(const std::string& key);

namespace detail {

/// Integer data of height <= 1000, so every field sees the same instance.
inline long long catalog_int(Rng& rng) { return static_cast<long long>(rng() % 2001) - 1000; }

template <class F>
Polynomial<F> random_form(const RingPtr<F>& R, int degree, Rng& rng) {
  const auto& K = R->field();
  const int n = R->nvars();
  std::vector<typename Polynomial<F>::Term> terms;
  std::vector<int> e(n, 0);
  // enumerate exponent vectors of the given degree
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[var] = left;
      terms.push_back({Monomial::from_exponents(e), K.from_int(catalog_int(rng))});
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
  };
  rec(rec, 0, degree);
  return Polynomial<F>::from_terms(R, std::move(terms));
}

template <class F>
Ideal<F> minors_2x2(const RingPtr<F>& R, const std::vector<std::vector<int>>& rows_of_vars) {
  Ideal<F> I(R);
  const auto& a = rows_of_vars[0];
  const auto& b = rows_of_vars[1];
  auto x = [&](int i) { return Polynomial<F>::variable(R, i); };
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) I.add(x(a[i]) * x(b[j]) - x(a[j]) * x(b[i]));
  return I;
}

template <class F>
Parametrization<F> monomial_param(const F& K, const std::vector<std::string>& names, const std::vector<std::string>& forms) {
  Parametrization<F> P{make_ring(K, names, MonomialOrder::grevlex()), {}};
  for (const auto& f : forms) P.forms.push_back(parse_polynomial(f, P.params));
  return P;
}

template <class F>
ProjectiveVariety<F> rnc(const F& K, int d) {
  auto R = projective_ring(K, d);
  std::vector<int> top, bottom;
  for (int i = 0; i < d; ++i) {
    top.push_back(i);
    bottom.push_back(i + 1);
  }
  ProjectiveVariety<F> X;
  X.ideal = minors_2x2(R, {top, bottom});
  std::vector<std::string> forms;
  for (int i = 0; i <= d; ++i)
    forms.push_back("s^" + std::to_string(d - i) + "*t^" + std::to_string(i));
  X.param = monomial_param(K, {"s", "t"}, forms);
  return X;
}

template <class F>
bool has_meta_invariants(const ProjectiveVariety<F>& X, const VarietyMeta& meta) {
  auto h = hilbert_invariants(X.ideal);
  return h.projective_dim == meta.n && h.degree == meta.d;
}

/// Complete intersection of forms of the given degrees in P^r, reseeded until dim/degree match.
template <class F>
ProjectiveVariety<F> random_complete_intersection(const F& K, int r, const std::vector<int>& degrees,
                                                  const VarietyMeta& meta, std::uint64_t seed) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
    auto R = projective_ring(K, r);
    ProjectiveVariety<F> X;
    X.ideal = Ideal<F>(R);
    for (int d : degrees) X.ideal.add(random_form(R, d, rng));
    if (has_meta_invariants(X, meta)) return X;
  }
  throw GenericityFailure("catalog: random complete intersection kept degenerating");
}

}  // namespace detail

/// Builds a catalog variety with its ideal, parametrization where one exists, and metadata.
template <class F>
ProjectiveVariety<F> build_catalog_variety(const std::string& key, std::uint64_t seed, const F& K) {
  VarietyMeta meta = catalog_meta(key);
  meta.seed = seed;
  ProjectiveVariety<F> X;
  if (key.rfind("rnc", 0) == 0) {
    X = detail::rnc(K, meta.d);
  } else if (key == "scroll12") {
    // P^2 blown up at (0:0:1), embedded by the conics through that point
    auto R = projective_ring(K, 4);
    X.ideal = detail::minors_2x2(R, {{0, 1, 3}, {1, 2, 4}});
    X.param = detail::monomial_param(K, {"s0", "s1", "s2"}, {"s0^2", "s0*s1", "s1^2", "s0*s2", "s1*s2"});
  } else if (key == "cone_twisted_cubic") {
    X = cone_over(detail::rnc(K, 3));
  } else if (key == "veronese5") {
    auto R = projective_ring(K, 5);
    // symmetric matrix [[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]]
    const int S[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    X.ideal = Ideal<F>(R);
    auto x = [&](int i) { return Polynomial<F>::variable(R, i); };
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = k + 1; l < 3; ++l) X.ideal.add(x(S[i][k]) * x(S[j][l]) - x(S[i][l]) * x(S[j][k]));
    // the 9 minors repeat by symmetry; the reduced basis keeps the 6 distinct quadrics
    X.ideal = groebner_basis(X.ideal, MonomialOrder::grevlex()).as_ideal();
    X.param = detail::monomial_param(K, {"s0", "s1", "s2"},
                                     {"s0^2", "s0*s1", "s0*s2", "s1^2", "s1*s2", "s2^2"});
  } else if (key == "veronese_proj4") {
    auto V = build_catalog_variety("veronese5", seed, K);
    for (int attempt = 0;; ++attempt) {
      if (attempt == 5) throw GenericityFailure("catalog: no general projection center found");
      Rng rng(seed + 0x51ed27ULL * static_cast<std::uint64_t>(attempt + 1));
      Point<F> c;
      for (int i = 0; i < 6; ++i) c.push_back(K.from_int(detail::catalog_int(rng)));
      // off the secant (determinantal cubic) hypersurface, so the projection is an isomorphism
      auto sym = Matrix<F>::from_rows(K, {{c[0], c[1], c[2]}, {c[1], c[3], c[4]}, {c[2], c[4], c[5]}});
      if (K.is_zero(determinant(sym))) continue;
      auto proj = project_image(V, {c}, rng);
      X = proj.image;
      if (detail::has_meta_invariants(X, meta)) break;
    }
  } else if (key == "delpezzo4") {
    X = detail::random_complete_intersection(K, 4, {2, 2}, meta, seed);
  } else if (key == "k3_23") {
    X = detail::random_complete_intersection(K, 4, {2, 3}, meta, seed);
  } else if (key == "elliptic4") {
    // a diagonal pencil moved by a random invertible change: every singular member is defined
    // over the base field, so the four cone vertices are rational
    for (int attempt = 0;; ++attempt) {
      if (attempt == 5) throw GenericityFailure("catalog: elliptic4 kept degenerating");
      Rng rng(seed + 0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(attempt));
      std::vector<long long> lam(4);
      for (auto& l : lam) l = detail::catalog_int(rng);
      bool distinct = true;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) distinct = distinct && !K.equal(K.from_int(lam[i]), K.from_int(lam[j]));
      if (!distinct) continue;
      Matrix<F> M(K, 4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) M(i, j) = K.from_int(detail::catalog_int(rng));
      if (K.is_zero(determinant(M))) continue;
      auto R = projective_ring(K, 3);
      auto y = linear_images(R, M);  // y_i = sum_j M(i,j) x_j
      Polynomial<F> q1(R), q2(R);
      for (int i = 0; i < 4; ++i) {
        q1 += y[i] * y[i];
        q2 += (y[i] * y[i]).scaled(K.from_int(lam[i]));
      }
      X.ideal = Ideal<F>(R, {q1, q2});
      if (detail::has_meta_invariants(X, meta)) break;
    }
  } else if (key == "rational_quartic3") {
    X.param = detail::monomial_param(K, {"s", "t"}, {"s^4", "s^3*t", "s*t^3", "t^4"});
    X.ideal = implicitize(*X.param);
  } else {
    throw InvalidInput("unknown catalog key '" + key + "'");
  }
  X.meta = meta;
  return X;
}

}  // namespace el
