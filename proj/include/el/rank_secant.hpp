#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "el/geometry.hpp"

namespace el {

struct SecantEntry {
  int s = 0;
  int dim = -1;
  int expected = -1;
  bool defective = false;
};

struct SecantProfile {
  std::vector<SecantEntry> entries;
  std::optional<int> r_gen;  // least s with dim sigma_s = r, if reached within s_max
};

namespace detail {

/// Rows spanning the affine cone tangent space at one random point of X.
template <class F>
std::vector<Point<F>> random_tangent_rows(const ProjectiveVariety<F>& X, int n, Rng& rng, const Budget& budget) {
  const auto& K = X.field();
  if (X.param) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::vector<typename F::Element> s;
      for (int i = 0; i < X.param->params->nvars(); ++i) s.push_back(K.random(rng));
      auto rows = parametrized_tangent_rows(*X.param, s);
      bool zero_row = false;
      for (const auto& row : rows) {
        bool z = true;
        for (const auto& c : row) z = z && K.is_zero(c);
        zero_row = zero_row || z;
      }
      if (!zero_row) return rows;
    }
    throw GenericityFailure("secant_dims: parametrization kept degenerating");
  }
  if (K.is_rational()) throw InvalidInput("secant_dims: implicit varieties need a prime field");
  for (int attempt = 0; attempt < 20; ++attempt) {
    auto p = sample_point_implicit(X.ideal, n, rng, budget);
    auto T = tangent_space(X.ideal, p);
    if (static_cast<int>(T.size()) == n + 1) return T;  // smooth point
  }
  throw GenericityFailure("secant_dims: no smooth sample point found");
}

}  // namespace detail

/// Terracini: dim sigma_s = rank of the stacked tangent spaces at s random points, minus one;
/// maximized over `trials` independent draws.
template <class F>
SecantProfile secant_dims(const ProjectiveVariety<F>& X, int s_max, int trials, Rng& rng, const Budget& budget = {}) {
  const auto& K = X.field();
  const int r = X.ambient();
  int n = X.meta.n;
  if (n < 0) n = hilbert_invariants(X.ideal, budget).projective_dim;
  SecantProfile out;
  for (int s = 1; s <= s_max; ++s) {
    SecantEntry e;
    e.s = s;
    e.expected = std::min(s * (n + 1) - 1, r);
    for (int t = 0; t < trials; ++t) {
      std::vector<Point<F>> rows;
      for (int k = 0; k < s; ++k) {
        auto part = detail::random_tangent_rows(X, n, rng, budget);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      e.dim = std::max(e.dim, static_cast<int>(rank(Matrix<F>::from_rows(K, rows))) - 1);
    }
    e.defective = e.dim < e.expected;
    out.entries.push_back(e);
    if (e.dim == r && !out.r_gen) out.r_gen = s;
  }
  return out;
}

/// Incidence ideal in (t, x0..xr): a in X and a + t*q in X, divided by t, saturated by t.
/// Its points (t : a) with a in X are exactly the members of 2-point decompositions of q,
/// each pair {a, b} appearing twice (once from each end).
template <class F>
Ideal<F> decomposition_incidence(const ProjectiveVariety<F>& X, const Point<F>& q, const Budget& budget = {}) {
  const auto& K = X.field();
  const int n = X.ambient() + 1;
  if (X.contains(q)) throw InvalidInput("q lies on the variety");
  auto big = prepend_variables(*X.ring(), {fresh_name(*X.ring(), "t")}, MonomialOrder::grevlex());
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = i + 1;
  auto t = Polynomial<F>::variable(big, 0);
  std::vector<Polynomial<F>> moved;  // x_i + t*q_i
  for (int i = 0; i < n; ++i) moved.push_back(Polynomial<F>::variable(big, i + 1) + t.scaled(q[i]));
  Ideal<F> J(big);
  for (const auto& g : X.ideal.generators()) {
    auto a = g.in_ring(big, shift);
    J.add(a);
    auto diff = g.substitute(big, moved) - a;
    // every term of diff is divisible by t
    std::vector<typename Polynomial<F>::Term> terms;
    for (auto term : diff.terms()) {
      term.m.exp[0] = static_cast<std::uint8_t>(term.m.exp[0] - 1);
      term.m.refresh();
      terms.push_back(term);
    }
    J.add(Polynomial<F>::from_terms(big, std::move(terms)));
  }
  (void)K;
  return saturate_by_variable(J, 0, budget);
}

template <class F>
struct DecompositionSet {
  bool positive_dimensional = false;
  long long pair_count = 0;
  /// pairs defined over the base field (prime-field mode); complete when `all_explicit`
  std::vector<std::pair<Point<F>, Point<F>>> pairs;
  bool all_explicit = false;
};

/// Projective points of a zero-dimensional homogeneous ideal with coordinates in F_p.
template <class F>
std::vector<Point<F>> projective_rational_points(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  const auto& K = I.ring()->field();
  const int n = I.ring()->nvars();
  auto M = random_invertible(K, n, rng);  // x = M z, chart z0 = 1
  auto affine = make_ring(K, indexed_names("w", n - 1, 1), MonomialOrder::grevlex());
  std::vector<Polynomial<F>> images;
  for (int i = 0; i < n; ++i) {
    auto li = Polynomial<F>::constant(affine, M(i, 0));
    for (int j = 1; j < n; ++j) li += Polynomial<F>::variable(affine, j - 1).scaled(M(i, j));
    images.push_back(li);
  }
  Ideal<F> cut(affine);
  for (const auto& g : I.generators()) {
    auto h = g.substitute(affine, images);
    if (!h.is_zero()) cut.add(h);
  }
  std::vector<Point<F>> out;
  for (const auto& w : rational_solutions(cut, rng, budget)) {
    Point<F> z{K.one()};
    z.insert(z.end(), w.begin(), w.end());
    out.push_back(normalized(K, M.apply(z)));
  }
  return out;
}

/// S(X, q) restricted to pairs: count, or "positive-dimensional"; explicit pairs over F_p.
template <class F>
DecompositionSet<F> two_decompositions(const ProjectiveVariety<F>& X, const Point<F>& q, Rng& rng,
                                       const Budget& budget = {}) {
  const auto& K = X.field();
  const int n = X.ambient() + 1;
  auto J = decomposition_incidence(X, q, budget);
  DecompositionSet<F> out;
  auto dd = reduced_dim_degree(J, rng, budget);
  if (dd.dim >= 1) {
    out.positive_dimensional = true;
    return out;
  }
  if (dd.dim < 0) return out;
  if (dd.degree % 2 != 0) throw Error("two_decompositions: odd number of decomposition points");
  out.pair_count = dd.degree / 2;
  if constexpr (std::is_same_v<F, PrimeField>) {
    auto pts = projective_rational_points(J, rng, budget);
    for (const auto& tp : pts) {
      Point<F> a(tp.begin() + 1, tp.end()), b(n);
      for (int i = 0; i < n; ++i) b[i] = K.add(a[i], K.mul(tp[0], q[i]));
      a = normalized(K, a);
      b = normalized(K, b);
      if (b < a) std::swap(a, b);
      bool seen = false;
      for (const auto& pr : out.pairs) seen = seen || (pr.first == a && pr.second == b);
      if (!seen) out.pairs.emplace_back(a, b);
    }
    out.all_explicit = static_cast<long long>(out.pairs.size()) == out.pair_count;
  }
  return out;
}

/// Exact check that {a, b} is a 2-point decomposition of q on X.
template <class F>
bool is_decomposition(const ProjectiveVariety<F>& X, const Point<F>& q, const Point<F>& a, const Point<F>& b) {
  const auto& K = X.field();
  if (!X.contains(a) || !X.contains(b) || same_point(K, a, b)) return false;
  return rank(Matrix<F>::from_rows(K, {a, b, q})) == 2;
}

}  // namespace el
