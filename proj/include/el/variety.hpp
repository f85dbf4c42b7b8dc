#pragma once

#include <optional>
#include <string>
#include <vector>

#include "el/ideal_ops.hpp"
#include "el/linalg.hpp"

namespace el {

template <class F>
using Point = std::vector<typename F::Element>;

/// Scales so the first nonzero coordinate is 1; throws on the zero vector.
template <class F>
Point<F> normalized(const F& K, Point<F> p) {
  std::size_t i = 0;
  while (i < p.size() && K.is_zero(p[i])) ++i;
  if (i == p.size()) throw InvalidInput("the zero vector is not a projective point");
  auto inv = K.inv(p[i]);
  for (auto& c : p) c = K.mul(c, inv);
  return p;
}

template <class F>
bool same_point(const F& K, const Point<F>& a, const Point<F>& b) {
  if (a.size() != b.size()) return false;
  auto na = normalized(K, a), nb = normalized(K, b);
  for (std::size_t i = 0; i < na.size(); ++i)
    if (!K.equal(na[i], nb[i])) return false;
  return true;
}

template <class F>
std::string point_to_string(const F& K, const Point<F>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + K.to_string(p[i]);
  return s + ")";
}

/// Linear combination sum c_i * rows_i.
template <class F>
Point<F> combine(const F& K, const std::vector<Point<F>>& rows, const std::vector<typename F::Element>& c) {
  Point<F> out(rows.front().size(), K.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = K.add(out[j], K.mul(c[i], rows[i][j]));
  return out;
}

/// Forms of a common degree in the parameter ring, one per ambient coordinate.
template <class F>
struct Parametrization {
  RingPtr<F> params;
  std::vector<Polynomial<F>> forms;

  int degree() const { return forms.front().degree(); }
  Point<F> evaluate(const std::vector<typename F::Element>& s) const {
    Point<F> out;
    for (const auto& f : forms) out.push_back(f.evaluate(s));
    return out;
  }
};

struct VarietyMeta {
  std::string name;
  int n = -1;  // dimension
  int d = -1;  // degree
  int g = -1;  // sectional genus
  std::uint64_t seed = 0;
};

template <class F>
struct ProjectiveVariety {
  Ideal<F> ideal;
  std::optional<Parametrization<F>> param;
  VarietyMeta meta;

  const RingPtr<F>& ring() const { return ideal.ring(); }
  const F& field() const { return ideal.ring()->field(); }
  int ambient() const { return ideal.ring()->nvars() - 1; }

  bool contains(const Point<F>& p) const {
    for (const auto& g : ideal.generators())
      if (!field().is_zero(g.evaluate(p))) return false;
    return true;
  }
};

/// Polynomial ring x0..x_r with grevlex.
template <class F>
RingPtr<F> projective_ring(const F& K, int r, const std::string& prefix = "x") {
  return make_ring(K, indexed_names(prefix, r + 1), MonomialOrder::grevlex());
}

/// Images of x_i = sum_j M(i,j) z_j, as polynomials in `target`.
template <class F>
std::vector<Polynomial<F>> linear_images(const RingPtr<F>& target, const Matrix<F>& M) {
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!target->field().is_zero(M(i, j))) terms.push_back({Monomial::variable(static_cast<int>(j)), M(i, j)});
    out.push_back(Polynomial<F>::from_terms(target, std::move(terms)));
  }
  return out;
}

/// {f(M z)} for f in I, in the ring `target` of M.cols() variables.
template <class F>
Ideal<F> pull_back(const Ideal<F>& I, const Matrix<F>& M, const RingPtr<F>& target) {
  auto images = linear_images(target, M);
  Ideal<F> out(target);
  for (const auto& g : I.generators()) {
    auto h = g.substitute(target, images);
    if (!h.is_zero()) out.add(h);
  }
  return out;
}

template <class F>
Matrix<F> random_invertible(const F& K, std::size_t n, Rng& rng) {
  return complete_to_invertible<F>(K, {}, n, rng);
}

/// Linear forms (rows) vanishing on the span of `points`.
template <class F>
std::vector<Point<F>> annihilator(const F& K, const std::vector<Point<F>>& points, std::size_t n) {
  if (points.empty()) {
    std::vector<Point<F>> all;
    for (std::size_t i = 0; i < n; ++i) {
      Point<F> e(n, K.zero());
      e[i] = K.one();
      all.push_back(e);
    }
    return all;
  }
  return kernel_basis(Matrix<F>::from_rows(K, points)).basis;
}

}  // namespace el
