#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "el/ideal_ops.hpp"
#include "el/linalg.hpp"
#include "el/univariate.hpp"

namespace el {

/// Indices of the variables f actually uses.
template <class F>
std::vector<int> used_variables(const Polynomial<F>& f) {
  std::vector<int> out;
  for (int i = 0; i < f.ring()->nvars(); ++i)
    if (f.uses_variable(i)) out.push_back(i);
  return out;
}

/// Exact quotient a / b; throws if b does not divide a.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F>::check_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& K = a.field();
  Polynomial<F> rem = a;
  std::vector<typename Polynomial<F>::Term> quot;
  while (!rem.is_zero()) {
    if (!b.lm().divides(rem.lm())) throw InvalidInput("divide_exact: division is not exact");
    auto c = K.div(rem.lc(), b.lc());
    auto m = rem.lm() / b.lm();
    quot.push_back({m, c});
    rem = rem - b.times_term(c, m);
  }
  return Polynomial<F>::from_terms(a.ring(), std::move(quot));
}

/// Monic gcd (leading coefficient 1 in the ring's order). Univariate inputs use Euclid;
/// otherwise gcd = f*g / lcm with the lcm generating (f) ∩ (g).
template <class F>
Polynomial<F> polynomial_gcd(const Polynomial<F>& f, const Polynomial<F>& g, const Budget& budget = {}) {
  Polynomial<F>::check_same_ring(f, g);
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial<F>::constant(f.ring(), f.field().one());
  auto vf = used_variables(f), vg = used_variables(g);
  if (vf.size() == 1 && vg.size() == 1 && vf == vg) {
    auto u = gcd(to_univariate(f, vf[0]), to_univariate(g, vf[0]));
    return from_univariate(u, f.ring(), vf[0]).monic();
  }
  Ideal<F> a(f.ring(), {f}), b(f.ring(), {g});
  Ideal<F> meet = intersect(a, b, budget);
  auto G = groebner_basis(meet, f.ring()->order(), budget);
  if (G.size() != 1) throw Error("polynomial_gcd: intersection of principal ideals is not principal");
  Polynomial<F> lcm = G.elements().front().reordered(f.ring());
  return divide_exact(f * g, lcm).monic();
}

/// f / gcd(f, ∂f/∂x_i for every used variable): same zero set, no repeated factors.
template <class F>
Polynomial<F> squarefree_part(const Polynomial<F>& f, const Budget& budget = {}) {
  if (f.is_zero()) throw InvalidInput("squarefree_part of the zero polynomial");
  if (f.is_constant()) return Polynomial<F>::constant(f.ring(), f.field().one());
  auto vars = used_variables(f);
  auto p = f.field().characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(f.degree()))
    throw InvalidInput("characteristic too small for squarefree_part");
  Polynomial<F> g = f;
  for (int v : vars) {
    g = polynomial_gcd(g, f.derivative(v), budget);
    if (g.is_constant()) break;
  }
  return divide_exact(f, g).monic();
}

namespace detail {

/// g-parts of a basis of the Ruppert–Gao solution space {(g, h) : f (g_y - h_x) = g f_y - h f_x}.
template <class F>
std::vector<Polynomial<F>> gao_solutions(const Polynomial<F>& f, int xv, int yv) {
  const auto& K = f.field();
  const int m = f.degree_in(xv), n = f.degree_in(yv);
  auto fx = f.derivative(xv), fy = f.derivative(yv);
  const auto& ring = f.ring();
  std::vector<Polynomial<F>> columns, gparts;
  auto mono = [&](int i, int j) {
    Monomial mm;
    mm.exp[xv] = static_cast<std::uint8_t>(i);
    mm.exp[yv] = static_cast<std::uint8_t>(j);
    mm.refresh();
    return Polynomial<F>::term(ring, K.one(), mm);
  };
  // g-part: deg_x <= m-1, deg_y <= n; contributes f*g_y - g*f_y
  for (int i = 0; i <= m - 1; ++i)
    for (int j = 0; j <= n; ++j) {
      auto g = mono(i, j);
      columns.push_back(f * g.derivative(yv) - g * fy);
      gparts.push_back(g);
    }
  const std::size_t ng = columns.size();
  // h-part: deg_x <= m, deg_y <= n-1; contributes -f*h_x + h*f_x
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n - 1; ++j) {
      auto h = mono(i, j);
      columns.push_back(h * fx - f * h.derivative(xv));
    }
  std::map<std::pair<int, int>, std::size_t> row_of;
  for (const auto& c : columns)
    for (const auto& t : c.terms()) row_of.emplace(std::make_pair(int(t.m.exp[xv]), int(t.m.exp[yv])), 0);
  std::size_t r = 0;
  for (auto& kv : row_of) kv.second = r++;
  Matrix<F> M(K, row_of.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms())
      M(row_of.at({int(t.m.exp[xv]), int(t.m.exp[yv])}), j) = t.c;
  std::vector<Polynomial<F>> out;
  for (const auto& v : kernel_basis(M).basis) {
    Polynomial<F> g(ring);
    for (std::size_t j = 0; j < ng; ++j)
      if (!K.is_zero(v[j])) g += gparts[j].scaled(v[j]);
    out.push_back(g);
  }
  return out;
}

template <class F>
std::size_t gao_dimension(const Polynomial<F>& f, int xv, int yv) {
  return gao_solutions(f, xv, yv).size();
}

/// Prepares f for the Gao system: checks the field size and shears until gcd(f, f_x) = 1.
template <class F>
Polynomial<F> gao_ready(const Polynomial<F>& f, int xv, int yv, Rng& rng, const Budget& budget) {
  const auto& K = f.field();
  Polynomial<F> h = f;
  const int total = f.degree();
  if (K.characteristic() != 0 && K.characteristic() <= static_cast<std::uint64_t>(total * (total - 1)))
    throw InvalidInput("field too small for absolute_factor_count");
  for (int attempt = 0; attempt < 6; ++attempt) {
    const int m = h.degree_in(xv), n = h.degree_in(yv);
    if (K.characteristic() != 0 &&
        K.characteristic() <= static_cast<std::uint64_t>((2 * m - 1) * std::max(n, 1)))
      throw InvalidInput("field too small for absolute_factor_count");
    if (polynomial_gcd(h, h.derivative(xv), budget).is_constant()) return h;
    if (attempt == 0 && squarefree_part(h, budget).degree() < h.degree())
      throw InvalidInput("absolute_factor_count: input is not squarefree");
    // a factor free of x: shear y -> y + c*x and retry
    std::vector<Polynomial<F>> images;
    for (int i = 0; i < f.ring()->nvars(); ++i) images.push_back(Polynomial<F>::variable(f.ring(), i));
    auto c = K.random_small(rng, 50);
    images[yv] = Polynomial<F>::variable(f.ring(), yv) + Polynomial<F>::variable(f.ring(), xv).scaled(c);
    h = f.substitute(f.ring(), images);
  }
  throw GenericityFailure("absolute_factor_count: no shear separated the factors");
}

}  // namespace detail

/// Number of absolutely irreducible factors of a squarefree polynomial in at most two variables,
/// from the dimension of the Ruppert–Gao solution space.
template <class F>
int absolute_factor_count(const Polynomial<F>& f, Rng& rng, const Budget& budget = {}) {
  if (f.is_zero() || f.is_constant()) throw InvalidInput("absolute_factor_count needs a nonconstant polynomial");
  auto vars = used_variables(f);
  if (vars.size() > 2) throw InvalidInput("absolute_factor_count: more than two variables in use");
  const auto& K = f.field();
  if (vars.size() == 1) {
    auto u = to_univariate(f, vars[0]);
    if (K.characteristic() != 0 && K.characteristic() <= static_cast<std::uint64_t>(u.degree()))
      throw InvalidInput("field too small for absolute_factor_count");
    if (gcd(u, u.derivative()).degree() > 0) throw InvalidInput("absolute_factor_count: input is not squarefree");
    return u.degree();
  }
  auto h = detail::gao_ready(f, vars[0], vars[1], rng, budget);
  return static_cast<int>(detail::gao_dimension(h, vars[0], vars[1]));
}

/// Total degrees of the absolutely irreducible factors of a squarefree bivariate polynomial over
/// F_p, sorted ascending. Galois-conjugate factors share a degree, so the degrees follow from the
/// F_p-factorization, read off the eigenvalue polynomial of the Gao algebra.
inline std::vector<int> absolute_component_degrees(const Polynomial<PrimeField>& f, Rng& rng, const Budget& budget = {}) {
  using P = Polynomial<PrimeField>;
  const auto& K = f.field();
  auto vars = used_variables(f);
  if (vars.size() != 2) {
    int k = absolute_factor_count(f, rng, budget);
    return std::vector<int>(k, f.degree() / std::max(k, 1));
  }
  const int xv = vars[0], yv = vars[1];
  auto h = detail::gao_ready(f, xv, yv, rng, budget);
  auto G = detail::gao_solutions(h, xv, yv);
  const std::size_t k = G.size();
  if (k == 1) return {f.degree()};
  const int m = h.degree_in(xv), n = h.degree_in(yv);
  auto hx = h.derivative(xv);  // g = sum_i lambda_i (h/h_i) dh_i/dx
  const auto& ring = h.ring();
  auto mono = [&](int i, int j) {
    Monomial mm;
    mm.exp[xv] = static_cast<std::uint8_t>(i);
    mm.exp[yv] = static_cast<std::uint8_t>(j);
    mm.refresh();
    return P::term(ring, K.one(), mm);
  };
  for (int attempt = 0; attempt < 10; ++attempt) {
    P g(ring);
    for (const auto& Gi : G) g += Gi.scaled(K.random(rng));
    // g * G_j = h_x * sum_l A(j,l) G_l + Q_j * h, with deg_x Q_j <= m-1, deg_y Q_j <= n
    std::vector<P> cols;
    for (const auto& Gl : G) cols.push_back(hx * Gl);
    for (int i = 0; i <= m - 1; ++i)
      for (int j = 0; j <= n; ++j) cols.push_back(h * mono(i, j));
    Matrix<PrimeField> A(K, k, k);
    bool solved = true;
    for (std::size_t jj = 0; jj < k && solved; ++jj) {
      auto rhs = g * G[jj];
      std::map<std::pair<int, int>, std::size_t> row_of;
      for (const auto* poly : {&rhs})
        for (const auto& t : poly->terms()) row_of.emplace(std::make_pair(int(t.m.exp[xv]), int(t.m.exp[yv])), 0);
      for (const auto& c : cols)
        for (const auto& t : c.terms()) row_of.emplace(std::make_pair(int(t.m.exp[xv]), int(t.m.exp[yv])), 0);
      std::size_t r = 0;
      for (auto& kv : row_of) kv.second = r++;
      Matrix<PrimeField> M(K, row_of.size(), cols.size() + 1);
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : cols[c].terms()) M(row_of.at({int(t.m.exp[xv]), int(t.m.exp[yv])}), c) = t.c;
      for (const auto& t : rhs.terms()) M(row_of.at({int(t.m.exp[xv]), int(t.m.exp[yv])}), cols.size()) = K.neg(t.c);
      // a kernel vector with last coordinate 1 solves the system
      auto ker = kernel_basis(M).basis;
      solved = false;
      for (const auto& v : ker) {
        if (K.is_zero(v.back())) continue;
        auto s = K.inv(v.back());
        for (std::size_t l = 0; l < k; ++l) A(jj, l) = K.mul(v[l], s);
        solved = true;
        break;
      }
    }
    if (!solved) throw Error("absolute_component_degrees: Gao algebra relation not found");
    // characteristic polynomial by interpolation at 0..k
    std::vector<std::uint64_t> xs, ys;
    for (std::size_t t = 0; t <= k; ++t) {
      Matrix<PrimeField> B(K, k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) B(i, j) = K.neg(A(i, j));
      for (std::size_t i = 0; i < k; ++i) B(i, i) = K.add(B(i, i), K.from_int(static_cast<long long>(t)));
      xs.push_back(K.from_int(static_cast<long long>(t)));
      ys.push_back(determinant(B));
    }
    UPoly<PrimeField> chi(K);
    for (std::size_t i = 0; i <= k; ++i) {
      UPoly<PrimeField> basis = UPoly<PrimeField>::constant(K, ys[i]);
      for (std::size_t j = 0; j <= k; ++j) {
        if (i == j) continue;
        auto inv = K.inv(K.sub(xs[i], xs[j]));
        basis = basis * UPoly<PrimeField>(K, {K.mul(K.neg(xs[j]), inv), inv});
      }
      chi = chi + basis;
    }
    if (squarefree_part(chi).degree() != static_cast<int>(k)) continue;  // repeated eigenvalue: redraw g
    std::vector<int> degrees;
    int total = 0;
    for (const auto& phi : irreducible_factors(chi, rng)) {
      const int e = phi.degree();
      // homogenized phi(g / h_x) * h_x^e vanishes exactly on the factors in this Galois orbit
      P H(ring), gp = P::constant(ring, K.one());
      std::vector<P> hx_pow{P::constant(ring, K.one())};
      for (int i = 1; i <= e; ++i) hx_pow.push_back(hx_pow.back() * hx);
      for (int i = 0; i <= e; ++i) {
        H += (gp * hx_pow[e - i]).scaled(phi.coeff(i));
        gp = gp * g;
      }
      auto fac = polynomial_gcd(h, H, budget);
      if (fac.degree() % e != 0) throw Error("absolute_component_degrees: orbit degree not divisible");
      for (int i = 0; i < e; ++i) degrees.push_back(fac.degree() / e);
      total += fac.degree();
    }
    if (total != h.degree()) continue;
    std::sort(degrees.begin(), degrees.end());
    return degrees;
  }
  throw GenericityFailure("absolute_component_degrees: no separating element found");
}

}  // namespace el
