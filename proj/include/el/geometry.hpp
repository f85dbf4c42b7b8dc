#pragma once

#include <map>
#include <type_traits>

#include "el/factor.hpp"
#include "el/hilbert.hpp"
#include "el/variety.hpp"

namespace el {

/// Closure of the image of a parametrization: eliminate s from (y_i - P_i(s)).
/// The forms share a degree, so the eliminant is the (homogeneous) ideal of the affine cone.
template <class F>
Ideal<F> implicitize(const Parametrization<F>& P, const Budget& budget = {}) {
  const auto& K = P.params->field();
  const int m = P.params->nvars();
  const int r = static_cast<int>(P.forms.size()) - 1;
  for (const auto& f : P.forms)
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != P.degree()))
      throw InvalidInput("implicitize: forms must be homogeneous of one degree");
  std::vector<std::string> names = P.params->names();
  for (const auto& y : indexed_names("y", r + 1)) names.push_back(y);
  auto big = make_ring(K, names, MonomialOrder::grevlex());
  std::vector<int> shift(m);
  for (int i = 0; i < m; ++i) shift[i] = i;
  Ideal<F> graph(big);
  for (int i = 0; i <= r; ++i)
    graph.add(Polynomial<F>::variable(big, m + i) - P.forms[i].in_ring(big, shift));
  Ideal<F> E = eliminate(graph, m, budget);
  auto target = projective_ring(K, r);
  Ideal<F> out(target);
  for (const auto& g : E.generators()) {
    std::vector<int> id(r + 1);
    for (int i = 0; i <= r; ++i) id[i] = i;
    out.add(g.in_ring(target, id));
  }
  return out;
}

/// Evaluates the parametrization at random small parameters until the image is nonzero.
template <class F>
Point<F> sample_point(const ProjectiveVariety<F>& X, Rng& rng) {
  if (!X.param) throw InvalidInput("sample_point needs a parametrization");
  const auto& K = X.field();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<typename F::Element> s;
    for (int i = 0; i < X.param->params->nvars(); ++i) s.push_back(K.random_small(rng, 1000));
    auto p = X.param->evaluate(s);
    bool zero = true;
    for (const auto& c : p) zero = zero && K.is_zero(c);
    if (!zero) return normalized(K, p);
  }
  throw GenericityFailure("sample_point: parametrization kept hitting a base point");
}

/// All F_p-rational solutions of a zero-dimensional affine ideal, by back-substitution.
template <class F>
std::vector<Point<F>> rational_solutions(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  if constexpr (!std::is_same_v<F, PrimeField>) {
    throw InvalidInput("rational_solutions needs a prime field");
  } else {
    const auto& R = I.ring();
    const int k = R->nvars();
    const auto& K = R->field();
    auto G = groebner_basis(I, MonomialOrder::grevlex(), budget);
    if (G.is_unit()) return {};
    const int last = k - 1;
    // univariate eliminant in the last variable (block order, not a full lex basis)
    auto E = k == 1 ? G.as_ideal() : eliminate(G.as_ideal(), last, budget);
    const Polynomial<F>* uni = nullptr;
    for (const auto& g : E.generators())
      if (!g.is_constant()) uni = &g;
    if (!uni) throw InvalidInput("rational_solutions: ideal is not zero-dimensional");
    auto roots = prime_field_roots(to_univariate(*uni, 0), rng);
    std::vector<Point<F>> out;
    if (k == 1) {
      for (auto root : roots) out.push_back({root});
      return out;
    }
    auto sub = make_ring(K, std::vector<std::string>(R->names().begin(), R->names().end() - 1), MonomialOrder::grevlex());
    for (auto root : roots) {
      std::vector<Polynomial<F>> images;
      for (int v = 0; v < last; ++v) images.push_back(Polynomial<F>::variable(sub, v));
      images.push_back(Polynomial<F>::constant(sub, root));
      Ideal<F> J(sub);
      for (const auto& g : G.elements()) {
        auto h = g.substitute(sub, images);
        if (!h.is_zero()) J.add(h);
      }
      if (J.generators().empty()) throw InvalidInput("rational_solutions: ideal is not zero-dimensional");
      for (auto p : rational_solutions(J, rng, budget)) {
        p.push_back(root);
        out.push_back(std::move(p));
      }
    }
    return out;
  }
}

/// A random F_p-point of V(I): cut with a random linear space of complementary dimension and
/// keep trying until the cut has a rational point.
template <class F>
Point<F> sample_point_implicit(const Ideal<F>& I, int dim, Rng& rng, const Budget& budget = {}) {
  const auto& K = I.ring()->field();
  const int n = I.ring()->nvars();
  const int k = n - dim;  // number of spanning points of the cutting space
  if (k < 1) throw InvalidInput("sample_point_implicit: dimension too large");
  for (int attempt = 0; attempt < 60; ++attempt) {
    Matrix<F> B(K, n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) B(i, j) = K.random(rng);
    // chart t0 = 1: x = B(:,0) + sum_{j>0} t_j B(:,j)
    auto affine = make_ring(K, indexed_names("t", k - 1, 1), MonomialOrder::grevlex());
    std::vector<Polynomial<F>> images;
    for (int i = 0; i < n; ++i) {
      auto li = Polynomial<F>::constant(affine, B(i, 0));
      for (int j = 1; j < k; ++j) li += Polynomial<F>::variable(affine, j - 1).scaled(B(i, j));
      images.push_back(li);
    }
    Ideal<F> cut(affine);
    for (const auto& g : I.generators()) {
      auto h = g.substitute(affine, images);
      if (!h.is_zero()) cut.add(h);
    }
    std::vector<Point<F>> sols;
    if (k == 1) {
      bool zero = true;
      for (const auto& g : cut.generators()) zero = zero && g.is_zero();
      if (!zero) continue;
      sols.push_back({});
    } else {
      if (cut.generators().empty()) continue;
      try {
        sols = rational_solutions(cut, rng, budget);
      } catch (const InvalidInput&) {
        continue;  // cut not zero-dimensional: non-generic
      }
    }
    if (sols.empty()) continue;
    const auto& t = sols[rng() % sols.size()];
    Point<F> p(n, K.zero());
    for (int i = 0; i < n; ++i) {
      p[i] = B(i, 0);
      for (int j = 1; j < k; ++j) p[i] = K.add(p[i], K.mul(B(i, j), t[j - 1]));
    }
    return normalized(K, p);
  }
  throw GenericityFailure("sample_point_implicit: no rational point found");
}

/// Elimination ideal of the projection whose image coordinates are the given linear forms
/// (rows). No check that the center misses V(I).
template <class F>
Ideal<F> project_ideal(const Ideal<F>& I, const std::vector<Point<F>>& forms, Rng& rng, const Budget& budget = {}) {
  const auto& K = I.ring()->field();
  const std::size_t n = I.ring()->nvars();
  const std::size_t k = n - forms.size();
  // z = N x with N = [random k rows; forms]
  Matrix<F> N(K, n, n);
  for (int attempt = 0;; ++attempt) {
    if (attempt == 50) throw GenericityFailure("project_image: could not complete the coordinate change");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) N(i, j) = i < k ? K.random(rng) : forms[i - k][j];
    if (!K.is_zero(determinant(N))) break;
  }
  auto zring = projective_ring(K, static_cast<int>(n) - 1, "z");
  Ideal<F> moved = pull_back(I, inverse(N), zring);
  Ideal<F> E = eliminate(moved, static_cast<int>(k), budget);
  auto target = projective_ring(K, static_cast<int>(forms.size()) - 1);
  Ideal<F> out(target);
  std::vector<int> id(forms.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  for (const auto& g : E.generators()) out.add(g.in_ring(target, id));
  return out;
}

/// Result of projecting from a linear center: the image variety and the coordinate change used.
template <class F>
struct Projection {
  ProjectiveVariety<F> image;
  /// rows are the linear forms (in the source coordinates) giving the image coordinates
  std::vector<Point<F>> forms;
};

/// Image of X under projection from span(center). New coordinates are linear forms vanishing
/// on the center, completed by random forms which are then eliminated.
template <class F>
Projection<F> project_image(const ProjectiveVariety<F>& X, const std::vector<Point<F>>& center, Rng& rng,
                            bool certify = false, const Budget& budget = {}) {
  const auto& K = X.field();
  const std::size_t n = X.ambient() + 1;
  auto forms = annihilator(K, center, n);
  if (certify) {
    Ideal<F> meet = X.ideal;
    for (const auto& l : forms) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t j = 0; j < n; ++j)
        if (!K.is_zero(l[j])) terms.push_back({Monomial::variable(static_cast<int>(j)), l[j]});
      meet.add(Polynomial<F>::from_terms(X.ring(), terms));
    }
    if (!hilbert_invariants(meet, budget).empty()) throw InvalidInput("project_image: center meets the variety");
  }
  for (const auto& c : center)
    if (X.contains(c)) throw InvalidInput("project_image: center meets the variety");
  Projection<F> out;
  out.image.ideal = project_ideal(X.ideal, forms, rng, budget);
  if (X.param) {
    Parametrization<F> P{X.param->params, {}};
    for (const auto& l : forms) {
      Polynomial<F> acc(X.param->params);
      for (std::size_t j = 0; j < n; ++j) acc += X.param->forms[j].scaled(l[j]);
      P.forms.push_back(acc);
    }
    out.image.param = P;
  }
  out.image.meta = X.meta;
  out.image.meta.name = X.meta.name + "_projected";
  out.forms = forms;
  return out;
}

/// Cone with vertex e_r over B in P^{r-1}.
template <class F>
ProjectiveVariety<F> cone_over(const ProjectiveVariety<F>& B) {
  const auto& K = B.field();
  const int r = B.ambient() + 1;
  auto ring = projective_ring(K, r);
  ProjectiveVariety<F> C;
  C.ideal = Ideal<F>(ring);
  std::vector<int> id(r);
  for (int i = 0; i < r; ++i) id[i] = i;
  for (const auto& g : B.ideal.generators()) C.ideal.add(g.in_ring(ring, id));
  if (B.param) {
    auto names = B.param->params->names();
    names.push_back(fresh_name(*B.param->params, "u"));
    auto pr = make_ring(K, names, MonomialOrder::grevlex());
    const int m = B.param->params->nvars();
    std::vector<int> pid(m);
    for (int i = 0; i < m; ++i) pid[i] = i;
    Parametrization<F> P{pr, {}};
    for (const auto& f : B.param->forms) P.forms.push_back(f.in_ring(pr, pid));
    P.forms.push_back(Polynomial<F>::variable(pr, m).pow(B.param->degree()));
    C.param = P;
  }
  C.meta = B.meta;
  C.meta.name = "cone_" + B.meta.name;
  if (B.meta.n >= 0) C.meta.n = B.meta.n + 1;
  return C;
}

struct DimDegree {
  int dim = -1;
  long long degree = 0;
  friend bool operator==(const DimDegree&, const DimDegree&) = default;
};

namespace detail {

/// Number of distinct points of a slice of V(I) by `dim` random hyperplanes.
template <class F>
long long slice_point_count(const Ideal<F>& I, int dim, Rng& rng, const Budget& budget) {
  const auto& K = I.ring()->field();
  const int n = I.ring()->nvars();
  const int free = n - dim - 1;  // affine variables after slicing and charting
  auto M = random_invertible(K, n, rng);
  if (free <= 0) return 1;
  // x = M z, z_{n-dim..n-1} = 0, z_0 = 1, remaining z_1..z_{free}
  auto affine = make_ring(K, indexed_names("w", free, 1), MonomialOrder::grevlex());
  std::vector<Polynomial<F>> images;
  for (int i = 0; i < n; ++i) {
    auto li = Polynomial<F>::constant(affine, M(i, 0));
    for (int j = 1; j <= free; ++j) li += Polynomial<F>::variable(affine, j - 1).scaled(M(i, j));
    images.push_back(li);
  }
  Ideal<F> cut(affine);
  for (const auto& g : I.generators()) {
    auto h = g.substitute(affine, images);
    if (!h.is_zero()) cut.add(h);
  }
  if (cut.generators().empty()) throw GenericityFailure("slice is not zero-dimensional");
  Ideal<F> E = eliminate(cut, free - 1, budget);
  if (E.generators().empty()) throw GenericityFailure("slice is not zero-dimensional");
  if (E.generators().size() != 1) throw Error("eliminant of a zero-dimensional slice is not principal");
  const auto& g = E.generators().front();
  if (g.is_constant()) return 0;
  return squarefree_part(to_univariate(g, 0)).degree();
}

}  // namespace detail

/// Dimension and reduced degree. The slice count runs on two random slices; a third arbitrates.
template <class F>
DimDegree reduced_dim_degree(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  auto h = hilbert_invariants(I, budget);
  DimDegree out;
  out.dim = h.projective_dim;
  if (h.empty()) return out;
  auto once = [&]() -> long long {
    for (int attempt = 0; attempt < 5; ++attempt) {
      try {
        return detail::slice_point_count(I, out.dim, rng, budget);
      } catch (const GenericityFailure&) {
      }
    }
    throw GenericityFailure("reduced_dim_degree: every slice was degenerate");
  };
  long long a = once(), b = once();
  if (a != b) {
    long long c = once();
    if (c == a) {
      b = a;
    } else if (c != b) {
      throw GenericityFailure("reduced_dim_degree: slice counts disagree");
    }
  }
  out.degree = b;
  return out;
}

template <class F>
struct SpanInfo {
  int ell = -1;                          // dim of the linear span
  std::vector<Point<F>> points;          // ell+1 points spanning it
  std::vector<Polynomial<F>> linear_forms;  // independent linear forms cutting it out
};

/// Linear span of V(I): the degree-1 part of the irrelevant-saturated ideal.
template <class F>
SpanInfo<F> span_info(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  const auto& K = I.ring()->field();
  const int n = I.ring()->nvars();
  auto sat = saturate_irrelevant(I, rng, budget);
  auto G = groebner_basis(sat, MonomialOrder::grevlex(), budget);
  SpanInfo<F> out;
  if (G.is_unit()) return out;
  std::vector<Point<F>> rows;
  for (const auto& g : G.elements()) {
    if (g.degree() != 1) continue;
    Point<F> row(n, K.zero());
    for (const auto& t : g.terms())
      for (int v = 0; v < n; ++v)
        if (t.m.exp[v]) row[v] = t.c;
    rows.push_back(row);
    out.linear_forms.push_back(g.reordered(I.ring()));
  }
  if (!rows.empty() && rank(Matrix<F>::from_rows(K, rows)) != rows.size())
    throw Error("span_info: linear basis elements are dependent");
  out.ell = n - 1 - static_cast<int>(rows.size());
  out.points = annihilator(K, rows, n);
  return out;
}

template <class F>
int span_dim(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  return span_info(I, rng, budget).ell;
}

/// Hilbert data of a random hyperplane section (for a surface: the sectional genus is its p_a).
template <class F>
HilbertInvariants hyperplane_section_invariants(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  const auto& K = I.ring()->field();
  const int n = I.ring()->nvars();
  auto M = random_invertible(K, n, rng);
  Matrix<F> S(K, n, n - 1);  // x = M z with z_{n-1} = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j) S(i, j) = M(i, j);
  auto ring = projective_ring(K, n - 2);
  return hilbert_invariants(pull_back(I, S, ring), budget);
}

/// Affine cone tangent space of V(I) at p: the kernel of the Jacobian.
template <class F>
std::vector<Point<F>> tangent_space(const Ideal<F>& I, const Point<F>& p) {
  const auto& K = I.ring()->field();
  const int n = I.ring()->nvars();
  std::vector<Point<F>> rows;
  for (const auto& g : I.generators()) {
    Point<F> row(n);
    for (int v = 0; v < n; ++v) row[v] = g.derivative(v).evaluate(p);
    rows.push_back(row);
  }
  if (rows.empty()) return annihilator<F>(K, {}, n);
  return kernel_basis(Matrix<F>::from_rows(K, rows)).basis;
}

/// Partial derivatives of the parametrization at s: spans the affine tangent space of the cone.
template <class F>
std::vector<Point<F>> parametrized_tangent_rows(const Parametrization<F>& P, const std::vector<typename F::Element>& s) {
  std::vector<Point<F>> rows;
  for (int j = 0; j < P.params->nvars(); ++j) {
    Point<F> row;
    for (const auto& f : P.forms) row.push_back(f.derivative(j).evaluate(s));
    rows.push_back(row);
  }
  return rows;
}

/// Radical ideal of a finite set of points: intersection of the ideals of the points.
template <class F>
Ideal<F> ideal_of_points(const RingPtr<F>& R, const std::vector<Point<F>>& pts, const Budget& budget = {}) {
  const auto& K = R->field();
  const std::size_t n = R->nvars();
  Ideal<F> out(R, {Polynomial<F>::constant(R, K.one())});
  for (const auto& p : pts) {
    Ideal<F> lin(R);
    for (const auto& l : annihilator(K, {p}, n)) {
      Polynomial<F> f(R);
      for (std::size_t j = 0; j < n; ++j) f += Polynomial<F>::variable(R, static_cast<int>(j)).scaled(l[j]);
      lin.add(f);
    }
    out = intersect(out, lin, budget);
  }
  return out;
}

}  // namespace el
