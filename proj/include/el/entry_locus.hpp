#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "el/factor.hpp"
#include "el/rank_secant.hpp"

namespace el {

enum class EntryLocusStrategy { implicit, parametrized, both };

/// Thrown when the implicit and parametrized computations of the same entry locus differ.
class StrategyDisagreement : public Error {
 public:
  using Error::Error;
};

namespace detail {

/// Gamma from the t-incidence: eliminate t, drop irrelevant components.
template <class F>
Ideal<F> entry_locus_implicit(const ProjectiveVariety<F>& X, const Point<F>& q, Rng& rng, const Budget& budget) {
  auto J = decomposition_incidence(X, q, budget);
  auto E = eliminate(J, 1, budget);
  Ideal<F> back(X.ring());
  std::vector<int> id(X.ambient() + 1);
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  for (const auto& g : E.generators()) back.add(g.in_ring(X.ring(), id));
  return saturate_irrelevant(back, rng, budget);
}

/// Gamma from the parametrization: phi(u) = lambda*phi(s) + q cuts out the parameters s of the
/// first point (the second point is never proportional to the first since q is off X); the
/// graph y = phi(s) then carries those parameters to the ambient space.
template <class F>
Ideal<F> entry_locus_parametrized(const ProjectiveVariety<F>& X, const Point<F>& q, Rng& rng, const Budget& budget) {
  const auto& K = X.field();
  const auto& P = *X.param;
  const int m = P.params->nvars();
  const int n = X.ambient() + 1;
  std::vector<std::string> names = indexed_names("u", m);
  names.push_back("lambda");
  for (const auto& nm : indexed_names("s", m)) names.push_back(nm);
  auto R1 = make_ring(K, names, MonomialOrder::grevlex());
  std::vector<Polynomial<F>> us, ss;
  for (int i = 0; i < m; ++i) {
    us.push_back(Polynomial<F>::variable(R1, i));
    ss.push_back(Polynomial<F>::variable(R1, m + 1 + i));
  }
  auto lambda = Polynomial<F>::variable(R1, m);
  Ideal<F> A(R1);
  for (int i = 0; i < n; ++i) {
    auto eq = P.forms[i].substitute(R1, us) - lambda * P.forms[i].substitute(R1, ss) - Polynomial<F>::constant(R1, q[i]);
    if (!eq.is_zero()) A.add(eq);
  }
  auto S = eliminate(A, m + 1, budget);  // ideal in s
  // graph: (s, y) with y - phi(s)
  std::vector<std::string> gnames = indexed_names("s", m);
  for (const auto& nm : X.ring()->names()) gnames.push_back(nm);
  auto R2 = make_ring(K, gnames, MonomialOrder::grevlex());
  std::vector<Polynomial<F>> s2;
  for (int i = 0; i < m; ++i) s2.push_back(Polynomial<F>::variable(R2, i));
  Ideal<F> G(R2);
  std::vector<int> sid(m);
  for (int i = 0; i < m; ++i) sid[i] = i;
  for (const auto& g : S.generators()) G.add(g.in_ring(R2, sid));
  for (int i = 0; i < n; ++i) G.add(Polynomial<F>::variable(R2, m + i) - P.forms[i].substitute(R2, s2));
  auto E = eliminate(G, m, budget);
  Ideal<F> back(X.ring());
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  for (const auto& g : E.generators()) back.add(g.in_ring(X.ring(), id));
  // the image of a cone is a cone; keep the homogeneous closure
  if (!back.is_homogeneous()) throw Error("entry_locus_ideal: parametrized image is not homogeneous");
  return saturate_irrelevant(back, rng, budget);
}

}  // namespace detail

/// Ideal of the entry locus Gamma_q(X), saturated with respect to the irrelevant ideal.
template <class F>
Ideal<F> entry_locus_ideal(const ProjectiveVariety<F>& X, const Point<F>& q, Rng& rng,
                           EntryLocusStrategy strategy = EntryLocusStrategy::implicit, const Budget& budget = {}) {
  if (X.contains(q)) throw InvalidInput("q lies on the variety");
  if (strategy != EntryLocusStrategy::implicit && !X.param)
    throw InvalidInput("entry_locus_ideal: the parametrized strategy needs a parametrization");
  if (strategy == EntryLocusStrategy::implicit) return detail::entry_locus_implicit(X, q, rng, budget);
  if (strategy == EntryLocusStrategy::parametrized) return detail::entry_locus_parametrized(X, q, rng, budget);
  auto a = detail::entry_locus_implicit(X, q, rng, budget);
  auto b = detail::entry_locus_parametrized(X, q, rng, budget);
  if (!same_ideal(a, b, budget)) throw StrategyDisagreement("entry_locus_ideal: implicit and parametrized results differ");
  return a;
}

/// Squarefree plane model of a projective curve under a random projection to P^2.
template <class F>
Polynomial<F> plane_model(const Ideal<F>& C, Rng& rng, const Budget& budget = {}) {
  const auto& K = C.ring()->field();
  const std::size_t n = C.ring()->nvars();
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Point<F>> forms(3, Point<F>(n));
    for (auto& row : forms)
      for (auto& c : row) c = K.random(rng);
    auto img = project_ideal(C, forms, rng, budget);
    if (img.generators().empty()) continue;
    auto f = img.generators().front();
    for (const auto& g : img.generators()) f = polynomial_gcd(f, g, budget);
    if (f.is_constant()) continue;  // the curve collapsed
    return squarefree_part(f, budget);
  }
  throw GenericityFailure("plane_model: every projection collapsed the curve");
}

/// Affine chart of a plane curve in a random coordinate system (line at infinity general).
template <class F>
Polynomial<F> random_affine_chart(const Polynomial<F>& f, Rng& rng) {
  const auto& K = f.field();
  auto M = random_invertible(K, 3, rng);
  auto affine = make_ring(K, {"x", "y"}, MonomialOrder::grevlex());
  std::vector<Polynomial<F>> images;
  for (int i = 0; i < 3; ++i)
    images.push_back(Polynomial<F>::constant(affine, M(i, 0)) + Polynomial<F>::variable(affine, 0).scaled(M(i, 1)) +
                     Polynomial<F>::variable(affine, 1).scaled(M(i, 2)));
  return f.substitute(affine, images);
}

struct ComponentData {
  int count = 0;
  std::vector<int> degrees;  // prime-field mode only, ascending
};

/// Number of absolutely irreducible components of a reduced curve (max over 3 plane models);
/// in prime-field mode also their degrees.
template <class F>
ComponentData curve_components(const Ideal<F>& C, Rng& rng, const Budget& budget = {}) {
  ComponentData out;
  for (int round = 0; round < 3; ++round) {
    auto f = plane_model(C, rng, budget);
    Polynomial<F> a(f.ring());
    for (int attempt = 0; attempt < 5; ++attempt) {
      a = random_affine_chart(f, rng);
      if (a.degree() == f.degree()) break;
    }
    int k = absolute_factor_count(a, rng, budget);
    if (k > out.count) {
      out.count = k;
      out.degrees.clear();
      if constexpr (std::is_same_v<F, PrimeField>) out.degrees = absolute_component_degrees(a, rng, budget);
    }
  }
  return out;
}

template <class F>
int component_count(const Ideal<F>& C, Rng& rng, const Budget& budget = {}) {
  return curve_components(C, rng, budget).count;
}

enum class TypeAB { A, B, undetermined };

inline std::string to_string(TypeAB t) {
  switch (t) {
    case TypeAB::A: return "A";
    case TypeAB::B: return "B";
    default: return "undetermined";
  }
}

/// Compares Gamma_o with Gamma_q for random o in the span of Gamma_q.
template <class F>
TypeAB type_ab_test(const ProjectiveVariety<F>& X, const Ideal<F>& gamma, int trials, Rng& rng,
                    const Budget& budget = {}) {
  const auto& K = X.field();
  auto span = span_info(gamma, rng, budget);
  if (span.ell < 1) throw InvalidInput("type_ab_test: the entry locus spans no line");
  int equal = 0, different = 0;
  for (int t = 0; t < trials; ++t) {
    Point<F> o;
    for (int attempt = 0; attempt < 10; ++attempt) {
      std::vector<typename F::Element> c;
      for (std::size_t i = 0; i < span.points.size(); ++i) c.push_back(K.random(rng));
      o = combine(K, span.points, c);
      if (!X.contains(o)) break;
    }
    try {
      auto other = entry_locus_ideal(X, o, rng, EntryLocusStrategy::implicit, budget);
      if (same_ideal(gamma, other, budget)) {
        ++equal;
      } else if (!ideal_contains(gamma, other, budget) && !ideal_contains(other, gamma, budget)) {
        ++different;
      }
    } catch (const BudgetExceeded&) {
    }
  }
  if (different > 0) return TypeAB::B;
  if (trials > 0 && equal == trials) return TypeAB::A;
  return TypeAB::undetermined;
}

struct EntryLocusReport {
  std::string key;
  std::uint64_t seed = 0;
  std::string field;
  std::vector<std::string> q;
  int gamma = -1;
  int ell = -1;
  long long degree = 0;          // reduced
  long long scheme_degree = 0;   // Hilbert degree of the computed ideal
  bool degree_mismatch = false;  // scheme_degree != degree
  int components = 0;
  std::vector<int> component_degrees;
  std::string type_irreducibility;  // "I" or "II"
  std::string type_ab;
  int surface_degree = 0;
  int sectional_genus = -1;
  long long expected_degree = -1;  // (d-1)(d-2) - 2g
  bool degree_formula_ok = false;
  int expected_gamma = -1;  // dim sigma_1 + n + 1 - r
  bool dimension_formula_ok = false;
  int q_attempts = 0;
  std::map<std::string, double> timings;  // seconds per stage
};

struct ClassifyOptions {
  int ab_trials = 3;
  int secant_trials = 3;
  EntryLocusStrategy strategy = EntryLocusStrategy::implicit;
  Budget budget;
};

/// Full pipeline for an r_gen = 2 variety: sample q, compute Gamma_q and its invariants.
/// The ideal of the accepted Gamma_q is returned through `gamma_out` when given.
template <class F>
EntryLocusReport classify_entry_locus(const ProjectiveVariety<F>& X, std::uint64_t seed, const ClassifyOptions& opt = {},
                                      Ideal<F>* gamma_out = nullptr, Point<F>* q_out = nullptr) {
  using clock = std::chrono::steady_clock;
  const auto& K = X.field();
  const auto& budget = opt.budget;
  Rng rng(seed);
  EntryLocusReport rep;
  rep.key = X.meta.name;
  rep.seed = seed;
  rep.field = K.is_rational() ? "Q" : "Fp:" + std::to_string(K.characteristic());
  auto stage = [&](const std::string& name, auto&& fn) {
    auto t0 = clock::now();
    fn();
    rep.timings[name] += std::chrono::duration<double>(clock::now() - t0).count();
  };
  const int r = X.ambient();
  int n = X.meta.n;
  stage("invariants", [&] {
    auto h = hilbert_invariants(X.ideal, budget);
    n = h.projective_dim;
    rep.surface_degree = static_cast<int>(h.degree);
    if (n == 2) rep.sectional_genus = static_cast<int>(hyperplane_section_invariants(X.ideal, rng, budget).arithmetic_genus());
    if (n == 1) rep.sectional_genus = static_cast<int>(h.arithmetic_genus());
  });
  SecantProfile prof;
  stage("secant", [&] {
    if (X.param || !K.is_rational()) prof = secant_dims(X, 2, opt.secant_trials, rng, budget);
  });
  if (!prof.entries.empty() && prof.entries[1].dim != r)
    throw InvalidInput("classify_entry_locus: the variety does not have generic rank 2");
  const int sigma1 = prof.entries.empty() ? n : prof.entries[0].dim;
  rep.expected_gamma = sigma1 + n + 1 - r;
  if (n == 2) {
    const long long d = rep.surface_degree;
    rep.expected_degree = (d - 1) * (d - 2) - 2LL * rep.sectional_genus;
  }

  Ideal<F> gamma;
  Point<F> q;
  DimDegree dd;
  for (int attempt = 1;; ++attempt) {
    if (attempt > 5) throw GenericityFailure("classify_entry_locus: no general q found in 5 draws");
    rep.q_attempts = attempt;
    q.clear();
    for (int i = 0; i <= r; ++i) {
      auto c = K.random(rng);
      while (K.is_zero(c)) c = K.random(rng);
      q.push_back(c);
    }
    if (X.contains(q)) continue;
    stage("entry_locus", [&] { gamma = entry_locus_ideal(X, q, rng, opt.strategy, budget); });
    stage("degree", [&] { dd = reduced_dim_degree(gamma, rng, budget); });
    if (dd.dim == rep.expected_gamma) break;
  }
  rep.q = {};
  for (const auto& c : q) rep.q.push_back(K.to_string(c));
  rep.gamma = dd.dim;
  rep.degree = dd.degree;
  stage("degree", [&] { rep.scheme_degree = hilbert_invariants(gamma, budget).degree; });
  rep.degree_mismatch = rep.scheme_degree != rep.degree;
  stage("span", [&] { rep.ell = span_dim(gamma, rng, budget); });
  stage("components", [&] {
    if (rep.gamma == 1) {
      auto cd = curve_components(gamma, rng, budget);
      rep.components = cd.count;
      rep.component_degrees = cd.degrees;
    } else if (rep.gamma == 0) {
      rep.components = static_cast<int>(rep.degree);
      rep.component_degrees.assign(rep.components, 1);
    }
  });
  rep.type_irreducibility = rep.components == 1 ? "I" : "II";
  rep.degree_formula_ok = rep.expected_degree == rep.degree;
  rep.dimension_formula_ok = rep.expected_gamma == rep.gamma;
  stage("type_ab", [&] {
    if (rep.ell >= 1) {
      try {
        rep.type_ab = to_string(type_ab_test(X, gamma, opt.ab_trials, rng, budget));
      } catch (const BudgetExceeded&) {
        rep.type_ab = to_string(TypeAB::undetermined);
      }
    } else {
      rep.type_ab = to_string(TypeAB::undetermined);
    }
  });
  if (gamma_out) *gamma_out = gamma;
  if (q_out) *q_out = q;
  return rep;
}

/// Linear forms of span(V(I)) added to J.
template <class F>
Ideal<F> restrict_to_span(const Ideal<F>& J, const SpanInfo<F>& span) {
  Ideal<F> out = J;
  for (const auto& l : span.linear_forms) out.add(l.reordered(J.ring()));
  return out;
}

/// V(I) inside its span, in coordinates z with x = sum_j z_j p_j for the span's points p_j.
template <class F>
Ideal<F> in_span_coordinates(const Ideal<F>& I, const SpanInfo<F>& span) {
  const auto& K = I.ring()->field();
  const std::size_t n = I.ring()->nvars(), m = span.points.size();
  Matrix<F> S(K, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) S(i, j) = span.points[j][i];
  return pull_back(I, S, projective_ring(K, static_cast<int>(m) - 1));
}

/// Agreement of two curves on a common random hyperplane slice: same point count and the
/// saturated slice ideals contain each other.
template <class F>
bool same_reduced_slice(const Ideal<F>& A, const Ideal<F>& B, Rng& rng, const Budget& budget = {}) {
  const auto& K = A.ring()->field();
  const int n = A.ring()->nvars();
  std::vector<typename Polynomial<F>::Term> terms;
  for (int j = 0; j < n; ++j) terms.push_back({Monomial::variable(j), K.random(rng)});
  auto h = Polynomial<F>::from_terms(A.ring(), terms);
  Ideal<F> sa = A, sb = B;
  sa.add(h);
  sb.add(h.reordered(B.ring()));
  auto da = reduced_dim_degree(sa, rng, budget), db = reduced_dim_degree(sb, rng, budget);
  if (!(da == db) || da.dim != 0) return false;
  auto ra = saturate_irrelevant(sa, rng, budget), rb = saturate_irrelevant(sb, rng, budget);
  return ideal_contains(ra, rb, budget) && ideal_contains(rb, ra, budget);
}

}  // namespace el
