#include "el/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "el/catalog.hpp"
#include "el/segre.hpp"

namespace el {

namespace {

struct SeedOutcome {
  enum Kind { pass, fail, skip } kind = fail;
  std::string computed;
  std::string reason;
};

SeedOutcome verdict(bool ok, std::string computed, std::string reason = {}) {
  return {ok ? SeedOutcome::pass : SeedOutcome::fail, std::move(computed), ok ? std::string() : std::move(reason)};
}

SeedOutcome skipped(std::string reason) { return {SeedOutcome::skip, {}, std::move(reason)}; }

template <class F>
constexpr bool is_prime_field = std::is_same_v<F, PrimeField>;

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string describe(const EntryLocusReport& r) {
  std::ostringstream os;
  os << "gamma=" << r.gamma << " ell=" << r.ell << " degree=" << r.degree << " components=" << r.components
     << " type=" << r.type_irreducibility << "/" << r.type_ab;
  return os.str();
}

template <class F>
Point<F> random_point(const F& K, int n, Rng& rng) {
  Point<F> q;
  for (int i = 0; i < n; ++i) q.push_back(K.random(rng));
  return q;
}

// criterion 1
template <class F>
SeedOutcome scroll_entry_locus(const F& K, std::uint64_t seed, const Budget& budget) {
  auto X = build_catalog_variety("scroll12", seed, K);
  ClassifyOptions opt;
  opt.budget = budget;
  auto r = classify_entry_locus(X, seed, opt);
  bool ok = r.gamma == 1 && r.ell == 2 && r.degree == 2 && r.components == 1 && r.type_irreducibility == "I" &&
            r.type_ab == "A";
  return verdict(ok, describe(r));
}

// criterion 2
template <class F>
SeedOutcome cone_entry_locus(const F& K, std::uint64_t seed, const Budget& budget) {
  auto X = build_catalog_variety("cone_twisted_cubic", seed, K);
  ClassifyOptions opt;
  opt.budget = budget;
  Ideal<F> G;
  auto r = classify_entry_locus(X, seed, opt, &G);
  Rng rng(seed ^ 0xc0e);
  Point<F> v(5, K.zero());
  v[4] = K.one();
  ProjectiveVariety<F> V;
  V.ideal = G;
  // each line through v collapses to a point under projection from v
  auto img = project_ideal(G, annihilator(K, {v}, 5), rng, budget);
  auto dd = reduced_dim_degree(img, rng, budget);
  bool vertex = V.contains(v) && dd.dim == 0 && dd.degree == r.components;
  bool ok = r.degree == 2 && r.components == 2 && r.type_irreducibility == "II" && vertex;
  return verdict(ok, describe(r) + " vertex_on_every_component=" + (vertex ? "true" : "false"));
}

// criterion 3
template <class F>
SeedOutcome veronese_entry_locus(const F& K, std::uint64_t seed, const Budget& budget) {
  if constexpr (!is_prime_field<F>) {
    return skipped("component degrees need a prime field");
  } else {
    auto X = build_catalog_variety("veronese_proj4", seed, K);
    ClassifyOptions opt;
    opt.budget = budget;
    auto r = classify_entry_locus(X, seed, opt);
    bool ok = r.degree == 6 && r.components == 3 && r.type_irreducibility == "II" &&
              r.component_degrees == std::vector<int>{2, 2, 2};
    return verdict(ok, describe(r) + " component_degrees=" + join_ints(r.component_degrees));
  }
}

// criterion 4
template <class F>
SeedOutcome delpezzo_entry_locus(const F& K, std::uint64_t seed, const Budget& budget) {
  auto X = build_catalog_variety("delpezzo4", seed, K);
  ClassifyOptions opt;
  opt.budget = budget;
  Ideal<F> G;
  auto r = classify_entry_locus(X, seed, opt, &G);
  Rng rng(seed ^ 0xde1);
  auto span = span_info(G, rng, budget);
  bool section = span.ell == 3 && same_reduced_slice(G, restrict_to_span(X.ideal, span), rng, budget);
  int gamma_count = 0;
  if (span.ell == 3) gamma_count = segre_count_elliptic_quartic(in_span_coordinates(G, span), rng, budget).count;
  // explicit vertices on elliptic4 over the first prime where they are all rational
  std::vector<Point<PrimeField>> vertices;
  auto found = find_split_prime(primes_near_2_31(20), [&](const PrimeField& Kp) {
    Rng r2(seed);
    auto C = build_catalog_variety("elliptic4", seed, Kp);
    auto sc = segre_count_elliptic_quartic(C.ideal, r2, budget);
    if (sc.split) vertices = sc.vertices;
    return std::make_pair(sc.count, sc.split);
  });
  int vertex_ok = 0;
  if (found.prime) {
    PrimeField Kp(found.prime);
    auto C = build_catalog_variety("elliptic4", seed, Kp);
    Rng r3(seed ^ 0x5e9);
    for (const auto& o : vertices)
      if (is_segre_point(C.ideal, o, r3, budget).verdict && two_decompositions(C, o, r3, budget).positive_dimensional)
        ++vertex_ok;
  }
  bool ok = r.degree == 4 && r.components == 1 && r.ell == 3 && section && gamma_count == 4 && found.count == 4 &&
            found.prime != 0 && vertex_ok == 4;
  std::ostringstream os;
  os << describe(r) << " hyperplane_section=" << (section ? "true" : "false") << " segre_count_gamma=" << gamma_count
     << " segre_count_elliptic4=" << found.count << " vertices_verified=" << vertex_ok << " split_prime=" << found.prime;
  return verdict(ok, os.str());
}

// criterion 5
template <class F>
SeedOutcome degree_sweep(const F& K, std::uint64_t seed, const Budget& budget) {
  const std::vector<std::pair<const char*, long long>> expect = {
      {"scroll12", 2}, {"cone_twisted_cubic", 2}, {"veronese_proj4", 6}, {"delpezzo4", 4}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [key, deg] : expect) {
    ClassifyOptions opt;
    opt.budget = budget;
    opt.ab_trials = 0;
    auto r = classify_entry_locus(build_catalog_variety(key, seed, K), seed, opt);
    ok = ok && r.degree == deg && r.degree == r.expected_degree;
    os << key << ":" << r.degree << "(g=" << r.sectional_genus << ",formula=" << r.expected_degree << ") ";
  }
  auto s = os.str();
  s.pop_back();
  return verdict(ok, s);
}

// criterion 5, stretch tier
template <class F>
SeedOutcome k3_degree(const F& K, std::uint64_t seed, const Budget& budget) {
  if constexpr (!is_prime_field<F>) {
    return skipped("prime field only");
  } else {
    ClassifyOptions opt;
    opt.budget = budget;
    opt.ab_trials = 0;
    auto r = classify_entry_locus(build_catalog_variety("k3_23", seed, K), seed, opt);
    bool ok = r.degree == 12 && r.components == 1 && r.degree == r.expected_degree;
    return verdict(ok, describe(r) + " formula=" + std::to_string(r.expected_degree));
  }
}

// criterion 6
template <class F>
SeedOutcome dimension_formula(const F& K, std::uint64_t seed, const Budget& budget) {
  bool ok = true;
  std::ostringstream os;
  for (const char* key : {"scroll12", "cone_twisted_cubic", "veronese_proj4", "delpezzo4"}) {
    ClassifyOptions opt;
    opt.budget = budget;
    opt.ab_trials = 0;
    auto r = classify_entry_locus(build_catalog_variety(key, seed, K), seed, opt);
    ok = ok && r.gamma == 1 && r.expected_gamma == 1;
    os << key << ":gamma=" << r.gamma << "(formula=" << r.expected_gamma << ") ";
  }
  Rng rng(seed ^ 0xd1);
  auto C = build_catalog_variety("rnc3", seed, K);
  Point<F> q;
  do q = random_point(K, 4, rng);
  while (C.contains(q));
  auto D = two_decompositions(C, q, rng, budget);
  ok = ok && !D.positive_dimensional && D.pair_count >= 1;
  os << "rnc3:decomposition_locus=" << (D.positive_dimensional ? "positive-dimensional" : "finite");
  return verdict(ok, os.str());
}

// criterion 7
template <class F>
SeedOutcome rnc_identifiability(const F& K, std::uint64_t seed, const Budget& budget) {
  if constexpr (!is_prime_field<F>) {
    return skipped("explicit pairs need a prime field");
  } else {
    Rng rng(seed ^ 0x7);
    auto C = build_catalog_variety("rnc3", seed, K);
    auto a = normalized(K, sample_point(C, rng)), b = normalized(K, sample_point(C, rng));
    if (b < a) std::swap(a, b);
    auto same_pair = [&](const DecompositionSet<F>& D) {
      return !D.positive_dimensional && D.pair_count == 1 && D.pairs.size() == 1 && D.pairs[0].first == a &&
             D.pairs[0].second == b;
    };
    auto q = combine(K, {a, b}, {K.one(), K.random(rng)});
    bool first = same_pair(two_decompositions(C, q, rng, budget));
    auto A = ideal_of_points(C.ring(), {a, b}, budget);
    int on_ok = 0, off_ok = 0;
    for (int k = 0; k < 10; ++k) {
      auto o = combine(K, {a, b}, {K.random(rng), K.random(rng)});
      if (same_pair(two_decompositions(C, o, rng, budget)) && is_segre_point(A, o, rng, budget).verdict) ++on_ok;
    }
    for (int k = 0; k < 10; ++k) {
      auto o = random_point(K, 4, rng);
      if (!is_segre_point(A, o, rng, budget).verdict) ++off_ok;
    }
    bool ok = first && on_ok == 10 && off_ok == 10;
    std::ostringstream os;
    os << "pairs=" << (first ? 1 : 0) << " on_line_same_pair_and_segre=" << on_ok << "/10 off_line_not_segre=" << off_ok
       << "/10";
    return verdict(ok, os.str());
  }
}

// criterion 8
template <class F>
SeedOutcome defectivity(const F& K, std::uint64_t seed, const Budget& budget) {
  Rng rng(seed ^ 0x8);
  auto v = secant_dims(build_catalog_variety("veronese5", seed, K), 2, 3, rng, budget);
  bool ok = v.entries[1].dim == 4 && v.entries[1].defective;
  std::ostringstream os;
  os << "veronese5:sigma2=" << v.entries[1].dim << (v.entries[1].defective ? "(defective)" : "") << " ";
  for (int d = 3; d <= 6; ++d) {
    auto p = secant_dims(build_catalog_variety("rnc" + std::to_string(d), seed, K), 4, 3, rng, budget);
    os << "rnc" << d << ":";
    for (const auto& e : p.entries) {
      ok = ok && e.dim == std::min(2 * e.s - 1, d);
      os << e.dim << (e.s < 4 ? "," : " ");
    }
  }
  auto s = secant_dims(build_catalog_variety("scroll12", seed, K), 2, 3, rng, budget);
  ok = ok && s.entries[1].dim == 4 && s.r_gen && *s.r_gen == 2;
  os << "scroll12:sigma2=" << s.entries[1].dim << ",r_gen=" << (s.r_gen ? std::to_string(*s.r_gen) : "none");
  return verdict(ok, os.str());
}

// criterion 9
template <class F>
SeedOutcome kernel_properties(const F& K, std::uint64_t seed, const Budget& budget) {
  Rng rng(seed ^ 0x9);
  auto R = make_ring(K, indexed_names("x", 4));
  const std::vector<std::vector<const char*>> samples = {
      {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"},
      {"x0^2 + x1^2 - x2*x3", "x0*x1 + 2*x2^2 - x3^2 + x0*x3"},
      {"x0^3 - x1*x2*x3", "x1^2*x0 - x2^3 + x3^3"},
      {"x0*x1", "x1*x2", "x2*x3", "x3*x0"},
  };
  auto ideal = [&](const std::vector<const char*>& gens) {
    Ideal<F> I(R);
    for (auto g : gens) I.add(parse_polynomial(g, R));
    return I;
  };
  int fails = 0;
  std::ostringstream os;
  // S-pair closure and reducedness of every basis
  int bases = 0;
  for (const auto& gens : samples)
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
      auto G = groebner_basis(ideal(gens), order, budget);
      ++bases;
      if (!s_pairs_reduce_to_zero(G) || !is_reduced_basis(G)) ++fails;
    }
  os << "bases=" << bases;
  // eliminants lie in the ideal
  {
    auto S = make_ring(K, {"s", "t", "y0", "y1", "y2", "y3"});
    Ideal<F> J(S);
    for (auto g : {"y0 - s^3", "y1 - s^2*t", "y2 - s*t^2", "y3 - t^3"}) J.add(parse_polynomial(g, S));
    auto E = eliminate(J, 2, budget);
    auto G = groebner_basis(J, MonomialOrder::grevlex(), budget);
    std::vector<int> map{2, 3, 4, 5};
    for (const auto& e : E.generators())
      if (!G.contains(e.in_ring(S, map))) ++fails;
    os << " eliminants=" << E.size();
  }
  // saturation contains I and is idempotent
  for (const auto& gens : samples) {
    auto I = ideal(gens);
    auto x0 = Polynomial<F>::variable(R, 0);
    auto S1 = saturate_by_element(I, x0, budget);
    auto S2 = saturate_by_element(S1, x0, budget);
    if (!ideal_contains(S1, I, budget) || !same_ideal(S1, S2, budget)) ++fails;
  }
  // Hilbert data invariant under coordinate changes
  for (const auto& gens : samples) {
    auto I = ideal(gens);
    auto h = hilbert_invariants(I, budget);
    for (int t = 0; t < 3; ++t) {
      auto M = random_invertible(K, 4, rng);
      auto h2 = hilbert_invariants(pull_back(I, M, R), budget);
      if (h2.projective_dim != h.projective_dim || h2.degree != h.degree ||
          h2.hilbert_polynomial_coefficients() != h.hilbert_polynomial_coefficients())
        ++fails;
    }
  }
  // absolute factor counts
  auto P2 = make_ring(K, {"x", "y"});
  std::vector<int> counts;
  for (auto [text, expect] : std::vector<std::pair<const char*, int>>{{"x^2 - y^2", 2}, {"x^2 + y^2", 2}, {"y^2 - x^3 + x", 1}}) {
    auto f = parse_polynomial(text, P2);
    int k = absolute_factor_count(f, rng, budget);
    counts.push_back(k);
    if (k != expect) ++fails;
    for (int t = 0; t < 3; ++t) {
      // x -> a x + b y + c, y -> d x + e y + g with an invertible linear part
      std::vector<Polynomial<F>> images;
      for (;;) {
        Matrix<F> M(K, 2, 2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) M(i, j) = K.random(rng);
        if (K.is_zero(determinant(M))) continue;
        for (int i = 0; i < 2; ++i)
          images.push_back(Polynomial<F>::variable(P2, 0).scaled(M(i, 0)) + Polynomial<F>::variable(P2, 1).scaled(M(i, 1)) +
                           Polynomial<F>::constant(P2, K.random(rng)));
        break;
      }
      if (absolute_factor_count(f.substitute(P2, images), rng, budget) != k) ++fails;
    }
  }
  os << " factor_counts=" << join_ints(counts) << " violations=" << fails;
  return verdict(fails == 0, os.str());
}

// criterion 10
template <class F>
SeedOutcome pair_segre(const F& K, std::uint64_t seed, const Budget& budget) {
  Rng rng(seed ^ 0x10);
  auto R = projective_ring(K, 3);
  auto ideal = [&](std::initializer_list<const char*> gens) {
    Ideal<F> I(R);
    for (auto g : gens) I.add(parse_polynomial(g, R));
    return I;
  };
  auto off_both = [&](const Ideal<F>& Y, const Ideal<F>& T) {
    ProjectiveVariety<F> a, b;
    a.ideal = Y;
    b.ideal = T;
    for (;;) {
      auto o = random_point(K, 4, rng);
      if (!a.contains(o) && !b.contains(o)) return o;
    }
  };
  int skew_false = 0, y9_false = 0, constructed_true = 0;
  auto L1 = ideal({"x0", "x1"}), L2 = ideal({"x2", "x3"});
  for (int k = 0; k < 10; ++k)
    if (!pair_segre_test(L1, L2, off_both(L1, L2), rng, false, budget)) ++skew_false;
  // conic in {x3 = 0} and its central projection from o into the plane {h = 0}
  for (int k = 0; k < 3; ++k) {
    auto o = random_point(K, 4, rng), h = random_point(K, 4, rng);
    auto P = detail::monomial_param(K, {"s", "t"}, {"s^2", "s*t", "t^2", "0"});
    auto Y = implicitize(P, budget);
    auto ho = K.zero();
    for (int i = 0; i < 4; ++i) ho = K.add(ho, K.mul(h[i], o[i]));
    Polynomial<F> hy(P.params);
    for (int i = 0; i < 4; ++i) hy += P.forms[i].scaled(h[i]);
    Parametrization<F> Q{P.params, {}};
    for (int i = 0; i < 4; ++i) Q.forms.push_back(P.forms[i].scaled(ho) - hy.scaled(o[i]));
    auto T = implicitize(Q, budget);
    std::vector<int> id{0, 1, 2, 3};
    Ideal<F> Yr(R), Tr(R);
    for (const auto& g : Y.generators()) Yr.add(g.in_ring(R, id));
    for (const auto& g : T.generators()) Tr.add(g.in_ring(R, id));
    if (pair_segre_test(Yr, Tr, o, rng, true, budget)) ++constructed_true;
  }
  // a line (span of codimension 2) and a conic, together spanning P^3
  auto Y = ideal({"x2", "x3"}), T = ideal({"x0 - x1", "x1*x3 - x2^2 + x0*x2"});
  for (int k = 0; k < 10; ++k)
    if (!pair_segre_test(Y, T, off_both(Y, T), rng, false, budget)) ++y9_false;
  std::ostringstream os;
  os << "skew_lines_false=" << skew_false << "/10 projected_conic_true=" << constructed_true
     << "/3 codim2_span_false=" << y9_false << "/10";
  return verdict(skew_false == 10 && constructed_true == 3 && y9_false == 10, os.str());
}

struct CheckSpec {
  std::string id;
  int criterion;
  std::string anchor;
  std::string expected;
  std::string field_override;  // empty: use the run's field
  std::function<SeedOutcome(const FieldDescriptor&, std::uint64_t, const Budget&)> run;
};

template <template <class> class Wrapper>
auto dispatch() {
  return [](const FieldDescriptor& d, std::uint64_t seed, const Budget& b) {
    return with_field(d, [&](const auto& K) { return Wrapper<std::decay_t<decltype(K)>>::run(K, seed, b); });
  };
}

#define EL_CHECK_WRAPPER(name)                                                                \
  template <class F>                                                                          \
  struct W_##name {                                                                           \
    static SeedOutcome run(const F& K, std::uint64_t s, const Budget& b) { return name(K, s, b); } \
  };

EL_CHECK_WRAPPER(scroll_entry_locus)
EL_CHECK_WRAPPER(cone_entry_locus)
EL_CHECK_WRAPPER(veronese_entry_locus)
EL_CHECK_WRAPPER(delpezzo_entry_locus)
EL_CHECK_WRAPPER(degree_sweep)
EL_CHECK_WRAPPER(k3_degree)
EL_CHECK_WRAPPER(dimension_formula)
EL_CHECK_WRAPPER(rnc_identifiability)
EL_CHECK_WRAPPER(defectivity)
EL_CHECK_WRAPPER(kernel_properties)
EL_CHECK_WRAPPER(pair_segre)

#undef EL_CHECK_WRAPPER

const std::vector<CheckSpec>& all_checks() {
  static const std::vector<CheckSpec> checks = {
      {"c01-scroll", 1, "the general entry locus of the cubic scroll is an irreducible conic; the scroll is of type A",
       "gamma=1 ell=2 degree=2 components=1 type=I/A", "", dispatch<W_scroll_entry_locus>()},
      {"c02-cone", 2, "the entry locus of the cone over the twisted cubic is two lines through the vertex; type II",
       "degree=2 components=2 type=II vertex_on_every_component=true", "", dispatch<W_cone_entry_locus>()},
      {"c03-veronese-projection", 3, "the entry locus of a projected Veronese surface is three smooth conics",
       "degree=6 components=3 type=II component_degrees=[2,2,2]", "", dispatch<W_veronese_entry_locus>()},
      {"c04-delpezzo", 4,
       "the entry locus of a quartic del Pezzo surface is a hyperplane section with four Segre points",
       "degree=4 components=1 ell=3 hyperplane_section=true segre_count=4 vertices_verified=4", "",
       dispatch<W_delpezzo_entry_locus>()},
      {"c05-degree-formula", 5, "reduced degree of the entry locus equals (d-1)(d-2)-2g",
       "scroll12:2 cone_twisted_cubic:2 veronese_proj4:6 delpezzo4:4", "", dispatch<W_degree_sweep>()},
      {"c05s-k3-degree", 5, "the entry locus of a (2,3) complete intersection in P^4 is irreducible of degree 12",
       "degree=12 components=1", "", dispatch<W_k3_degree>()},
      {"c06-dimension-formula", 6, "gamma = dim sigma_1 + n + 1 - r; finite decomposition locus for the twisted cubic",
       "gamma=1 for every surface; rnc3 finite", "", dispatch<W_dimension_formula>()},
      {"c07-rnc-identifiability", 7,
       "a general point has one decomposition on the twisted cubic; Segre points of a pair are its secant line",
       "pairs=1 on_line=10/10 off_line=10/10", "", dispatch<W_rnc_identifiability>()},
      {"c08-defectivity", 8, "Terracini dimensions: Veronese surface defective, rational normal curves min(2s-1,d), scroll fills P^4",
       "veronese5:sigma2=4(defective) rnc_d:min(2s-1,d) scroll12:sigma2=4,r_gen=2", "", dispatch<W_defectivity>()},
      {"c09-kernel-properties", 9, "kernel properties: closure, membership, idempotence, invariance, factor counts",
       "violations=0 factor_counts=[2,2,1]", "", dispatch<W_kernel_properties>()},
      {"c10-pair-segre", 10, "no pair-Segre points for skew lines or a codimension-2 span; constructed pair recovered",
       "skew=10/10 false, constructed=3/3 true, codim2=10/10 false", "", dispatch<W_pair_segre>()},
      {"c01q-scroll-rationals", 1, "scroll entry locus recomputed over the rationals",
       "gamma=1 ell=2 degree=2 components=1 type=I/A", "Q", dispatch<W_scroll_entry_locus>()},
      {"c08q-defectivity-rationals", 8, "Terracini dimensions recomputed over the rationals",
       "veronese5:sigma2=4(defective) rnc_d:min(2s-1,d) scroll12:sigma2=4,r_gen=2", "Q", dispatch<W_defectivity>()},
  };
  return checks;
}

bool in_suite(const CheckSpec& c, const std::string& suite) {
  const bool stretch = c.id == "c05s-k3-degree" || !c.field_override.empty();
  return suite == "stretch" ? stretch : !stretch;
}

}  // namespace

std::vector<std::string> suite_check_ids(const std::string& suite) {
  if (suite != "core" && suite != "stretch") throw InvalidInput("unknown suite '" + suite + "'");
  std::vector<std::string> ids;
  for (const auto& c : all_checks())
    if (in_suite(c, suite)) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

CheckRecord run_check(const std::string& id, const RunConfig& cfg) {
  const CheckSpec* spec = nullptr;
  for (const auto& c : all_checks())
    if (c.id == id) spec = &c;
  if (!spec) throw InvalidInput("unknown check '" + id + "'");
  CheckRecord rec;
  rec.id = spec->id;
  rec.criterion = spec->criterion;
  rec.anchor = spec->anchor;
  rec.expected = spec->expected;
  auto t0 = std::chrono::steady_clock::now();
  int skips = 0;
  std::string first_computed, pass_computed, first_reason;
  for (int i = 0; i < cfg.seeds; ++i) {
    const std::uint64_t seed = cfg.master_seed + static_cast<std::uint64_t>(i);
    auto desc = FieldDescriptor::parse(spec->field_override.empty() ? cfg.field : spec->field_override, seed);
    rec.seeds.push_back(seed);
    rec.fields.push_back(desc.to_string());
    SeedOutcome out;
    try {
      out = spec->run(desc, seed, cfg.budget);
    } catch (const BudgetExceeded& e) {
      rec.budget_exhausted = true;
      out = {SeedOutcome::fail, {}, std::string("budget exhausted: ") + e.what()};
    } catch (const std::exception& e) {
      out = {SeedOutcome::fail, {}, e.what()};
    }
    if (out.kind == SeedOutcome::skip) {
      ++skips;
      if (first_reason.empty()) first_reason = out.reason;
      continue;
    }
    if (i == 0 || first_computed.empty()) first_computed = out.computed;
    if (out.kind == SeedOutcome::pass) {
      ++rec.passed_seeds;
      if (pass_computed.empty()) pass_computed = out.computed;
    } else if (first_reason.empty()) {
      first_reason = out.reason.empty() ? "seed " + std::to_string(seed) + ": " + out.computed
                                        : "seed " + std::to_string(seed) + ": " + out.reason;
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rec.computed = pass_computed.empty() ? first_computed : pass_computed;
  if (skips == cfg.seeds) {
    rec.status = "skipped";
    rec.reason = first_reason;
  } else if (rec.passed_seeds >= std::min(cfg.required, cfg.seeds - skips)) {
    rec.status = "pass";
  } else {
    rec.status = "fail";
    rec.reason = first_reason;
  }
  return rec;
}

SuiteReport run_suite(const RunConfig& cfg) {
  SuiteReport rep;
  rep.suite = cfg.suite;
  auto ids = suite_check_ids(cfg.suite);
  rep.checks.resize(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) rep.checks[i] = run_check(ids[i], cfg);
  };
  const int n = std::max(1, std::min<int>(cfg.workers, static_cast<int>(ids.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& c : rep.checks) {
    if (c.status == "pass") ++rep.passed;
    else if (c.status == "fail") ++rep.failed;
    else ++rep.skipped;
  }
  return rep;
}

}  // namespace el
