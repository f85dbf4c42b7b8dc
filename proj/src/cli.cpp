#include "el/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "el/catalog.hpp"
#include "el/rank_secant.hpp"
#include "el/segre.hpp"
#include "el/variety_io.hpp"

namespace el {

using nlohmann::json;

namespace {

json to_json(const CheckRecord& c, bool timings) {
  json j = {{"id", c.id},
            {"criterion", c.criterion},
            {"anchor", c.anchor},
            {"expected", c.expected},
            {"computed", c.computed},
            {"status", c.status},
            {"reason", c.reason},
            {"budget_exhausted", c.budget_exhausted},
            {"fields", c.fields},
            {"seeds", c.seeds},
            {"passed_seeds", c.passed_seeds}};
  if (timings) j["seconds"] = c.seconds;
  return j;
}

json to_json(const EntryLocusReport& r, bool timings) {
  json j = {{"key", r.key},
            {"seed", r.seed},
            {"field", r.field},
            {"q", r.q},
            {"gamma", r.gamma},
            {"ell", r.ell},
            {"degree", r.degree},
            {"scheme_degree", r.scheme_degree},
            {"degree_mismatch", r.degree_mismatch},
            {"components", r.components},
            {"component_degrees", r.component_degrees},
            {"type_irreducibility", r.type_irreducibility},
            {"type_ab", r.type_ab},
            {"surface_degree", r.surface_degree},
            {"sectional_genus", r.sectional_genus},
            {"expected_degree", r.expected_degree},
            {"degree_formula_ok", r.degree_formula_ok},
            {"expected_gamma", r.expected_gamma},
            {"dimension_formula_ok", r.dimension_formula_ok},
            {"q_attempts", r.q_attempts}};
  if (timings) j["timings"] = r.timings;
  return j;
}

// Where a variety comes from: a catalog key or a variety file.
struct VarietySource {
  std::string key;
  std::optional<VarietyText> text;
};

VarietySource load_source(const std::string& name) {
  auto keys = catalog_keys();
  if (std::find(keys.begin(), keys.end(), name) != keys.end()) return {name, std::nullopt};
  std::ifstream probe(name);
  if (!probe) throw InvalidInput("'" + name + "' is neither a catalog key nor a readable file");
  return {name, read_variety_file(name)};
}

// Field for a run: catalog varieties use --field; files use their own field unless --field was given.
FieldDescriptor resolve_field(const VarietySource& src, const std::string& field, bool field_given,
                              std::uint64_t seed) {
  if (src.text && !field_given) return src.text->field;
  return FieldDescriptor::parse(field, seed);
}

template <class F>
ProjectiveVariety<F> build(const VarietySource& src, std::uint64_t seed, const F& K) {
  if (!src.text) return build_catalog_variety(src.key, seed, K);
  auto X = materialize(*src.text, K);
  if (X.meta.name.empty()) X.meta.name = src.key;
  return X;
}

template <class F>
Point<F> point_off(const F& K, int n, Rng& rng, std::initializer_list<const ProjectiveVariety<F>*> vs) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Point<F> q;
    for (int i = 0; i < n; ++i) q.push_back(K.random(rng));
    bool off = true;
    for (auto v : vs) off = off && !v->contains(q);
    if (off) return q;
  }
  throw GenericityFailure("could not draw a point off the varieties");
}

template <class F>
std::vector<std::string> point_strings(const F& K, const Point<F>& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(K.to_string(c));
  return out;
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!path.empty()) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write '" + path + "'");
    f << text;
  }
}

Budget make_budget(std::size_t max_pairs, std::size_t max_terms, double max_seconds) {
  if (max_pairs == 0 || max_terms == 0 || max_seconds < 0) throw InvalidInput("budgets must be positive");
  Budget b;
  b.max_pairs = max_pairs;
  b.max_basis_terms = max_terms;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000));
  return b;
}

}  // namespace

std::string suite_report_json(const SuiteReport& rep, bool timings) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c, timings));
  json j = {{"suite", rep.suite},
            {"version", rep.version},
            {"checks", checks},
            {"summary", {{"passed", rep.passed}, {"failed", rep.failed}, {"skipped", rep.skipped}}}};
  return j.dump(2) + "\n";
}

std::string entry_locus_report_json(const EntryLocusReport& rep, bool timings) {
  return to_json(rep, timings).dump(2) + "\n";
}

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entry loci, secant varieties and Segre points of small projective varieties", "el"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string field = "fp:auto", out_path, variety, order = "grevlex", input, suite = "core", y_key, t_key;
  std::uint64_t seed = 1;
  int max_s = 4, trials = 3, seeds = 5, required = 4, workers = 1;
  std::size_t max_pairs = Budget{}.max_pairs, max_terms = Budget{}.max_basis_terms;
  double max_seconds = 0;
  bool no_timings = false;
  std::string strategy = "implicit";

  auto common = [&](CLI::App* sub, bool with_variety) {
    sub->add_option("--seed", seed, "seed for random choices")->capture_default_str();
    sub->add_option("--field", field, "Q | fp:<p> | fp:auto")->capture_default_str();
    sub->add_option("--out", out_path, "also write the report to this file");
    sub->add_option("--max-pairs", max_pairs, "Groebner pair budget")->capture_default_str();
    sub->add_option("--max-terms", max_terms, "Groebner basis size budget")->capture_default_str();
    sub->add_option("--time-limit", max_seconds, "seconds per Groebner basis, 0 for none")->capture_default_str();
    if (with_variety) sub->add_option("--variety", variety, "catalog key or variety file")->required();
  };

  auto* cat = app.add_subcommand("catalog", "list catalog varieties");
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a variety file");
  gb->add_option("--input", input, "variety file")->required();
  gb->add_option("--order", order, "grevlex | lex | block:k")->capture_default_str();
  common(gb, false);
  auto* el_cmd = app.add_subcommand("entry-locus", "classify the entry locus of a surface in P^4");
  common(el_cmd, true);
  el_cmd->add_option("--strategy", strategy, "implicit | parametrized | both")->capture_default_str();
  el_cmd->add_flag("--no-timings", no_timings, "leave timing fields out of the report");
  auto* sec = app.add_subcommand("secant-dims", "secant dimensions by Terracini's lemma");
  common(sec, true);
  sec->add_option("--max-s", max_s, "largest s")->capture_default_str();
  sec->add_option("--trials", trials, "random draws per s")->capture_default_str();
  auto* dec = app.add_subcommand("decomp", "two-point decompositions of a random point");
  common(dec, true);
  auto* seg = app.add_subcommand("segre", "singular quadrics through an elliptic quartic curve");
  common(seg, false);
  seg->add_option("--curve", variety, "catalog key or variety file")->required();
  auto* pair = app.add_subcommand("pair-segre", "is pi_o(T) contained in pi_o(Y) for a random o");
  common(pair, false);
  pair->add_option("--y", y_key, "catalog key or variety file")->required();
  pair->add_option("--t", t_key, "catalog key or variety file")->required();
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  common(ver, false);
  ver->add_option("--suite", suite, "core | stretch")->capture_default_str();
  ver->add_option("--seeds", seeds, "master seeds per check")->capture_default_str();
  ver->add_option("--required", required, "seeds that must pass")->capture_default_str();
  ver->add_option("--workers", workers, "checks run concurrently")->capture_default_str();
  ver->add_flag("--no-timings", no_timings, "leave timing fields out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "el: " << e.what() << "\n";
    return exit_usage;
  }
  const bool field_given = [&] {
    for (auto* sub : app.get_subcommands())
      if (auto* o = sub->get_option_no_throw("--field"); o && o->count()) return true;
    return false;
  }();

  try {
    const Budget budget = make_budget(max_pairs, max_terms, max_seconds);

    if (app.got_subcommand(cat)) {
      json list = json::array();
      for (const auto& key : catalog_keys()) {
        auto m = catalog_meta(key);
        list.push_back({{"key", key}, {"n", m.n}, {"d", m.d}, {"g", m.g}});
      }
      emit(list, "", out);
      return exit_pass;
    }

    if (app.got_subcommand(gb)) {
      auto text = read_variety_file(input);
      auto desc = field_given ? FieldDescriptor::parse(field, seed) : text.field;
      auto ord = MonomialOrder::parse(order);
      return with_field(desc, [&](const auto& K) {
        auto X = materialize(text, K);
        auto R = make_ring(K, text.variables, ord);
        Ideal<std::decay_t<decltype(K)>> I(R);
        for (const auto& g : X.ideal.generators()) I.add(g.reordered(R));
        auto G = groebner_basis(I, ord, budget);
        std::vector<std::string> basis;
        for (const auto& g : G.elements()) basis.push_back(g.to_string());
        auto h = hilbert_invariants(X.ideal, budget);
        emit({{"field", desc.to_string()},
              {"order", order},
              {"basis", basis},
              {"projective_dim", h.projective_dim},
              {"degree", h.degree},
              {"hilbert_polynomial", h.hilbert_polynomial_coefficients()}},
             out_path, out);
        return static_cast<int>(exit_pass);
      });
    }

    if (app.got_subcommand(el_cmd)) {
      auto src = load_source(variety);
      auto desc = resolve_field(src, field, field_given, seed);
      ClassifyOptions opt;
      opt.budget = budget;
      if (strategy == "implicit") opt.strategy = EntryLocusStrategy::implicit;
      else if (strategy == "parametrized") opt.strategy = EntryLocusStrategy::parametrized;
      else if (strategy == "both") opt.strategy = EntryLocusStrategy::both;
      else throw CLI::ValidationError("--strategy", "unknown strategy '" + strategy + "'");
      auto rep = with_field(desc, [&](const auto& K) { return classify_entry_locus(build(src, seed, K), seed, opt); });
      if (src.text) rep.key = variety;
      const std::string text = entry_locus_report_json(rep, !no_timings);
      out << text;
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidInput("cannot write '" + out_path + "'");
        f << text;
      }
      return exit_pass;
    }

    if (app.got_subcommand(sec)) {
      auto src = load_source(variety);
      auto desc = resolve_field(src, field, field_given, seed);
      if (max_s < 1 || trials < 1) throw CLI::ValidationError("--max-s/--trials", "must be positive");
      return with_field(desc, [&](const auto& K) {
        Rng rng(seed);
        auto X = build(src, seed, K);
        auto p = secant_dims(X, max_s, trials, rng, budget);
        json entries = json::array();
        for (const auto& e : p.entries)
          entries.push_back({{"s", e.s}, {"dim", e.dim}, {"expected", e.expected}, {"defective", e.defective}});
        json j = {{"variety", variety}, {"field", desc.to_string()}, {"seed", seed}, {"ambient", X.ambient()},
                  {"entries", entries}, {"r_gen", p.r_gen ? json(*p.r_gen) : json(nullptr)}};
        emit(j, out_path, out);
        return static_cast<int>(exit_pass);
      });
    }

    if (app.got_subcommand(dec)) {
      auto src = load_source(variety);
      auto desc = resolve_field(src, field, field_given, seed);
      return with_field(desc, [&](const auto& K) {
        Rng rng(seed);
        auto X = build(src, seed, K);
        auto q = point_off(K, X.ambient() + 1, rng, {&X});
        auto D = two_decompositions(X, q, rng, budget);
        json pairs = json::array();
        for (const auto& [a, b] : D.pairs) pairs.push_back({point_strings(K, a), point_strings(K, b)});
        json j = {{"variety", variety},
                  {"field", desc.to_string()},
                  {"seed", seed},
                  {"q", point_strings(K, q)},
                  {"positive_dimensional", D.positive_dimensional},
                  {"pair_count", D.pair_count},
                  {"pairs", pairs},
                  {"all_explicit", D.all_explicit}};
        emit(j, out_path, out);
        return static_cast<int>(exit_pass);
      });
    }

    if (app.got_subcommand(seg)) {
      auto src = load_source(variety);
      auto desc = resolve_field(src, field, field_given, seed);
      json j = with_field(desc, [&](const auto& K) {
        Rng rng(seed);
        auto C = build(src, seed, K);
        auto sc = segre_count_elliptic_quartic(C.ideal, rng, budget);
        json vertices = json::array();
        for (const auto& v : sc.vertices) vertices.push_back(point_strings(K, v));
        return json{{"curve", variety}, {"field", desc.to_string()}, {"seed", seed},     {"count", sc.count},
                    {"generic", sc.generic}, {"split", sc.split},       {"vertices", vertices}};
      });
      // vertices need all singular members over the field; look for a prime where they are
      if (!desc.is_rational() && !j["split"].get<bool>()) {
        json vertices = json::array();
        auto found = find_split_prime(primes_near_2_31(20), [&](const PrimeField& K) {
          Rng rng(seed);
          auto sc = segre_count_elliptic_quartic(build(src, seed, K).ideal, rng, budget);
          if (sc.split) {
            vertices = json::array();
            for (const auto& v : sc.vertices) vertices.push_back(point_strings(K, v));
          }
          return std::make_pair(sc.count, sc.split);
        });
        j["split_search"] = {{"prime", found.prime ? json("Fp:" + std::to_string(found.prime)) : json(nullptr)},
                             {"tried", found.tried},
                             {"vertices", vertices}};
      }
      emit(j, out_path, out);
      return exit_pass;
    }

    if (app.got_subcommand(pair)) {
      auto ys = load_source(y_key), ts = load_source(t_key);
      auto desc = resolve_field(ys, field, field_given, seed);
      return with_field(desc, [&](const auto& K) {
        Rng rng(seed);
        auto Y = build(ys, seed, K);
        auto T = build(ts, seed, K);
        if (Y.ambient() != T.ambient()) throw InvalidInput("the two curves live in different ambient spaces");
        // same coordinates for both
        std::vector<int> id(Y.ambient() + 1);
        for (int i = 0; i <= Y.ambient(); ++i) id[i] = i;
        Ideal<std::decay_t<decltype(K)>> Tr(Y.ring());
        for (const auto& g : T.ideal.generators()) Tr.add(g.in_ring(Y.ring(), id));
        T.ideal = Tr;
        auto o = point_off(K, Y.ambient() + 1, rng, {&Y, &T});
        bool v = pair_segre_test(Y.ideal, T.ideal, o, rng, false, budget);
        emit({{"y", y_key}, {"t", t_key}, {"field", desc.to_string()}, {"seed", seed}, {"o", point_strings(K, o)},
              {"contained", v}},
             out_path, out);
        return static_cast<int>(exit_pass);
      });
    }

    if (app.got_subcommand(ver)) {
      RunConfig cfg;
      cfg.field = field;
      cfg.master_seed = seed;
      cfg.seeds = seeds;
      cfg.required = required;
      cfg.workers = workers;
      cfg.suite = suite;
      cfg.budget = budget;
      if (seeds < 1 || required < 1 || required > seeds || workers < 1)
        throw CLI::ValidationError("--seeds/--required/--workers", "need 1 <= required <= seeds and workers >= 1");
      FieldDescriptor::parse(field, seed);  // validate early
      auto rep = run_suite(cfg);
      const std::string text = suite_report_json(rep, !no_timings);
      out << text;
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidInput("cannot write '" + out_path + "'");
        f << text;
      }
      for (const auto& c : rep.checks)
        if (c.status == "fail") err << "el: " << c.id << " failed: " << c.reason << "\n";
      if (rep.failed == 0) return exit_pass;
      for (const auto& c : rep.checks)
        if (c.status == "fail" && !c.budget_exhausted) return exit_check_failed;
      return exit_budget;
    }
  } catch (const CLI::ValidationError& e) {
    err << "el: " << e.what() << "\n";
    return exit_usage;
  } catch (const BudgetExceeded& e) {
    err << "el: budget exhausted: " << e.what() << "\n";
    return exit_budget;
  } catch (const ParseError& e) {
    err << "el: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidInput& e) {
    err << "el: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "el: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_usage;
}

}  // namespace el
