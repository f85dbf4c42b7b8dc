#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "el/parse.hpp"
#include "el/variety.hpp"

namespace el {

/// Field-independent contents of a variety file:
///   ring x0 .. xr over Q|Fp:<p>
///   param s0 .. sm          (optional)
///   gen: <polynomial>       (any number)
///   par: <polynomial>       (r+1 of them, in order)
///   meta: name=<..> d=<..> g=<..> n=<..>
struct VarietyText {
  std::vector<std::string> variables;
  FieldDescriptor field = FieldDescriptor::rationals();
  std::vector<std::string> parameters;
  std::vector<std::string> generators;
  std::vector<std::string> param_forms;
  VarietyMeta meta;
};

/// Parses the text form; ParseError carries the 1-based line number as its position.
VarietyText read_variety_text(std::istream& in);
VarietyText read_variety_file(const std::string& path);
std::string write_variety_text(const VarietyText& v);

template <class F>
ProjectiveVariety<F> materialize(const VarietyText& t, const F& K) {
  ProjectiveVariety<F> X;
  auto R = make_ring(K, t.variables, MonomialOrder::grevlex());
  X.ideal = Ideal<F>(R);
  for (const auto& g : t.generators) {
    auto p = parse_polynomial(g, R);
    if (!p.is_homogeneous()) throw InvalidInput("variety generator is not homogeneous: " + g);
    if (!p.is_zero()) X.ideal.add(p);
  }
  if (!t.param_forms.empty()) {
    if (t.param_forms.size() != t.variables.size())
      throw InvalidInput("a parametrization needs one form per ambient coordinate");
    Parametrization<F> P{make_ring(K, t.parameters, MonomialOrder::grevlex()), {}};
    for (const auto& f : t.param_forms) P.forms.push_back(parse_polynomial(f, P.params));
    X.param = P;
  }
  X.meta = t.meta;
  return X;
}

template <class F>
VarietyText to_text(const ProjectiveVariety<F>& X) {
  VarietyText t;
  t.variables = X.ring()->names();
  t.field = X.field().is_rational() ? FieldDescriptor::rationals() : FieldDescriptor::modular(X.field().characteristic());
  for (const auto& g : X.ideal.generators()) t.generators.push_back(g.to_string());
  if (X.param) {
    t.parameters = X.param->params->names();
    for (const auto& f : X.param->forms) t.param_forms.push_back(f.to_string());
  }
  t.meta = X.meta;
  return t;
}

}  // namespace el
