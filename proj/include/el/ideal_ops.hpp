#pragma once

#include <string>
#include <vector>

#include "el/groebner.hpp"

namespace el {

/// Ring over the same field with `extra` prepended to the variables of `base`.
template <class F>
RingPtr<F> prepend_variables(const Ring<F>& base, const std::vector<std::string>& extra,
                             MonomialOrder order) {
  std::vector<std::string> names = extra;
  for (const auto& n : base.names()) names.push_back(n);
  return make_ring(base.field(), names, order);
}

/// Fresh variable name not clashing with the ring's names.
template <class F>
std::string fresh_name(const Ring<F>& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; ring.index_of(name) >= 0; ++k) name = stem + "_" + std::to_string(k);
  return name;
}

/// I ∩ K[x_k, ..., x_{n-1}], returned in the ring of the remaining variables (grevlex).
/// With k = 0 this is the reduced grevlex basis of I itself.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, int k, const Budget& budget = {}) {
  const auto& R = *I.ring();
  if (k < 0 || k > R.nvars()) throw InvalidInput("eliminate: bad variable count");
  if (k == 0) return groebner_basis(I, MonomialOrder::grevlex(), budget).as_ideal();
  auto G = groebner_basis(I, MonomialOrder::block(k), budget);
  std::vector<std::string> rest(R.names().begin() + k, R.names().end());
  auto sub = make_ring(R.field(), rest, MonomialOrder::grevlex());
  std::vector<int> map(R.nvars(), -1);
  for (int i = k; i < R.nvars(); ++i) map[i] = i - k;
  Ideal<F> out(sub);
  for (const auto& g : G.elements()) {
    bool free = true;
    for (int i = 0; i < k && free; ++i)
      if (g.uses_variable(i)) free = false;
    if (free) out.add(g.in_ring(sub, map));
  }
  return out;
}

/// Eliminates an arbitrary set of variables (by index), keeping the others in their order.
template <class F>
Ideal<F> eliminate_variables(const Ideal<F>& I, const std::vector<int>& vars,
                             const Budget& budget = {}) {
  const auto& R = *I.ring();
  std::vector<char> drop(R.nvars(), 0);
  for (int v : vars) drop.at(v) = 1;
  std::vector<std::string> names;
  std::vector<int> map(R.nvars());
  int k = 0;
  for (int v : vars) {
    map[v] = k++;
    names.push_back(R.names()[v]);
  }
  for (int i = 0; i < R.nvars(); ++i)
    if (!drop[i]) {
      map[i] = k++;
      names.push_back(R.names()[i]);
    }
  auto permuted = make_ring(R.field(), names, MonomialOrder::grevlex());
  return eliminate(I.mapped(permuted, map), static_cast<int>(vars.size()), budget);
}

/// (I : g^∞) via an added variable w: eliminate w from I + (w*g - 1).
template <class F>
Ideal<F> saturate_by_element(const Ideal<F>& I, const Polynomial<F>& g, const Budget& budget = {}) {
  const auto& R = *I.ring();
  std::string w = fresh_name(R, "w");
  auto big = prepend_variables(R, {w}, MonomialOrder::grevlex());
  std::vector<int> shift(R.nvars());
  for (int i = 0; i < R.nvars(); ++i) shift[i] = i + 1;
  Ideal<F> J = I.mapped(big, shift);
  auto wg = Polynomial<F>::variable(big, 0) * g.in_ring(big, shift);
  J.add(wg - Polynomial<F>::constant(big, big->field().one()));
  Ideal<F> E = eliminate(J, 1, budget);
  return Ideal<F>(I.ring(), [&] {
    std::vector<Polynomial<F>> out;
    for (const auto& e : E.generators()) out.push_back(e.reordered(I.ring()));
    return out;
  }());
}

/// I ∩ J via u*I + (1-u)*J, eliminating u.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J, const Budget& budget = {}) {
  const auto& R = *I.ring();
  if (!R.same_as(*J.ring())) throw RingMismatch("intersect: ideals in different rings");
  std::string u = fresh_name(R, "u");
  auto big = prepend_variables(R, {u}, MonomialOrder::grevlex());
  std::vector<int> shift(R.nvars());
  for (int i = 0; i < R.nvars(); ++i) shift[i] = i + 1;
  auto U = Polynomial<F>::variable(big, 0);
  auto one_minus_u = Polynomial<F>::constant(big, big->field().one()) - U;
  Ideal<F> K(big);
  for (const auto& g : I.generators()) K.add(U * g.in_ring(big, shift));
  for (const auto& g : J.generators()) K.add(one_minus_u * g.in_ring(big, shift));
  Ideal<F> E = eliminate(K, 1, budget);
  Ideal<F> out(I.ring());
  for (const auto& e : E.generators()) out.add(e.reordered(I.ring()));
  return out;
}

/// (I : J^∞) as the intersection of the single-element saturations (I : g^∞), g in J.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Ideal<F>& J, const Budget& budget = {}) {
  if (J.generators().empty()) return I;
  Ideal<F> acc = saturate_by_element(I, J.generators().front(), budget);
  for (std::size_t k = 1; k < J.generators().size(); ++k)
    acc = intersect(acc, saturate_by_element(I, J.generators()[k], budget), budget);
  return groebner_basis(acc, MonomialOrder::grevlex(), budget).as_ideal();
}

/// (I : x_var^∞) for homogeneous I: reverse-lex basis with x_var last, divided by powers of x_var.
template <class F>
Ideal<F> saturate_by_variable(const Ideal<F>& I, int var, const Budget& budget = {}) {
  if (!I.is_homogeneous()) return saturate_by_element(I, Polynomial<F>::variable(I.ring(), var), budget);
  const auto& R = *I.ring();
  const int n = R.nvars();
  std::vector<std::string> names;
  std::vector<int> to(n), back(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (i != var) {
      to[i] = k;
      back[k] = i;
      names.push_back(R.names()[i]);
      ++k;
    }
  to[var] = n - 1;
  back[n - 1] = var;
  names.push_back(R.names()[var]);
  auto perm = make_ring(R.field(), names, MonomialOrder::grevlex());
  auto G = groebner_basis(I.mapped(perm, to), MonomialOrder::grevlex(), budget);
  Ideal<F> out(I.ring());
  for (const auto& g : G.elements()) {
    int e = 255;
    for (const auto& t : g.terms()) e = std::min(e, int(t.m.exp[n - 1]));
    Polynomial<F> h = g;
    if (e > 0) {
      std::vector<typename Polynomial<F>::Term> terms = g.terms();
      for (auto& t : terms) {
        t.m.exp[n - 1] = static_cast<std::uint8_t>(t.m.exp[n - 1] - e);
        t.m.refresh();
      }
      h = Polynomial<F>::from_sorted_terms(perm, std::move(terms));
    }
    out.add(h.in_ring(I.ring(), back));
  }
  return out;
}

/// (I : m^∞) for homogeneous I and m the irrelevant ideal, computed as (I : h^∞) for a
/// random linear form h. Exact unless h hits a non-irrelevant associated prime.
template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& I, Rng& rng, const Budget& budget = {}) {
  const auto& R = *I.ring();
  const auto& K = R.field();
  const int n = R.nvars();
  if (!I.is_homogeneous()) throw InvalidInput("saturate_irrelevant: ideal must be homogeneous");
  if (n == 0) return I;
  std::vector<typename F::Element> c(n);
  for (auto& v : c) v = K.random(rng);
  while (K.is_zero(c[n - 1])) c[n - 1] = K.random(rng);
  // new coordinate y = h(x) replaces x_{n-1}
  std::vector<Polynomial<F>> fwd, inv;
  const auto& ring = I.ring();
  auto inv_last = K.inv(c[n - 1]);
  Polynomial<F> last = Polynomial<F>::variable(ring, n - 1);
  Polynomial<F> h = Polynomial<F>::variable(ring, n - 1).scaled(c[n - 1]);
  for (int i = 0; i + 1 < n; ++i) {
    last = last - Polynomial<F>::variable(ring, i).scaled(c[i]);
    h = h + Polynomial<F>::variable(ring, i).scaled(c[i]);
  }
  last = last.scaled(inv_last);
  for (int i = 0; i + 1 < n; ++i) {
    fwd.push_back(Polynomial<F>::variable(ring, i));
    inv.push_back(Polynomial<F>::variable(ring, i));
  }
  fwd.push_back(last);
  inv.push_back(h);
  Ideal<F> moved(ring);
  for (const auto& g : I.generators()) moved.add(g.substitute(ring, fwd));
  Ideal<F> sat = saturate_by_variable(moved, n - 1, budget);
  Ideal<F> out(ring);
  for (const auto& g : sat.generators()) out.add(g.substitute(ring, inv));
  return groebner_basis(out, MonomialOrder::grevlex(), budget).as_ideal();
}

/// Irrelevant ideal (x_0, ..., x_{n-1}).
template <class F>
Ideal<F> irrelevant_ideal(const RingPtr<F>& ring) {
  Ideal<F> m(ring);
  for (int i = 0; i < ring->nvars(); ++i) m.add(Polynomial<F>::variable(ring, i));
  return m;
}

/// Equality of ideals by comparing reduced grevlex bases.
template <class F>
bool same_ideal(const Ideal<F>& a, const Ideal<F>& b, const Budget& budget = {}) {
  auto ga = groebner_basis(a, MonomialOrder::grevlex(), budget);
  auto gb = groebner_basis(b.mapped(a.ring(), [&] {
    std::vector<int> id(a.ring()->nvars());
    for (int i = 0; i < a.ring()->nvars(); ++i) id[i] = i;
    return id;
  }()), MonomialOrder::grevlex(), budget);
  if (ga.size() != gb.size()) return false;
  auto ea = ga.elements();
  auto eb = gb.elements();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] == eb[i])) return false;
  return true;
}

/// Every generator of small lies in big.
template <class F>
bool ideal_contains(const Ideal<F>& big, const Ideal<F>& small, const Budget& budget = {}) {
  auto G = groebner_basis(big, MonomialOrder::grevlex(), budget);
  return G.contains(small);
}

}  // namespace el
