#pragma once

#include <vector>

#include "el/polynomial.hpp"

namespace el {

/// Dense univariate polynomial, coefficient of x^i at index i, no trailing zeros.
template <class F>
class UPoly {
 public:
  using Element = typename F::Element;

  explicit UPoly(const F& field) : field_(field) {}
  UPoly(const F& field, std::vector<Element> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const F& field, const Element& c, std::size_t d) {
    std::vector<Element> v(d + 1, field.zero());
    v[d] = c;
    return UPoly(field, std::move(v));
  }
  static UPoly x(const F& field) { return monomial(field, field.one(), 1); }
  static UPoly constant(const F& field, const Element& c) { return UPoly(field, {c}); }

  const F& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Element>& coeffs() const { return c_; }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Element lead() const { return c_.back(); }

  UPoly monic() const {
    if (is_zero()) return *this;
    auto inv = field_.inv(lead());
    UPoly r = *this;
    for (auto& a : r.c_) a = field_.mul(a, inv);
    return r;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = a.field_.add(v[i], b.c_[i]);
    return UPoly(a.field_, std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = a.field_.sub(v[i], b.c_[i]);
    return UPoly(a.field_, std::move(v));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = a.field_.add(v[i + j], a.field_.mul(a.c_[i], b.c_[j]));
    return UPoly(a.field_, std::move(v));
  }

  /// quotient and remainder
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {UPoly(field_), *this};
    std::vector<Element> r = c_;
    std::vector<Element> q(c_.size() - d.c_.size() + 1, field_.zero());
    auto inv = field_.inv(d.lead());
    for (int i = degree(); i >= d.degree(); --i) {
      if (field_.is_zero(r[i])) continue;
      auto f = field_.mul(r[i], inv);
      q[i - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j)
        r[i - d.degree() + j] = field_.sub_mul(r[i - d.degree() + j], f, d.c_[j]);
    }
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
  }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(field_);
    std::vector<Element> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
    return UPoly(field_, std::move(v));
  }

  Element evaluate(const Element& x) const {
    Element acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
  }

  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// base^e mod m
  static UPoly powmod(UPoly base, std::uint64_t e, const UPoly& m) {
    UPoly r = constant(base.field_, base.field_.one()) % m;
    base = base % m;
    while (e) {
      if (e & 1) r = (r * base) % m;
      base = (base * base) % m;
      e >>= 1;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

/// f / gcd(f, f'); valid when the characteristic exceeds deg f.
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
  if (f.degree() <= 0) return f.monic();
  if (f.field().characteristic() != 0 && f.field().characteristic() <= static_cast<std::uint64_t>(f.degree()))
    throw InvalidInput("characteristic too small for squarefree decomposition");
  UPoly<F> g = gcd(f, f.derivative());
  return (f / g).monic();
}

/// Number of distinct roots over the algebraic closure.
template <class F>
int distinct_root_count(const UPoly<F>& f) {
  if (f.is_zero()) throw InvalidInput("zero polynomial has infinitely many roots");
  return squarefree_part(f).degree();
}

/// Roots in F_p of f, without multiplicity, sorted ascending.
std::vector<std::uint64_t> prime_field_roots(const UPoly<PrimeField>& f, Rng& rng);

/// Monic irreducible factors over F_p of a squarefree polynomial.
std::vector<UPoly<PrimeField>> irreducible_factors(const UPoly<PrimeField>& f, Rng& rng);

/// Converts a polynomial using at most the single variable `var` into dense form.
template <class F>
UPoly<F> to_univariate(const Polynomial<F>& p, int var) {
  const auto& K = p.field();
  int d = std::max(0, p.degree_in(var));
  std::vector<typename F::Element> v(d + 1, K.zero());
  for (const auto& t : p.terms()) {
    if (t.m.degree != t.m.exp[var]) throw InvalidInput("polynomial is not univariate in the given variable");
    v[t.m.exp[var]] = K.add(v[t.m.exp[var]], t.c);
  }
  return UPoly<F>(K, std::move(v));
}

template <class F>
Polynomial<F> from_univariate(const UPoly<F>& u, const RingPtr<F>& ring, int var) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i)
    if (!u.field().is_zero(u.coeffs()[i])) terms.push_back({Monomial::variable(var, static_cast<int>(i)), u.coeffs()[i]});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace el
