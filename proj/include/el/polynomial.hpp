#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "el/ring.hpp"

namespace el {

/// Sparse polynomial: terms sorted descending by the ring's order, no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial m;
    Element c;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, long long c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), e);
  }
  static Polynomial variable(RingPtr<F> ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw InvalidInput("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(i), p.field().one()});
    return p;
  }
  static Polynomial term(RingPtr<F> ring, const Element& c, const Monomial& m) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Sorts, collects equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& R = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return R.compare(a.m, b.m) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c = R.field().add(p.terms_.back().c, t.c);
      } else {
        if (!p.terms_.empty() && R.field().is_zero(p.terms_.back().c)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && R.field().is_zero(p.terms_.back().c)) p.terms_.pop_back();
    return p;
  }
  /// Trusted constructor: terms already sorted, distinct and nonzero.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].m.is_one(); }

  const Term& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().m; }
  const Element& lc() const { return terms_.front().c; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.degree));
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.exp[var]));
    return d;
  }
  bool uses_variable(int var) const {
    for (const auto& t : terms_)
      if (t.m.exp[var]) return true;
    return false;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.degree != terms_.front().m.degree) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = field().neg(t.c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const auto& K = a.field();
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.m * t.m, K.mul(s.c, t.c)});
    return from_terms(a.ring_, std::move(out));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.c = field().mul(t.c, c);
    return r;
  }
  /// c * m * this
  Polynomial times_term(const Element& c, const Monomial& m) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.m = t.m * m;
      t.c = field().mul(t.c, c);
    }
    return r;
  }
  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, field().one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  Polynomial monic() const {
    if (is_zero() || field().is_one(lc())) return *this;
    return scaled(field().inv(lc()));
  }

  Polynomial derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.m.exp[var] == 0) continue;
      Monomial m = t.m;
      m.exp[var] -= 1;
      m.refresh();
      out.push_back({m, field().mul(t.c, field().from_int(t.m.exp[var]))});
    }
    return from_terms(ring_, std::move(out));
  }

  Polynomial homogeneous_part(int d) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (static_cast<int>(t.m.degree) == d) out.push_back(t);
    return from_sorted_terms(ring_, std::move(out));
  }

  Element evaluate(std::span<const Element> point) const {
    const auto& K = field();
    if (static_cast<int>(point.size()) != ring_->nvars())
      throw InvalidInput("evaluation point has wrong length");
    Element acc = K.zero();
    for (const auto& t : terms_) {
      Element v = t.c;
      for (int i = 0; i < ring_->nvars(); ++i)
        if (t.m.exp[i]) v = K.mul(v, K.pow(point[i], t.m.exp[i]));
      acc = K.add(acc, v);
    }
    return acc;
  }

  /// Replaces variable i by images[i], a polynomial in the target ring.
  Polynomial substitute(const RingPtr<F>& target, const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
      throw InvalidInput("substitution needs one image per variable");
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, target->field().one()));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      return cache[e];
    };
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.c);
      for (int i = 0; i < ring_->nvars() && !v.is_zero(); ++i)
        if (t.m.exp[i]) v = v * power_of(i, t.m.exp[i]);
      acc.insert(acc.end(), v.terms_.begin(), v.terms_.end());
    }
    return from_terms(target, std::move(acc));
  }

  /// Moves variable i to target variable var_map[i] (which must exist).
  Polynomial in_ring(const RingPtr<F>& target, const std::vector<int>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (!t.m.exp[i]) continue;
        int j = var_map.at(i);
        if (j < 0) throw InvalidInput("variable '" + ring_->names()[i] + "' has no target");
        m.exp[j] = static_cast<std::uint8_t>(m.exp[j] + t.m.exp[i]);
      }
      m.refresh();
      out.push_back({m, t.c});
    }
    return from_terms(target, std::move(out));
  }

  /// Same variables and field, different monomial order.
  Polynomial reordered(const RingPtr<F>& target) const {
    std::vector<int> id(ring_->nvars());
    for (int i = 0; i < ring_->nvars(); ++i) id[i] = i;
    return in_ring(target, id);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& K = field();
    bool first = true;
    for (const auto& t : terms_) {
      std::string cs = K.to_string(t.c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool unit = cs == "1";
      if (!unit || t.m.is_one()) os << cs;
      bool need_star = !unit;
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (!t.m.exp[i]) continue;
        if (need_star) os << "*";
        os << ring_->names()[i];
        if (t.m.exp[i] > 1) os << "^" << int(t.m.exp[i]);
        need_star = true;
      }
    }
    return os.str();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !a.field().equal(a.terms_[i].c, b.terms_[i].c))
        return false;
    return true;
  }

  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_))
      throw RingMismatch("polynomials belong to different rings");
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same_ring(a, b);
    const auto& R = *a.ring_;
    const auto& K = R.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size())
        c = -1;
      else if (j == b.size())
        c = 1;
      else
        c = R.compare(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        out.push_back({t.m, subtract ? K.neg(t.c) : t.c});
      } else {
        Element s = subtract ? K.sub(a.terms_[i].c, b.terms_[j].c) : K.add(a.terms_[i].c, b.terms_[j].c);
        if (!K.is_zero(s)) out.push_back({a.terms_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    return from_sorted_terms(a.ring_, std::move(out));
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

}  // namespace el
