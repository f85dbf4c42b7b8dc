#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "el/polynomial.hpp"

namespace el {

/// Limits for a Gröbner computation. Zero means "no limit".
struct Budget {
  std::size_t max_pairs = 500000;
  std::size_t max_basis_terms = 20000000;
  std::chrono::milliseconds max_time{0};
};

/// Generators in one ring. The homogeneity flag is derived from the generators.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) add(std::move(g));
  }

  void add(Polynomial<F> g) {
    if (g.is_zero()) return;
    if (!g.ring()->same_as(*ring_)) throw RingMismatch("generator from a different ring");
    gens_.push_back(std::move(g));
  }
  void add_all(const std::vector<Polynomial<F>>& gs) {
    for (const auto& g : gs) add(g);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  /// Generators moved into target with variable i -> var_map[i].
  Ideal mapped(const RingPtr<F>& target, const std::vector<int>& var_map) const {
    Ideal out(target);
    for (const auto& g : gens_) out.add(g.in_ring(target, var_map));
    return out;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    Ideal out = a;
    out.add_all(b.gens_);
    return out;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
};

namespace detail {

/// Accumulates p - c*m*g without reallocating for every step.
template <class F>
class Reducer {
 public:
  using Poly = Polynomial<F>;
  using Term = typename Poly::Term;
  using Element = typename F::Element;

  explicit Reducer(const Ring<F>& ring) : R_(ring), K_(ring.field()) {}

  /// Reduces `f` by `basis` (only polynomials flagged in `active`, if given).
  /// With `full`, every term is reduced; otherwise only the head.
  Poly reduce(const Poly& f, const std::vector<Poly>& basis, const std::vector<char>* active,
              bool full, std::size_t skip = std::numeric_limits<std::size_t>::max()) {
    cur_.assign(f.terms().begin(), f.terms().end());
    std::size_t head = 0;
    out_.clear();
    while (head < cur_.size()) {
      const Term& t = cur_[head];
      const Poly* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || (active && !(*active)[k])) continue;
        const auto& g = basis[k];
        if (g.lm().divides(t.m)) {
          divisor = &g;
          break;
        }
      }
      if (!divisor) {
        if (!full) {
          out_.insert(out_.end(), cur_.begin() + head, cur_.end());
          break;
        }
        out_.push_back(t);
        ++head;
        continue;
      }
      Element c = K_.div(t.c, divisor->lc());
      Monomial m = t.m / divisor->lm();
      subtract_multiple(head, c, m, *divisor);
      head = 0;
    }
    return Poly::from_sorted_terms(f.ring(), out_);
  }

 private:
  // cur_ := cur_[head+1..] - c*m*g[1..]
  void subtract_multiple(std::size_t head, const Element& c, const Monomial& m, const Poly& g) {
    next_.clear();
    const auto& gt = g.terms();
    std::size_t i = head + 1, j = 1;
    while (i < cur_.size() || j < gt.size()) {
      int cmp;
      Monomial gm;
      if (j < gt.size()) gm = gt[j].m * m;
      if (i == cur_.size())
        cmp = -1;
      else if (j == gt.size())
        cmp = 1;
      else
        cmp = R_.compare(cur_[i].m, gm);
      if (cmp > 0) {
        next_.push_back(std::move(cur_[i++]));
      } else if (cmp < 0) {
        next_.push_back({gm, K_.neg(K_.mul(c, gt[j].c))});
        ++j;
      } else {
        Element v = K_.sub_mul(cur_[i].c, c, gt[j].c);
        if (!K_.is_zero(v)) next_.push_back({cur_[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    std::swap(cur_, next_);
  }

  const Ring<F>& R_;
  const F& K_;
  std::vector<Term> cur_, next_, out_;
};

}  // namespace detail

/// Reduced Gröbner basis of an ideal under a fixed monomial order.
template <class F>
class GroebnerBasis {
 public:
  using Poly = Polynomial<F>;

  GroebnerBasis(Ideal<F> source, RingPtr<F> ring, std::vector<Poly> basis)
      : source_(std::move(source)), ring_(std::move(ring)), basis_(std::move(basis)) {}

  const Ideal<F>& source() const { return source_; }
  /// The ring carrying the order this basis was computed for.
  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Poly>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_unit(); }
  bool is_zero_ideal() const { return basis_.empty(); }

  /// Remainder of f on division by the basis; zero iff f lies in the ideal.
  Poly normal_form(const Poly& f) const {
    Poly g = f;
    if (!f.ring()->same_as(*ring_)) {
      if (f.ring()->field() == ring_->field() && f.ring()->names() == ring_->names())
        g = f.reordered(ring_);
      else
        throw RingMismatch("normal_form: polynomial and basis live in different rings");
    }
    detail::Reducer<F> red(*ring_);
    return red.reduce(g, basis_, nullptr, true);
  }
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal<F>& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }
  Ideal<F> as_ideal() const { return Ideal<F>(ring_, basis_); }

 private:
  Ideal<F> source_;
  RingPtr<F> ring_;
  std::vector<Poly> basis_;
};

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

template <class F>
class Buchberger {
 public:
  using Poly = Polynomial<F>;

  Buchberger(RingPtr<F> ring, const Budget& budget)
      : ring_(std::move(ring)), R_(*ring_), budget_(budget), red_(R_),
        start_(std::chrono::steady_clock::now()) {}

  std::vector<Poly> run(const std::vector<Poly>& input) {
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      Poly h = red_.reduce(f, polys_, &alive_, true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Poly::constant(ring_, R_.field().one())};
      insert(h.monic(), static_cast<unsigned>(f.degree()));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      check_budget(++processed);
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && R_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      CriticalPair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Poly s = spoly(polys_[p.i], polys_[p.j], p.lcm);
      Poly h = red_.reduce(s, polys_, &alive_, true);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Poly::constant(ring_, R_.field().one())};
      insert(h.monic(), p.sugar);
    }
    return interreduce();
  }

 private:
  void check_budget(std::size_t processed) {
    if (budget_.max_pairs && processed > budget_.max_pairs)
      throw BudgetExceeded("Gröbner basis: pair limit of " + std::to_string(budget_.max_pairs) +
                           " exceeded");
    if (budget_.max_basis_terms && total_terms_ > budget_.max_basis_terms)
      throw BudgetExceeded("Gröbner basis: term limit exceeded");
    if (budget_.max_time.count() > 0 && (processed & 15) == 0) {
      auto elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed > budget_.max_time) throw BudgetExceeded("Gröbner basis: time limit exceeded");
    }
  }

  Poly spoly(const Poly& f, const Poly& g, const Monomial& lcm) const {
    const auto& K = R_.field();
    Poly a = f.times_term(K.one(), lcm / f.lm());
    Poly b = g.times_term(K.one(), lcm / g.lm());
    return a - b;
  }

  // Gebauer–Möller installation of a new basis element.
  void insert(Poly h, unsigned sugar) {
    const std::size_t hn = polys_.size();
    const Monomial& hm = h.lm();
    std::vector<CriticalPair> fresh;
    for (std::size_t k = 0; k < hn; ++k)
      if (alive_[k]) fresh.push_back({k, hn, Monomial::lcm(polys_[k].lm(), hm), pair_sugar(k, h, sugar)});

    // chain criterion among the new pairs
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (Monomial::coprime(polys_[fresh[a].i].lm(), hm)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) &&
            (!(fresh[b].lcm == fresh[a].lcm) || b < a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    // product criterion
    std::vector<CriticalPair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a] && !Monomial::coprime(polys_[fresh[a].i].lm(), hm)) accepted.push_back(fresh[a]);

    // old pairs made redundant by h
    std::vector<CriticalPair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      bool drop = hm.divides(p.lcm) &&
                  !(Monomial::lcm(polys_[p.i].lm(), hm) == p.lcm) &&
                  !(Monomial::lcm(polys_[p.j].lm(), hm) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), accepted.begin(), accepted.end());

    for (std::size_t k = 0; k < hn; ++k)
      if (alive_[k] && hm.divides(polys_[k].lm())) alive_[k] = 0;
    total_terms_ += h.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    alive_.push_back(1);
  }

  unsigned pair_sugar(std::size_t k, const Poly& h, unsigned hsugar) const {
    Monomial l = Monomial::lcm(polys_[k].lm(), h.lm());
    unsigned a = sugars_[k] + (l.degree - polys_[k].lm().degree);
    unsigned b = hsugar + (l.degree - h.lm().degree);
    return std::max(a, b);
  }

  std::vector<Poly> interreduce() {
    std::vector<Poly> g;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (alive_[k]) g.push_back(polys_[k]);
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) { return R_.compare(a.lm(), b.lm()) < 0; });
    // leading terms are already minimal, so one tail-reduction pass gives the reduced basis
    std::vector<Poly> out;
    for (std::size_t k = 0; k < g.size(); ++k) out.push_back(red_.reduce(g[k], g, nullptr, true, k).monic());
    return out;
  }

  RingPtr<F> ring_;
  const Ring<F>& R_;
  Budget budget_;
  Reducer<F> red_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Poly> polys_;
  std::vector<unsigned> sugars_;
  std::vector<char> alive_;
  std::vector<CriticalPair> pairs_;
  std::size_t total_terms_ = 0;
};

}  // namespace detail

/// Reduced Gröbner basis of I for the given order. Throws BudgetExceeded rather than
/// returning a partial basis.
template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& I, const MonomialOrder& order,
                                const Budget& budget = {}) {
  auto ring = I.ring()->with_order(order);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.reordered(ring));
  detail::Buchberger<F> engine(ring, budget);
  auto basis = engine.run(gens);
  return GroebnerBasis<F>(I, ring, std::move(basis));
}

template <class F>
GroebnerBasis<F> groebner_basis(const Ideal<F>& I, const Budget& budget = {}) {
  return groebner_basis(I, I.ring()->order(), budget);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  return G.normal_form(f);
}

/// Every S-polynomial of the basis reduces to zero against it.
template <class F>
bool s_pairs_reduce_to_zero(const GroebnerBasis<F>& G) {
  const auto& E = G.elements();
  const auto& K = G.ring()->field();
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      auto l = Monomial::lcm(E[i].lm(), E[j].lm());
      auto s = E[i].times_term(K.one(), l / E[i].lm()) - E[j].times_term(K.one(), l / E[j].lm());
      if (!G.normal_form(s).is_zero()) return false;
    }
  return true;
}

/// Monic elements, no term divisible by another element's leading monomial.
template <class F>
bool is_reduced_basis(const GroebnerBasis<F>& G) {
  const auto& E = G.elements();
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (!E[i].field().is_one(E[i].lc())) return false;
    for (std::size_t j = 0; j < E.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : E[i].terms())
        if (E[j].lm().divides(t.m)) return false;
    }
  }
  return true;
}

}  // namespace el
