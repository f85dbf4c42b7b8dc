#include "el/hilbert.hpp"

#include <algorithm>
#include <gmpxx.h>

namespace el {

namespace {

using Series = std::vector<long long>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series multiply(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Series add_shifted(const Series& a, const Series& b, unsigned shift) {
  Series out(std::max(a.size(), b.size() + shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + shift] += b[i];
  trim(out);
  return out;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

Series numerator_rec(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!Monomial::coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Series s{1};
    for (const auto& g : gens) {
      Series f(g.degree + 1, 0);
      f[0] = 1;
      f[g.degree] -= 1;
      s = multiply(s, f);
    }
    return s;
  }
  // pivot on the variable occurring in the most generators, at the median exponent
  int best = -1, best_count = 0;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exp[v]) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g.exp[best]) exps.push_back(g.exp[best]);
  std::sort(exps.begin(), exps.end());
  int e = exps[(exps.size() - 1) / 2];
  // keep the pivot outside the ideal so both branches shrink
  for (const auto& g : gens)
    if (g.degree == g.exp[best]) e = std::min(e, g.exp[best] - 1);
  Monomial pivot = Monomial::variable(best, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> quotient;
  for (const auto& g : gens) {
    Monomial q = g;
    q.exp[best] = static_cast<std::uint8_t>(g.exp[best] > e ? g.exp[best] - e : 0);
    q.refresh();
    quotient.push_back(q);
  }
  // HN(M) = HN(M + p) + t^deg(p) HN(M : p)
  return add_shifted(numerator_rec(with_pivot, nvars), numerator_rec(quotient, nvars),
                     static_cast<unsigned>(e));
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  return numerator_rec(std::move(gens), nvars);
}

HilbertInvariants hilbert_from_numerator(std::vector<long long> numerator, int nvars) {
  HilbertInvariants h;
  trim(numerator);
  if (numerator.empty()) {
    // unit ideal
    h.projective_dim = -1;
    h.degree = 0;
    return h;
  }
  int k = 0;
  auto at_one = [](const Series& s) {
    long long v = 0;
    for (auto c : s) v += c;
    return v;
  };
  while (at_one(numerator) == 0) {
    // synthetic division by (1 - t)
    Series q(numerator.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
      acc += numerator[i];
      q[i] = acc;
    }
    numerator = q;
    trim(numerator);
    ++k;
  }
  int affine_dim = nvars - k;
  h.numerator = numerator;
  h.projective_dim = affine_dim - 1;
  h.degree = h.projective_dim >= 0 ? at_one(numerator) : 0;
  return h;
}

namespace {

// binomial(x + D, D) as a polynomial in x, coefficients low degree first
std::vector<mpq_class> shifted_binomial(long long shift, int D) {
  std::vector<mpq_class> poly{mpq_class(1)};
  for (int j = 1; j <= D; ++j) {
    // multiply by (x + shift + j) / j
    std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * mpq_class(static_cast<long>(shift + j), j);
      next[i + 1] += poly[i] * mpq_class(1, j);
    }
    poly = next;
  }
  return poly;
}

}  // namespace

std::vector<std::string> HilbertInvariants::hilbert_polynomial_coefficients() const {
  if (empty()) return {"0"};
  const int D = projective_dim;
  std::vector<mpq_class> hp(D + 1, mpq_class(0));
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    auto b = shifted_binomial(-static_cast<long long>(i), D);
    for (std::size_t j = 0; j < b.size(); ++j) hp[j] += mpq_class(static_cast<long>(numerator[i])) * b[j];
  }
  std::vector<std::string> out;
  for (auto& c : hp) {
    c.canonicalize();
    out.push_back(c.get_str());
  }
  return out;
}

long long HilbertInvariants::hilbert_polynomial(long long s) const {
  if (empty()) return 0;
  const int D = projective_dim;
  mpq_class total = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    // binomial(s - i + D, D) as a polynomial identity (valid for all s)
    mpq_class b = 1;
    for (int j = 1; j <= D; ++j) b *= mpq_class(static_cast<long>(s - static_cast<long long>(i) + j), j);
    total += mpq_class(static_cast<long>(numerator[i])) * b;
  }
  total.canonicalize();
  return total.get_num().get_si();
}

long long HilbertInvariants::arithmetic_genus() const {
  if (projective_dim != 1) throw InvalidInput("arithmetic genus is defined here only for curves");
  return 1 - hilbert_polynomial(0);
}

}  // namespace el
