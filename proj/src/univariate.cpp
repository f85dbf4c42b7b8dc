#include "el/univariate.hpp"

#include <algorithm>

namespace el {

namespace {

// Equal-degree splitting of a product of distinct linear factors (Cantor–Zassenhaus, odd p).
void split_linear(const UPoly<PrimeField>& f, Rng& rng, std::vector<std::uint64_t>& out) {
  const auto& K = f.field();
  if (f.degree() == 0) return;
  if (f.degree() == 1) {
    auto m = f.monic();
    out.push_back(K.neg(m.coeff(0)));
    return;
  }
  const std::uint64_t half = (K.characteristic() - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    UPoly<PrimeField> shift(K, {K.random(rng), K.one()});
    UPoly<PrimeField> w = UPoly<PrimeField>::powmod(shift, half, f);
    UPoly<PrimeField> g = gcd(f, w - UPoly<PrimeField>::constant(K, K.one()));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, rng, out);
      split_linear(f / g, rng, out);
      return;
    }
  }
  throw GenericityFailure("root splitting did not converge");
}

// Splits a product of distinct irreducibles of common degree e (Cantor–Zassenhaus, odd p).
void split_equal_degree(const UPoly<PrimeField>& f, int e, Rng& rng, std::vector<UPoly<PrimeField>>& out) {
  const auto& K = f.field();
  if (f.degree() == e) {
    out.push_back(f.monic());
    return;
  }
  const auto one = UPoly<PrimeField>::constant(K, K.one());
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::uint64_t> c(f.degree());
    for (auto& v : c) v = K.random(rng);
    UPoly<PrimeField> a(K, c);
    if (a.degree() < 1) continue;
    // a^((p^e - 1)/2) = (a * a^p * ... * a^(p^(e-1)))^((p-1)/2)
    auto norm = a % f, frob = a % f;
    for (int i = 1; i < e; ++i) {
      frob = UPoly<PrimeField>::powmod(frob, K.characteristic(), f);
      norm = (norm * frob) % f;
    }
    auto w = UPoly<PrimeField>::powmod(norm, (K.characteristic() - 1) / 2, f);
    auto g = gcd(f, w - one);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_equal_degree(g, e, rng, out);
      split_equal_degree(f / g, e, rng, out);
      return;
    }
  }
  throw GenericityFailure("equal-degree splitting did not converge");
}

}  // namespace

std::vector<UPoly<PrimeField>> irreducible_factors(const UPoly<PrimeField>& f, Rng& rng) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  const auto& K = f.field();
  std::vector<UPoly<PrimeField>> out;
  auto rest = f.monic();
  const auto x = UPoly<PrimeField>::x(K);
  auto h = x;  // x^(p^i) mod rest
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = UPoly<PrimeField>::powmod(h, K.characteristic(), rest);
    auto g = gcd(rest, h - x);
    if (g.degree() > 0) {
      split_equal_degree(g, i, rng, out);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  return out;
}

std::vector<std::uint64_t> prime_field_roots(const UPoly<PrimeField>& f, Rng& rng) {
  if (f.is_zero()) throw InvalidInput("zero polynomial has every element as a root");
  if (f.degree() <= 0) return {};
  const auto& K = f.field();
  auto monic = f.monic();
  // product of the distinct linear factors: gcd(f, x^p - x)
  auto xp = UPoly<PrimeField>::powmod(UPoly<PrimeField>::x(K), K.characteristic(), monic);
  auto g = gcd(monic, xp - UPoly<PrimeField>::x(K));
  std::vector<std::uint64_t> roots;
  if (g.degree() > 0 && K.is_zero(g.coeff(0))) {
    roots.push_back(0);
    g = g / UPoly<PrimeField>::x(K);
  }
  split_linear(g, rng, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace el
