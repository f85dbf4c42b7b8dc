#pragma once

#include <string>
#include <vector>

#include "el/groebner.hpp"

namespace el {

/// Hilbert data of a homogeneous ideal: HS(t) = Q(t) / (1-t)^(dim+1) with Q(1) != 0.
struct HilbertInvariants {
  int projective_dim = -1;           // -1: empty projective scheme
  long long degree = 0;              // Q(1); 0 when empty
  std::vector<long long> numerator;  // Q(t), low degree first

  bool empty() const { return projective_dim < 0; }
  /// Hilbert polynomial evaluated at s.
  long long hilbert_polynomial(long long s) const;
  /// Coefficients of HP in the monomial basis, as "a/b" strings, constant term first.
  std::vector<std::string> hilbert_polynomial_coefficients() const;
  /// 1 - HP(0) for a curve (projective_dim 1).
  long long arithmetic_genus() const;
};

/// Numerator N(t) of the Hilbert series of K[x_0..x_{n-1}]/M, with HS = N(t)/(1-t)^n.
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars);

HilbertInvariants hilbert_from_numerator(std::vector<long long> numerator, int nvars);

/// Dimension, degree and Hilbert polynomial from the leading terms of a reduced grevlex basis.
template <class F>
HilbertInvariants hilbert_invariants(const Ideal<F>& I, const Budget& budget = {}) {
  if (!I.is_homogeneous()) throw InvalidInput("hilbert_invariants: ideal must be homogeneous");
  auto G = groebner_basis(I, MonomialOrder::grevlex(), budget);
  std::vector<Monomial> lead;
  for (const auto& g : G.elements()) lead.push_back(g.lm());
  return hilbert_from_numerator(hilbert_numerator(lead, I.ring()->nvars()), I.ring()->nvars());
}

}  // namespace el
