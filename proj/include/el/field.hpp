#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "el/error.hpp"

namespace el {

using Rng = std::mt19937_64;

/// Residues modulo a prime 3 <= p < 2^62, stored in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return false; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    if (small_) return (a * b) % p_;
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  /// a - b*c
  Element sub_mul(Element a, Element b, Element c) const { return sub(a, mul(b, c)); }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  Element from_int(long long v) const;
  Element from_mpz(const mpz_class& v) const;
  /// Rational literals are rejected in a prime-field ring.
  Element from_rational(const mpz_class& num, const mpz_class& den) const;
  Element random(Rng& rng) const;
  /// Small signed integer of bounded height, mapped into the field.
  Element random_small(Rng& rng, long long height) const;

  std::string to_string(Element a) const;
  std::string descriptor() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  bool small_;
};

/// Arbitrary-precision rationals in lowest terms.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  bool is_rational() const { return true; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub_mul(const Element& a, const Element& b, const Element& c) const { return a - b * c; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;

  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_mpz(const mpz_class& v) const { return Element(v); }
  Element from_rational(const mpz_class& num, const mpz_class& den) const;
  Element random(Rng& rng) const { return random_small(rng, 1000); }
  Element random_small(Rng& rng, long long height) const;

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string descriptor() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runtime description of a coefficient field: Q or F_p.
struct FieldDescriptor {
  enum class Kind { rational, prime };
  Kind kind = Kind::prime;
  std::uint64_t prime = 0;

  static FieldDescriptor rationals() { return {Kind::rational, 0}; }
  static FieldDescriptor modular(std::uint64_t p) { return {Kind::prime, p}; }
  /// Accepts "Q", "fp:<p>", "Fp:<p>", and "fp:auto" (resolved from the seed).
  static FieldDescriptor parse(const std::string& text, std::uint64_t seed);

  bool is_rational() const { return kind == Kind::rational; }
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool is_prime(std::uint64_t n);
/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);
/// Seeded random prime in [2^31, 2^31 + 2^28).
std::uint64_t random_prime_near_2_31(std::uint64_t seed);
/// The first `count` primes above 2^31, used for split-prime searches.
std::vector<std::uint64_t> primes_near_2_31(std::size_t count);

/// Calls fn with a PrimeField or RationalField instance matching the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& desc, Fn&& fn) {
  if (desc.is_rational()) return fn(RationalField{});
  return fn(PrimeField{desc.prime});
}

}  // namespace el
