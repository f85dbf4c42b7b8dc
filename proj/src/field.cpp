#include "el/field.hpp"

#include <algorithm>
#include <cctype>

namespace el {

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p < (std::uint64_t{1} << 32)) {
  if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime(p))
    throw InvalidInput("field characteristic must be a prime with 3 <= p < 2^62, got " +
                       std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid on signed 128-bit to stay exact for p < 2^62
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(long long v) const {
  if (v >= 0) return static_cast<Element>(v) % p_;
  Element m = static_cast<Element>(-(v + 1)) % p_;  // avoids overflow at LLONG_MIN
  return sub(neg(m), 1);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
  Element out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

PrimeField::Element PrimeField::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (den != 1) throw InvalidInput("rational literal not allowed in prime-field ring");
  return from_mpz(num);
}

PrimeField::Element PrimeField::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return dist(rng);
}

PrimeField::Element PrimeField::random_small(Rng& rng, long long height) const {
  std::uniform_int_distribution<long long> dist(-height, height);
  return from_int(dist(rng));
}

std::string PrimeField::to_string(Element a) const {
  // print the symmetric representative; easier to read and re-parse
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

std::string PrimeField::descriptor() const { return "Fp:" + std::to_string(p_); }

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
  if (sgn(b) == 0) throw std::domain_error("division by zero in Q");
  return a / b;
}

RationalField::Element RationalField::pow(const Element& a, std::uint64_t e) const {
  Element r = 1, base = a;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

RationalField::Element RationalField::from_rational(const mpz_class& num,
                                                    const mpz_class& den) const {
  if (den == 0) throw InvalidInput("zero denominator");
  Element r(num, den);
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::random_small(Rng& rng, long long height) const {
  std::uniform_int_distribution<long long> dist(-height, height);
  return Element(static_cast<long>(dist(rng)));
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin witnesses for 64-bit inputs
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1) == 0) ++n;
  while (!is_prime(n)) n += 2;
  return n;
}

std::uint64_t random_prime_near_2_31(std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << 28) - 1);
  return next_prime((std::uint64_t{1} << 31) + dist(rng));
}

std::vector<std::uint64_t> primes_near_2_31(std::size_t count) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = std::uint64_t{1} << 31;
  while (out.size() < count) {
    p = next_prime(p + 1);
    out.push_back(p);
  }
  return out;
}

FieldDescriptor FieldDescriptor::parse(const std::string& text, std::uint64_t seed) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "q") return rationals();
  if (t.rfind("fp:", 0) == 0) {
    std::string rest = t.substr(3);
    if (rest == "auto") return modular(random_prime_near_2_31(seed));
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
      throw InvalidInput("bad field descriptor '" + text + "'");
    std::uint64_t p = std::stoull(rest);
    if (p < 3 || p >= (std::uint64_t{1} << 62) || !is_prime(p))
      throw InvalidInput("field characteristic must be a prime in [3, 2^62): " + rest);
    return modular(p);
  }
  throw InvalidInput("bad field descriptor '" + text + "' (expected Q, fp:<p> or fp:auto)");
}

std::string FieldDescriptor::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(prime);
}

}  // namespace el
