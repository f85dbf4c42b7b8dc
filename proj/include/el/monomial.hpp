#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "el/error.hpp"

namespace el {

inline constexpr int kMaxVars = 24;

/// Exponent vector with cached total degree and a divisibility mask.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint32_t degree = 0;
  std::uint64_t mask = 0;  // bit i: exp[i] >= 1, bit 32+i: exp[i] >= 2

  void refresh() {
    degree = 0;
    mask = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      degree += exp[i];
      if (exp[i] >= 1) mask |= std::uint64_t{1} << i;
      if (exp[i] >= 2) mask |= std::uint64_t{1} << (32 + i);
    }
  }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    set_checked(m, i, power);
    m.refresh();
    return m;
  }

  static Monomial from_exponents(const std::vector<int>& e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) throw InvalidInput("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) set_checked(m, static_cast<int>(i), e[i]);
    m.refresh();
    return m;
  }

  /// true iff this divides other
  bool divides(const Monomial& other) const {
    if ((mask & ~other.mask) != 0) return false;
    if (degree > other.degree) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }

  bool is_one() const { return degree == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.exp[i]) + b.exp[i];
      if (s > 255) throw BudgetExceeded("exponent overflow (a single exponent exceeded 255)");
      m.exp[i] = static_cast<std::uint8_t>(s);
    }
    m.degree = a.degree + b.degree;
    m.mask = a.mask | b.mask;
    for (int i = 0; i < kMaxVars; ++i)
      if (m.exp[i] >= 2) m.mask |= std::uint64_t{1} << (32 + i);
    return m;
  }

  /// a / b; caller guarantees b divides a
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
    m.refresh();
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.refresh();
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(a.exp[i], b.exp[i]);
    m.refresh();
    return m;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    if ((a.mask & b.mask & 0xffffffffULL) == 0) return true;
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exp[i] && b.exp[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }

 private:
  static void set_checked(Monomial& m, int i, int power) {
    if (i < 0 || i >= kMaxVars) throw InvalidInput("variable index out of range");
    if (power < 0 || power > 255) throw InvalidInput("exponent out of range [0,255]");
    m.exp[i] = static_cast<std::uint8_t>(power);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.exp[i];
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// grevlex, lex, or block(k): the first k variables are eliminated first, grevlex inside each block.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(int k) { return MonomialOrder(Kind::block, k); }
  /// "grevlex", "lex", or "block:k"
  static MonomialOrder parse(const std::string& text);

  Kind kind() const { return kind_; }
  int block_size() const { return k_; }
  std::string to_string() const;

  /// >0 if a > b, <0 if a < b, 0 if equal, for monomials in nvars variables
  int compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind_) {
      case Kind::grevlex:
        return grevlex_range(a, b, 0, nvars, a.degree, b.degree);
      case Kind::lex:
        for (int i = 0; i < nvars; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case Kind::block: {
        unsigned da = 0, db = 0;
        for (int i = 0; i < k_; ++i) {
          da += a.exp[i];
          db += b.exp[i];
        }
        int c = grevlex_range(a, b, 0, k_, da, db);
        if (c != 0) return c;
        return grevlex_range(a, b, k_, nvars, a.degree - da, b.degree - db);
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, int k) : kind_(kind), k_(k) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi, unsigned da,
                           unsigned db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  int k_;
};

}  // namespace el
