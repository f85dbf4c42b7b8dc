#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "el/polynomial.hpp"

namespace el {

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected a variable name", start);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() {
    skip_ws();
    return pos_;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `poly := term (('+'|'-') term)*` into canonical form; a leading sign is accepted.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  using Term = typename Polynomial<F>::Term;
  const F& K = ring->field();
  detail::PolyLexer lex(text);
  std::vector<Term> terms;
  if (lex.at_end()) throw ParseError("empty polynomial", 0);

  auto varpow = [&](Monomial& m) {
    std::size_t at = lex.position();
    std::string nm = lex.name();
    int idx = ring->index_of(nm);
    if (idx < 0) throw ParseError("unknown variable '" + nm + "'", at);
    int e = 1;
    if (lex.accept('^')) {
      std::size_t ep = lex.position();
      std::string d = lex.digits();
      if (d.size() > 3 || std::stoi(d) > 255) throw ParseError("exponent too large", ep);
      e = std::stoi(d);
    }
    if (int(m.exp[idx]) + e > 255) throw ParseError("exponent too large", at);
    m.exp[idx] = static_cast<std::uint8_t>(m.exp[idx] + e);
  };

  bool negative = false;
  if (lex.accept('-'))
    negative = true;
  else
    lex.accept('+');
  while (true) {
    Monomial m;
    typename F::Element c = K.one();
    char head = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(head))) {
      mpz_class num(lex.digits());
      mpz_class den(1);
      if (lex.accept('/')) {
        std::size_t at = lex.position();
        den = mpz_class(lex.digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      try {
        c = K.from_rational(num, den);
      } catch (const InvalidInput& e) {
        throw ParseError(e.what(), lex.position());
      }
      while (lex.accept('*')) varpow(m);
    } else if (std::isalpha(static_cast<unsigned char>(head))) {
      varpow(m);
      while (lex.accept('*')) varpow(m);
    } else {
      throw ParseError(head ? std::string("unexpected character '") + head + "'"
                            : std::string("unexpected end of input"),
                       lex.position());
    }
    m.refresh();
    if (negative) c = K.neg(c);
    terms.push_back({m, c});
    if (lex.at_end()) break;
    if (lex.accept('+'))
      negative = false;
    else if (lex.accept('-'))
      negative = true;
    else
      throw ParseError(std::string("unexpected character '") + lex.peek() + "'", lex.position());
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace el
