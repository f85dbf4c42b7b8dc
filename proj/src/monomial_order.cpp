#include "el/error.hpp"
#include "el/monomial.hpp"

namespace el {

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.rfind("block:", 0) == 0) {
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(text.substr(6), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || 6 + used != text.size() || k < 0 || k > kMaxVars)
      throw ParseError("bad block size in monomial order", 6);
    return block(k);
  }
  throw ParseError("unknown monomial order '" + text + "'", 0);
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block:" + std::to_string(k_);
  }
  return "";
}

}  // namespace el
