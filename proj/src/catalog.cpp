#include "el/catalog.hpp"

namespace el {

std::vector<std::string> catalog_keys() {
  return {"rnc3",     "rnc4",     "rnc5",      "rnc6",  "scroll12", "cone_twisted_cubic", "veronese5",
          "veronese_proj4", "delpezzo4", "elliptic4", "k3_23", "rational_quartic3"};
}

VarietyMeta catalog_meta(const std::string& key) {
  VarietyMeta m;
  m.name = key;
  auto set = [&](int n, int d, int g) {
    m.n = n;
    m.d = d;
    m.g = g;
  };
  if (key.size() == 4 && key.rfind("rnc", 0) == 0 && key[3] >= '3' && key[3] <= '6') {
    set(1, key[3] - '0', 0);
  } else if (key == "scroll12" || key == "cone_twisted_cubic") {
    set(2, 3, 0);
  } else if (key == "veronese5") {
    set(2, 4, 0);
  } else if (key == "veronese_proj4") {
    set(2, 4, 0);
  } else if (key == "delpezzo4") {
    set(2, 4, 1);
  } else if (key == "k3_23") {
    set(2, 6, 4);
  } else if (key == "elliptic4") {
    set(1, 4, 1);
  } else if (key == "rational_quartic3") {
    set(1, 4, 0);
  } else {
    throw InvalidInput("unknown catalog key '" + key + "'");
  }
  return m;
}

}  // namespace el
