#include "el/variety_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace el {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw ParseError("bad integer '" + v + "' on line", line);
}

}  // namespace

VarietyText read_variety_text(std::istream& in) {
  VarietyText t;
  bool have_ring = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("ring ", 0) == 0) {
      auto w = words(s.substr(5));
      if (w.size() < 3 || w[w.size() - 2] != "over") throw ParseError("expected 'ring <vars> over <field>' on line", line);
      t.variables.assign(w.begin(), w.end() - 2);
      std::string lower = w.back();
      for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (lower == "fp:auto") throw ParseError("a file must name its prime on line", line);
      try {
        t.field = FieldDescriptor::parse(w.back(), 0);
      } catch (const InvalidInput& e) {
        throw ParseError(std::string(e.what()) + " on line", line);
      }
      have_ring = true;
    } else if (s.rfind("param ", 0) == 0) {
      t.parameters = words(s.substr(6));
    } else if (s.rfind("gen:", 0) == 0) {
      t.generators.push_back(trim(s.substr(4)));
    } else if (s.rfind("par:", 0) == 0) {
      t.param_forms.push_back(trim(s.substr(4)));
    } else if (s.rfind("meta:", 0) == 0) {
      for (const auto& kv : words(s.substr(5))) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in meta on line", line);
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "name") t.meta.name = v;
        else if (k == "d") t.meta.d = parse_int(v, line);
        else if (k == "g") t.meta.g = parse_int(v, line);
        else if (k == "n") t.meta.n = parse_int(v, line);
        else throw ParseError("unknown meta key '" + k + "' on line", line);
      }
    } else {
      throw ParseError("unrecognized line", line);
    }
  }
  if (!have_ring) throw ParseError("missing ring line", 1);
  if (!t.param_forms.empty() && t.parameters.empty()) throw ParseError("par: lines need a param line", 1);
  return t;
}

VarietyText read_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open variety file '" + path + "'");
  return read_variety_text(in);
}

std::string write_variety_text(const VarietyText& v) {
  std::ostringstream out;
  out << "ring";
  for (const auto& x : v.variables) out << ' ' << x;
  out << " over " << v.field.to_string() << '\n';
  if (!v.parameters.empty()) {
    out << "param";
    for (const auto& s : v.parameters) out << ' ' << s;
    out << '\n';
  }
  for (const auto& g : v.generators) out << "gen: " << g << '\n';
  for (const auto& p : v.param_forms) out << "par: " << p << '\n';
  out << "meta: name=" << (v.meta.name.empty() ? "unnamed" : v.meta.name) << " d=" << v.meta.d << " g=" << v.meta.g
      << " n=" << v.meta.n << '\n';
  return out.str();
}

}  // namespace el
