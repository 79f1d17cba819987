#include "eqmon/identities.hpp"

#include <map>

#include "eqmon/error.hpp"
#include "eqmon/families.hpp"

namespace eqmon {

namespace {

std::vector<std::pair<std::string, std::string>> const& table() {
  static std::vector<std::pair<std::string, std::string>> const t = {
      {"e1.cube", "x^3 = x^2"},
      {"e1.left", "x^2 y x = x y x"},
      {"e1.right", "x y x^2 = x y x"},
      {"e1.sq", "x y^2 x = x^2 y^2"},
      {"q1.comm", "x^2 y^2 = y^2 x^2"},
      {"excl.L2", "x^2 (y^2 x^2)^2 = (y^2 x^2)^2"},
      {"excl.Qa", "x^2 y x^2 z x^2 = x^2 y z x^2"},
      {"excl.Qb", "(x^2 y x^2)^2 = x^2 y x^2"},
      {"m4.1", "x^13 h x k x = x h x k x"},
      {"m4.2", "x h x^2 k x = x^3 h k x"},
      {"m4.3", "x h y^2 x^2 k y = x h x^2 y^2 k y"},
      {"m4.4", "x h y k x y t x d y = x h y k y x t x d y"},
      {"m4.5", "x h y k x y t y d x = x h y k y x t y d x"},
      {"lz.1", "x^3 h x = x h x"},
      {"lz.2", "x h x t x = x^2 h t x"},
      {"lz.3", "x h x y t y = x h y x t y"},
      {"mxy.1", "x^4 = x^2"},
      {"mxy.2", "x y x = x^2 y"},
      {"mxy.3", "x y x = y x^2"},
      {"remark.w2", "x0 y z x1 x0 x2 x1 y z x2 = x0 x1 y z x0 x2 y z x1 x2"},
      {"xyxzx", "x y x z x = x y z x"},
  };
  return t;
}

std::map<std::string, std::vector<std::string>> const& sets() {
  static std::map<std::string, std::vector<std::string>> const s = {
      {"E1", {"e1.cube", "e1.left", "e1.right", "e1.sq"}},
      {"Q1", {"e1.cube", "e1.left", "e1.right", "q1.comm"}},
      {"L2B0", {"e1.cube", "e1.left", "e1.right", "e1.sq", "xyxzx"}},
      {"M4", {"m4.1", "m4.2", "m4.3", "m4.4", "m4.5"}},
      {"LZ2", {"lz.1", "lz.2", "lz.3"}},
      {"Mxy", {"mxy.1", "mxy.2", "mxy.3"}},
  };
  return s;
}

}  // namespace

std::vector<Identity> luo_zhang(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("luo_zhang: n must be positive");
  }
  Variable x("x");
  Variable h("h");
  Word first = Word{x}.power(n + 1) * Word{h, x};
  return {Identity{first, parse_word("x h x")},
          parse_identity("x h x t x = x^2 h t x"),
          parse_identity("x h x y t y = x h y x t y")};
}

Identity named_identity(std::string const& name) {
  for (auto const& [n, text] : table()) {
    if (n == name) {
      return parse_identity(text);
    }
  }
  if (name == "sigmaInf") {
    return sigma_infinity();
  }
  if (name.rfind("sigma", 0) == 0 && name.size() > 5 &&
      name.find_first_not_of("0123456789", 5) == std::string::npos) {
    return sigma(std::stoul(name.substr(5)));
  }
  throw Error("unknown identity '" + name + "'");
}

std::vector<Identity> named_set(std::string const& name) {
  if (name.size() > 2 && name.rfind("LZ", 0) == 0 &&
      name.find_first_not_of("0123456789", 2) == std::string::npos) {
    return luo_zhang(std::stoul(name.substr(2)));
  }
  auto it = sets().find(name);
  if (it == sets().end()) {
    throw Error("unknown identity set '" + name + "'");
  }
  std::vector<Identity> out;
  for (auto const& n : it->second) {
    out.push_back(named_identity(n));
  }
  return out;
}

std::vector<std::string> named_identity_names() {
  std::vector<std::string> out;
  for (auto const& [n, text] : table()) {
    out.push_back(n);
  }
  return out;
}

std::vector<std::string> named_set_names() {
  std::vector<std::string> out;
  for (auto const& [n, ids] : sets()) {
    out.push_back(n);
  }
  return out;
}

std::vector<Identity> resolve_identities(std::string const& text) {
  auto b = text.find_first_not_of(" \t");
  if (b != std::string::npos && text[b] == '@') {
    auto e = text.find_last_not_of(" \t");
    std::string name = text.substr(b + 1, e - b);
    if (sets().count(name) != 0 || name.rfind("LZ", 0) == 0) {
      return named_set(name);
    }
    return {named_identity(name)};
  }
  return {parse_identity(text)};
}

}  // namespace eqmon
