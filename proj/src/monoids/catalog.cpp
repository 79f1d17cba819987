#include "eqmon/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "eqmon/embedded_data.hpp"
#include "eqmon/monoid_io.hpp"

namespace eqmon {

namespace {

std::map<std::string, std::string> const& presentations() {
  static std::map<std::string, std::string> const table = {
      {"A0", "a,b | a^2=a, b^2=b, ab=0"},
      {"A2", "a,b | a^2=aba=a, b^2=0, bab=b"},
      {"B0", "a,b,c | a^2=a, b^2=b, ab=ba=0, ac=cb=c"},
      {"B2", "a,b | a^2=b^2=0, aba=a, bab=b"},
      {"E", "a,b,c | a^2=ab=0, ba=ca=a, b^2=bc=b, c^2=cb=c"},
      {"I", "a,b | ab=a, ba=0, b^2=b"},
      {"J", "a,b | ba=a, ab=0, b^2=b"},
      {"L2", "a,b | a^2=ab=a, b^2=ba=b"},
      {"N2", "a | a^2=0"},
      {"N6", "a,b | a^2=b^2=aba=0"},
      {"O", "a,b | a^2=ba=a, b^2=1"},
      {"P2", "a,b | a^2=ab=a, b^2a=b^2"},
      {"Q", "a,b,c | a^2=a, ab=b, ca=c, ac=ba=cb=0"},
      {"R2", "a,b | a^2=ba=a, b^2=ab=b"},
  };
  return table;
}

std::string trim(std::string const& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

bool all_digits(std::string const& s) {
  return !s.empty() &&
         s.find_first_not_of("0123456789") == std::string::npos;
}

FiniteMonoid load_table(std::string const& name) {
  auto const& files = embedded_files();
  auto it = files.find("monoids/" + name + ".monoid");
  if (it == files.end()) {
    throw Error("no frozen table for '" + name + "'");
  }
  return parse_monoid(it->second);
}

}  // namespace

std::vector<std::string> catalog_table_names() {
  std::vector<std::string> out;
  for (auto const& [k, v] : presentations()) {
    out.push_back(k);
  }
  return out;
}

std::string const& catalog_presentation(std::string const& name) {
  auto it = presentations().find(name);
  if (it == presentations().end()) {
    throw Error("unknown catalog table '" + name + "'");
  }
  return it->second;
}

FiniteMonoid cyclic_group(std::size_t k) {
  if (k == 0) {
    throw PreconditionError("cyclic group of order 0");
  }
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < k; ++i) {
    labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  }
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = static_cast<Element>((i + j) % k);
    }
  }
  return FiniteMonoid("Z" + std::to_string(k), std::move(labels),
                      std::move(table), Element{0});
}

FiniteMonoid symmetric_group_3() {
  // Permutations of {0,1,2} as images; product pq applies p first.
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels = {"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<Element> table(36);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) {
        c[x] = perms[j][perms[i][x]];
      }
      auto k = std::find(perms.begin(), perms.end(), c) - perms.begin();
      table[i * 6 + j] = static_cast<Element>(k);
    }
  }
  return FiniteMonoid("S3", std::move(labels), std::move(table), Element{0});
}

FiniteMonoid catalog(std::string const& raw) {
  std::string name = trim(raw);
  if (auto pos = name.find(" x "); pos != std::string::npos) {
    FiniteMonoid left = catalog(name.substr(0, pos));
    FiniteMonoid right = catalog(name.substr(pos + 3));
    FiniteMonoid prod = direct_product(left, right);
    prod.set_name(left.name() + " x " + right.name());
    return prod;
  }
  if (name.size() > 2 && name.compare(name.size() - 2, 2, "^1") == 0) {
    FiniteMonoid m = adjoin_identity(catalog(name.substr(0, name.size() - 2)));
    return m;
  }
  if (name.rfind("M(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(2, name.size() - 3);
    std::vector<Word> words;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || inner[i] == ',') {
        words.push_back(parse_word(inner.substr(start, i - start)));
        start = i + 1;
      }
    }
    return rees_quotient(words);
  }
  if (name == "T" || name == "Trivial") {
    return trivial_monoid();
  }
  if (name == "S3") {
    return symmetric_group_3();
  }
  if (name.rfind("Zn(", 0) == 0 && name.back() == ')') {
    std::string k = name.substr(3, name.size() - 4);
    if (all_digits(k)) {
      return cyclic_group(std::stoul(k));
    }
  }
  if (name.size() > 1 && name[0] == 'Z' && all_digits(name.substr(1))) {
    return cyclic_group(std::stoul(name.substr(1)));
  }
  if (presentations().count(name) != 0) {
    FiniteMonoid m = load_table(name);
    m.set_name(name);
    return m;
  }
  if (name.size() > 1 && name.back() == '1' &&
      presentations().count(name.substr(0, name.size() - 1)) != 0) {
    return catalog(name.substr(0, name.size() - 1) + "^1");
  }
  throw PreconditionError("unknown monoid '" + name + "'");
}

}  // namespace eqmon
