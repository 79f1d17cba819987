#include "eqmon/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace eqmon {

bool Presentation::mentions_zero() const {
  return std::any_of(relations.begin(), relations.end(), [](auto const& r) {
    return !r.first || !r.second;
  });
}

bool Presentation::mentions_one() const {
  return std::any_of(relations.begin(), relations.end(), [](auto const& r) {
    return (r.first && r.first->empty()) || (r.second && r.second->empty());
  });
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text, std::string name) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("presentation needs '|' between generators and relations");
  }
  Presentation p;
  p.name = std::move(name);
  for (auto const& g : split(text.substr(0, bar), ',')) {
    if (!Variable::valid_name(g)) {
      throw ParseError("bad generator '" + g + "'");
    }
    p.generators.emplace_back(g);
  }
  std::set<Variable> gens(p.generators.begin(), p.generators.end());
  for (auto const& rel : split(text.substr(bar + 1), ',')) {
    if (rel.empty()) {
      continue;
    }
    auto sides = split(rel, '=');
    if (sides.size() < 2) {
      throw ParseError("relation without '=': '" + rel + "'");
    }
    std::vector<RelationSide> parsed;
    for (auto const& s : sides) {
      if (s == "0") {
        parsed.emplace_back(std::nullopt);
        continue;
      }
      Word w = parse_word(s);
      for (Variable v : w) {
        if (gens.count(v) == 0) {
          throw ParseError("relation uses unknown generator '" + v.name() + "'");
        }
      }
      parsed.emplace_back(std::move(w));
    }
    for (std::size_t i = 0; i + 1 < parsed.size(); ++i) {
      p.relations.emplace_back(parsed[i], parsed[i + 1]);
    }
  }
  return p;
}

namespace {

using Symbols = std::vector<std::uint8_t>;

// All words up to length L over an alphabet of size A, indexed in shortlex
// order.
class Universe {
 public:
  Universe(std::size_t alphabet, std::size_t max_len, bool with_empty)
      : a_(alphabet), max_len_(max_len), min_len_(with_empty ? 0 : 1) {
    offset_.assign(max_len + 2, 0);
    std::size_t count = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
      offset_[len + 1] = offset_[len] + count;
      count *= a_;
    }
  }

  std::size_t size() const { return offset_[max_len_ + 1]; }
  std::size_t max_len() const { return max_len_; }
  std::size_t min_len() const { return min_len_; }

  std::size_t code(Symbols const& w) const {
    std::size_t v = 0;
    for (auto s : w) {
      v = v * a_ + s;
    }
    return offset_[w.size()] + v;
  }

  Symbols word(std::size_t code) const {
    std::size_t len = 0;
    while (offset_[len + 1] <= code) {
      ++len;
    }
    std::size_t v = code - offset_[len];
    Symbols w(len);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<std::uint8_t>(v % a_);
      v /= a_;
    }
    return w;
  }

  std::size_t first_of_length(std::size_t len) const { return offset_[len]; }

 private:
  std::size_t a_, max_len_, min_len_;
  std::vector<std::size_t> offset_;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller code (shortlex-smaller word) as the root.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent[b] = a;
  }
};

struct Rule {
  Symbols lhs, rhs;
};

std::optional<ClosureResult> attempt(Presentation const& p,
                                     std::vector<Variable> const& gens,
                                     std::vector<Rule> const& rules,
                                     std::size_t alphabet, bool monoid,
                                     std::optional<std::uint8_t> zero_sym,
                                     std::size_t max_len, std::size_t cap) {
  Universe uni(alphabet, max_len, monoid);
  UnionFind uf(uni.size());
  std::size_t first = uni.first_of_length(uni.min_len());
  for (std::size_t c = first; c < uni.size(); ++c) {
    Symbols w = uni.word(c);
    for (Rule const& r : rules) {
      for (int dir = 0; dir < 2; ++dir) {
        Symbols const& from = dir == 0 ? r.lhs : r.rhs;
        Symbols const& to = dir == 0 ? r.rhs : r.lhs;
        if (from.size() > w.size()) {
          continue;
        }
        std::size_t new_len = w.size() - from.size() + to.size();
        if (new_len > max_len || new_len < uni.min_len()) {
          continue;
        }
        for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), w.begin() + pos)) {
            continue;
          }
          Symbols out(w.begin(), w.begin() + pos);
          out.insert(out.end(), to.begin(), to.end());
          out.insert(out.end(), w.begin() + pos + from.size(), w.end());
          uf.unite(static_cast<std::uint32_t>(c),
                   static_cast<std::uint32_t>(uni.code(out)));
        }
      }
    }
  }
  // Least K such that every word of length K+1 equals a shorter one.
  std::optional<std::size_t> bound;
  for (std::size_t k = uni.min_len(); 2 * k <= max_len && k + 1 <= max_len; ++k) {
    bool reduces = true;
    for (std::size_t c = uni.first_of_length(k + 1);
         c < uni.first_of_length(k + 2) && reduces; ++c) {
      reduces = uf.find(static_cast<std::uint32_t>(c)) < uni.first_of_length(k + 1);
    }
    if (reduces) {
      bound = k;
      break;
    }
  }
  if (!bound) {
    // Classes among words of at most half the explored length; more than
    // cap of them means the closure is already too large to pursue.
    std::size_t classes = 0;
    for (std::size_t c = first; c < uni.first_of_length(max_len / 2 + 1); ++c) {
      if (uf.find(static_cast<std::uint32_t>(c)) == c && ++classes > cap) {
        throw CapExceeded("presentation closure exceeds " + std::to_string(cap) +
                          " classes of words up to length " +
                          std::to_string(max_len / 2));
      }
    }
    return std::nullopt;
  }
  std::size_t k = *bound;
  // Elements: roots of words of length <= k, i.e. shortlex-minimal codes.
  std::vector<std::uint32_t> roots;
  for (std::size_t c = first; c < uni.first_of_length(k + 1); ++c) {
    if (uf.find(static_cast<std::uint32_t>(c)) == c) {
      roots.push_back(static_cast<std::uint32_t>(c));
    }
    if (roots.size() > cap) {
      throw CapExceeded("presentation closure exceeds " + std::to_string(cap) +
                        " elements");
    }
  }
  std::optional<std::uint32_t> zero_root;
  if (zero_sym) {
    zero_root = uf.find(static_cast<std::uint32_t>(uni.code(Symbols{*zero_sym})));
  }
  std::optional<std::uint32_t> one_root;
  if (monoid) {
    one_root = uf.find(static_cast<std::uint32_t>(uni.code(Symbols{})));
  }
  auto label_of = [&](std::uint32_t root) -> std::string {
    if (zero_root && root == *zero_root) {
      return "0";
    }
    if (one_root && root == *one_root) {
      return "1";
    }
    Word w;
    for (auto s : uni.word(root)) {
      w.push_back(gens[s]);
    }
    return rees_label(w);
  };
  std::vector<std::pair<std::string, std::uint32_t>> order;
  for (auto r : roots) {
    order.emplace_back(label_of(r), r);
  }
  auto rank = [](std::string const& l) { return l == "0" ? 0 : (l == "1" ? 1 : 2); };
  std::sort(order.begin(), order.end(), [&](auto const& a, auto const& b) {
    return std::make_pair(rank(a.first), a.first) <
           std::make_pair(rank(b.first), b.first);
  });
  std::map<std::uint32_t, Element> index;
  std::vector<std::string> labels;
  std::vector<Word> reps;
  for (auto const& [label, root] : order) {
    index[root] = static_cast<Element>(labels.size());
    labels.push_back(label);
    Word w;
    for (auto s : uni.word(root)) {
      if (zero_sym && s == *zero_sym) {
        continue;  // the zero class is reported through its label
      }
      w.push_back(gens[s]);
    }
    reps.push_back(w);
  }
  std::size_t n = labels.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Symbols a = uni.word(order[i].second);
    for (std::size_t j = 0; j < n; ++j) {
      Symbols ab = a;
      Symbols b = uni.word(order[j].second);
      ab.insert(ab.end(), b.begin(), b.end());
      auto it = index.find(uf.find(static_cast<std::uint32_t>(uni.code(ab))));
      if (it == index.end()) {
        return std::nullopt;
      }
      table[i * n + j] = it->second;
    }
  }
  std::optional<Element> identity;
  if (one_root) {
    identity = index.at(*one_root);
  }
  FiniteMonoid m(p.name, labels, table, identity);
  if (!validate(m).ok) {
    return std::nullopt;
  }
  // Relations must hold verbatim in the table.
  auto element_of = [&](Symbols const& w) {
    return index.at(uf.find(static_cast<std::uint32_t>(uni.code(w))));
  };
  auto eval = [&](Symbols const& w) -> std::optional<Element> {
    if (w.empty()) {
      return identity;
    }
    Element acc = element_of(Symbols{w[0]});
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = m.mul(acc, element_of(Symbols{w[i]}));
    }
    return acc;
  };
  for (Rule const& r : rules) {
    auto l = eval(r.lhs);
    auto rr = eval(r.rhs);
    if (!l || !rr || *l != *rr) {
      return std::nullopt;
    }
  }
  ClosureResult result{std::move(m), std::move(reps), false, max_len};
  std::set<Element> gen_elems;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    gen_elems.insert(element_of(Symbols{static_cast<std::uint8_t>(g)}));
  }
  result.collapsed = gen_elems.size() < gens.size() || n < gens.size();
  return result;
}

}  // namespace

ClosureResult from_presentation(Presentation const& p, std::size_t cap) {
  if (cap == 0) {
    throw PreconditionError("from_presentation: cap must be positive");
  }
  std::vector<Variable> gens = p.generators;
  std::sort(gens.begin(), gens.end());
  if (gens.empty() || gens.size() > 16) {
    throw PreconditionError("from_presentation: need 1 to 16 generators");
  }
  bool zero = p.mentions_zero();
  bool monoid = p.mentions_one();
  std::size_t alphabet = gens.size() + (zero ? 1 : 0);
  std::optional<std::uint8_t> zero_sym;
  if (zero) {
    zero_sym = static_cast<std::uint8_t>(gens.size());
  }
  auto to_symbols = [&](RelationSide const& side) {
    Symbols out;
    if (!side) {
      out.push_back(*zero_sym);
      return out;
    }
    for (Variable v : *side) {
      out.push_back(static_cast<std::uint8_t>(
          std::find(gens.begin(), gens.end(), v) - gens.begin()));
    }
    return out;
  };
  std::vector<Rule> rules;
  std::size_t longest = 1;
  for (auto const& [l, r] : p.relations) {
    rules.push_back({to_symbols(l), to_symbols(r)});
    longest = std::max({longest, rules.back().lhs.size(), rules.back().rhs.size()});
  }
  if (zero) {
    for (std::uint8_t g = 0; g < alphabet; ++g) {
      rules.push_back({Symbols{*zero_sym, g}, Symbols{*zero_sym}});
      rules.push_back({Symbols{g, *zero_sym}, Symbols{*zero_sym}});
    }
  }
  constexpr std::size_t max_universe = 4'000'000;
  for (std::size_t len = longest + 1;; ++len) {
    if (Universe(alphabet, len, monoid).size() > max_universe) {
      break;
    }
    if (auto r = attempt(p, gens, rules, alphabet, monoid, zero_sym, len, cap)) {
      return std::move(*r);
    }
  }
  throw CapExceeded("presentation closure for '" + p.name +
                    "' did not stabilise within the word budget");
}

}  // namespace eqmon
