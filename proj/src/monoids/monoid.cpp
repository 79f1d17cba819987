#include "eqmon/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace eqmon {

FiniteMonoid::FiniteMonoid(std::string name, std::vector<std::string> labels,
                           std::vector<Element> table,
                           std::optional<Element> identity)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      table_(std::move(table)),
      identity_(identity) {
  std::size_t n = labels_.size();
  if (n == 0) {
    throw Error("monoid '" + name_ + "' has no elements");
  }
  if (table_.size() != n * n) {
    throw Error("monoid '" + name_ + "': table has " +
                std::to_string(table_.size()) + " entries, expected " +
                std::to_string(n * n));
  }
  for (Element e : table_) {
    if (e >= n) {
      throw Error("monoid '" + name_ + "': table entry out of range");
    }
  }
  if (identity_ && *identity_ >= n) {
    throw Error("monoid '" + name_ + "': identity out of range");
  }
  std::set<std::string> seen;
  for (auto const& l : labels_) {
    if (l.empty() || !seen.insert(l).second) {
      throw Error("monoid '" + name_ + "': empty or duplicate label '" + l +
                  "'");
    }
  }
}

std::optional<Element> FiniteMonoid::find(std::string const& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - labels_.begin());
}

Element FiniteMonoid::index_of(std::string const& label) const {
  if (auto e = find(label)) {
    return *e;
  }
  throw Error("monoid '" + name_ + "' has no element '" + label + "'");
}

Element FiniteMonoid::one() const {
  if (!identity_) {
    throw PreconditionError("'" + name_ + "' is a semigroup table without 1");
  }
  return *identity_;
}

ValidationReport validate(FiniteMonoid const& m) {
  ValidationReport r;
  auto n = static_cast<Element>(m.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element ab = m.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (m.mul(ab, c) != m.mul(a, m.mul(b, c))) {
          r.ok = false;
          r.witness = {a, b, c};
          r.message = "not associative: (" + m.label(a) + " " + m.label(b) +
                      ") " + m.label(c) + " != " + m.label(a) + " (" +
                      m.label(b) + " " + m.label(c) + ")";
          return r;
        }
      }
    }
  }
  if (auto e = m.identity()) {
    for (Element x = 0; x < n; ++x) {
      if (m.mul(*e, x) != x || m.mul(x, *e) != x) {
        r.ok = false;
        r.witness = {*e, x, x};
        r.message = "identity law fails for " + m.label(*e) + " at " +
                    m.label(x);
        return r;
      }
    }
  }
  return r;
}

FiniteMonoid adjoin_identity(FiniteMonoid const& s) {
  std::size_t n = s.size();
  std::vector<std::string> labels = s.labels();
  std::string one = "1";
  while (std::find(labels.begin(), labels.end(), one) != labels.end()) {
    one += "'";
  }
  labels.push_back(one);
  std::vector<Element> table((n + 1) * (n + 1));
  auto e = static_cast<Element>(n);
  for (Element a = 0; a <= e; ++a) {
    for (Element b = 0; b <= e; ++b) {
      Element v = a == e ? b : (b == e ? a : s.mul(a, b));
      table[a * (n + 1) + b] = v;
    }
  }
  return FiniteMonoid(s.name() + "^1", std::move(labels), std::move(table), e);
}

FiniteMonoid direct_product(FiniteMonoid const& a, FiniteMonoid const& b) {
  std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> labels;
  for (Element i = 0; i < na; ++i) {
    for (Element j = 0; j < nb; ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    }
  }
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element i = a.mul(x / nb, y / nb);
      Element j = b.mul(x % nb, y % nb);
      table[x * n + y] = static_cast<Element>(i * nb + j);
    }
  }
  std::optional<Element> id;
  if (a.identity() && b.identity()) {
    id = static_cast<Element>(*a.identity() * nb + *b.identity());
  }
  return FiniteMonoid(a.name() + "x" + b.name(), std::move(labels),
                      std::move(table), id);
}

std::vector<Element> closure(FiniteMonoid const& m,
                             std::vector<Element> const& gens) {
  std::vector<char> in(m.size(), 0);
  std::vector<Element> out;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      out.push_back(e);
    }
  };
  if (m.identity()) {
    add(*m.identity());
  }
  for (Element g : gens) {
    add(g);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element g : gens) {
      add(m.mul(out[i], g));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteMonoid submonoid(FiniteMonoid const& m, std::vector<Element> const& gens) {
  std::vector<Element> elems = closure(m, gens);
  std::vector<Element> pos(m.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    pos[elems[i]] = static_cast<Element>(i);
    labels.push_back(m.label(elems[i]));
  }
  std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = pos[m.mul(elems[i], elems[j])];
    }
  }
  std::optional<Element> id;
  if (m.identity()) {
    id = pos[*m.identity()];
  }
  return FiniteMonoid(m.name() + "-sub", std::move(labels), std::move(table),
                      id);
}

FiniteMonoid opposite(FiniteMonoid const& m) {
  std::size_t n = m.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = m.mul(static_cast<Element>(b), static_cast<Element>(a));
    }
  }
  return FiniteMonoid(m.name() + "-op", m.labels(), std::move(table),
                      m.identity());
}

FiniteMonoid trivial_monoid() {
  return FiniteMonoid("T", {"1"}, {0}, Element{0});
}

std::string rees_label(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  bool single = std::all_of(w.begin(), w.end(),
                            [](Variable v) { return v.name().size() == 1; });
  std::string out;
  for (Variable v : w) {
    if (!single && !out.empty()) {
      out += '.';
    }
    out += v.name();
  }
  return out;
}

FiniteMonoid rees_quotient(std::vector<Word> const& words) {
  std::set<Word> factors;  // shortlex order, so 1 comes first
  factors.insert(Word{});
  for (Word const& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        factors.insert(w.subword(i, j - i));
      }
    }
  }
  std::vector<Word> elems(factors.begin(), factors.end());
  std::map<Word, Element> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = static_cast<Element>(i);
    labels.push_back(rees_label(elems[i]));
  }
  auto zero = static_cast<Element>(elems.size());
  labels.push_back("0");
  std::size_t n = elems.size() + 1;
  std::vector<Element> table(n * n, zero);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      auto it = index.find(elems[a] * elems[b]);
      if (it != index.end()) {
        table[a * n + b] = it->second;
      }
    }
  }
  std::string name = "M(";
  for (std::size_t i = 0; i < words.size(); ++i) {
    name += (i ? "," : "") + rees_label(words[i]);
  }
  name += ")";
  return FiniteMonoid(name, std::move(labels), std::move(table), Element{0});
}

std::optional<Element> zero_element(FiniteMonoid const& m) {
  auto n = static_cast<Element>(m.size());
  for (Element z = 0; z < n; ++z) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = m.mul(z, x) == z && m.mul(x, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

bool is_group(FiniteMonoid const& m) {
  if (!m.identity()) {
    return false;
  }
  // Finite monoid: a group iff every element has a right inverse.
  auto n = static_cast<Element>(m.size());
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      found = m.mul(a, b) == *m.identity();
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

std::size_t exponent_of_group(FiniteMonoid const& m) {
  if (!is_group(m)) {
    throw PreconditionError("'" + m.name() + "' is not a group");
  }
  std::size_t e = 1;
  for (Element a = 0; a < m.size(); ++a) {
    std::size_t k = 1;
    for (Element p = a; p != *m.identity(); p = m.mul(p, a)) {
      ++k;
    }
    // order of a is k when a != 1 (loop counts a, a^2, ..., until 1)
    std::size_t order = a == *m.identity() ? 1 : k;
    e = std::lcm(e, order);
  }
  return e;
}

std::vector<Element> generating_set(FiniteMonoid const& m) {
  auto n = static_cast<Element>(m.size());
  std::optional<Element> one = m.identity();
  std::vector<char> decomposable(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == one || b == one) {
        continue;
      }
      Element ab = m.mul(a, b);
      if (ab != a && ab != b) {
        decomposable[ab] = 1;
      }
    }
  }
  std::vector<Element> gens;
  for (Element a = 0; a < n; ++a) {
    if (a != one && !decomposable[a]) {
      gens.push_back(a);
    }
  }
  // Greedy: add the first element not yet generated until everything is.
  while (true) {
    std::vector<Element> got = closure(m, gens);
    if (got.size() == n) {
      break;
    }
    std::vector<char> in(n, 0);
    for (Element e : got) {
      in[e] = 1;
    }
    for (Element a = 0; a < n; ++a) {
      if (!in[a]) {
        gens.push_back(a);
        break;
      }
    }
  }
  // Drop generators that the others already produce.
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Element> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (closure(m, rest).size() == n) {
      gens = std::move(rest);
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

namespace {

// Per-element isomorphism invariants: idempotency plus index and period of
// the cyclic subsemigroup.
std::vector<std::array<std::size_t, 3>> invariants(FiniteMonoid const& m) {
  std::vector<std::array<std::size_t, 3>> inv(m.size());
  for (Element a = 0; a < m.size(); ++a) {
    std::vector<Element> powers{a};
    while (true) {
      Element next = m.mul(powers.back(), a);
      auto it = std::find(powers.begin(), powers.end(), next);
      if (it != powers.end()) {
        std::size_t index = static_cast<std::size_t>(it - powers.begin());
        inv[a] = {m.mul(a, a) == a ? 1u : 0u, index,
                  powers.size() - index};
        break;
      }
      powers.push_back(next);
    }
  }
  return inv;
}

std::optional<std::vector<Element>> search_iso(FiniteMonoid const& a,
                                               FiniteMonoid const& b) {
  if (a.size() != b.size() || a.identity().has_value() != b.identity().has_value()) {
    return std::nullopt;
  }
  std::size_t n = a.size();
  auto inv_a = invariants(a);
  auto inv_b = invariants(b);
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
  }
  std::vector<Element> gens = generating_set(a);
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Element y = 0; y < n; ++y) {
      if (inv_a[gens[i]] == inv_b[y] && y != b.identity()) {
        candidates[i].push_back(y);
      }
    }
    if (candidates[i].empty()) {
      return std::nullopt;
    }
  }
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<Element> f(n, unset);
    std::vector<Element> order;
    bool ok = true;
    auto assign = [&](Element x, Element y) {
      if (f[x] == unset) {
        f[x] = y;
        order.push_back(x);
      } else if (f[x] != y) {
        ok = false;
      }
    };
    if (a.identity()) {
      assign(*a.identity(), *b.identity());
    }
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      assign(gens[i], candidates[i][choice[i]]);
    }
    for (std::size_t k = 0; k < order.size() && ok; ++k) {
      Element x = order[k];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        assign(a.mul(x, gens[i]), b.mul(f[x], f[gens[i]]));
      }
    }
    if (ok && order.size() == n) {
      std::vector<char> hit(n, 0);
      for (Element y : f) {
        ok = ok && !hit[y];
        hit[y] = 1;
      }
      if (ok) {
        return f;
      }
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == candidates[i].size()) {
      choice[i++] = 0;
    }
    if (i == choice.size()) {
      return std::nullopt;
    }
  }
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(FiniteMonoid const& a,
                                            FiniteMonoid const& b,
                                            bool allow_anti) {
  if (auto f = search_iso(a, b)) {
    return Isomorphism{std::move(*f), false};
  }
  if (allow_anti) {
    if (auto f = search_iso(a, opposite(b))) {
      return Isomorphism{std::move(*f), true};
    }
  }
  return std::nullopt;
}

}  // namespace eqmon
