#include <doctest.h>

#include <map>

#include "eqmon/catalog.hpp"
#include "eqmon/error.hpp"
#include "eqmon/monoid.hpp"
#include "eqmon/monoid_io.hpp"
#include "eqmon/presentation.hpp"
#include "support.hpp"

using namespace eqmon;
using eqmon::testing::Gen;
using eqmon::testing::vars;

namespace {

// Independent associativity check, written out directly.
bool associative(FiniteMonoid const& m) {
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < m.size(); ++b) {
      for (Element c = 0; c < m.size(); ++c) {
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

Element eval_letters(FiniteMonoid const& m, Word const& w) {
  Element acc = m.one();
  for (auto const& v : w) {
    acc = m.mul(acc, m.index_of(v.name()));
  }
  return acc;
}

}  // namespace

TEST_CASE("frozen tables have the presented orders") {
  std::map<std::string, std::size_t> const orders = {
      {"N2", 2}, {"N6", 6}, {"B0", 4}, {"B2", 5}, {"A0", 4},
      {"A2", 5}, {"I", 3},  {"J", 3},  {"L2", 2}, {"R2", 2},
      {"P2", 4}, {"Q", 5},  {"E", 5},  {"O", 4}};
  CHECK(catalog_table_names().size() == orders.size());
  for (auto const& [name, n] : orders) {
    CAPTURE(name);
    FiniteMonoid m = catalog(name);
    CHECK(m.size() == n);
    CHECK(associative(m));
    CHECK(validate(m).ok);
    CHECK(catalog(name + "^1").size() == n + 1);
    CHECK(catalog(name + "1") == catalog(name + "^1"));
  }
  CHECK(catalog("O").identity().has_value());
  CHECK_FALSE(catalog("E").identity().has_value());
}

TEST_CASE("frozen tables agree with the closure of their presentations") {
  for (auto const& name : catalog_table_names()) {
    CAPTURE(name);
    ClosureResult r = from_presentation(parse_presentation(catalog_presentation(name), name));
    CHECK(r.monoid == catalog(name));
    CHECK_FALSE(r.collapsed);
  }
}

TEST_CASE("hand-typed E satisfies every defining relation") {
  // a^2=ab=0, ba=ca=a, b^2=bc=b, c^2=cb=c
  FiniteMonoid e = catalog("E");
  auto m = [&](char const* x, char const* y) {
    return e.label(e.mul(e.index_of(x), e.index_of(y)));
  };
  CHECK(m("a", "a") == "0");
  CHECK(m("a", "b") == "0");
  CHECK(m("b", "a") == "a");
  CHECK(m("c", "a") == "a");
  CHECK(m("b", "b") == "b");
  CHECK(m("b", "c") == "b");
  CHECK(m("c", "c") == "c");
  CHECK(m("c", "b") == "c");
  CHECK(m("a", "c") == "ac");
}

TEST_CASE("presentation relation order does not matter") {
  Gen g(31);
  for (auto const& name : catalog_table_names()) {
    Presentation p = parse_presentation(catalog_presentation(name), name);
    for (int round = 0; round < 3; ++round) {
      Presentation q = p;
      g.shuffle(q.relations);
      g.shuffle(q.generators);
      for (auto& rel : q.relations) {
        if (g.coin()) {
          std::swap(rel.first, rel.second);
        }
      }
      CAPTURE(name);
      CHECK(from_presentation(q).monoid == catalog(name));
    }
  }
}

TEST_CASE("presentation parsing") {
  Presentation p = parse_presentation("a,b | a^2=b^2=0, aba=a");
  CHECK(p.generators.size() == 2);
  CHECK(p.relations.size() == 3);
  CHECK(p.mentions_zero());
  CHECK_FALSE(p.mentions_one());
  CHECK(parse_presentation("a,b | b^2=1").mentions_one());
  CHECK_THROWS_AS(parse_presentation("a,b"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a | c=a"), ParseError);
}

TEST_CASE("infinite presentations hit the cap") {
  CHECK_THROWS_AS(from_presentation(parse_presentation("a,b | ab=ba"), 40), CapExceeded);
  CHECK_THROWS_AS(from_presentation(parse_presentation("a | a^3=a^3"), 10), CapExceeded);
}

TEST_CASE("collapsing presentations are reported") {
  ClosureResult r = from_presentation(parse_presentation("a,b | a=b, a^2=a"));
  CHECK(r.collapsed);
  CHECK(r.monoid.size() == 1);
}

TEST_CASE("validate rejects a non-associative table") {
  // x.y = x + 1 (mod 3), independent of y: (00)0 = 2, 0(00) = 1.
  FiniteMonoid bad("bad", {"p", "q", "r"}, {1, 1, 1, 2, 2, 2, 0, 0, 0}, std::nullopt);
  ValidationReport rep = validate(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness);
  auto [a, b, c] = *rep.witness;
  CHECK(bad.mul(bad.mul(a, b), c) != bad.mul(a, bad.mul(b, c)));

  FiniteMonoid fake_identity("f", {"p", "q"}, {0, 0, 0, 0}, Element{1});
  CHECK_FALSE(validate(fake_identity).ok);
  CHECK_THROWS(FiniteMonoid("d", {"p", "p"}, {0, 0, 0, 0}, std::nullopt));
  CHECK_THROWS(FiniteMonoid("r", {"p"}, {3}, std::nullopt));
}

TEST_CASE("Rees quotient orders") {
  CHECK(catalog("M(1)").size() == 2);
  CHECK(catalog("M(x)").size() == 3);
  CHECK(catalog("M(xy)").size() == 5);
  CHECK(catalog("M(xyx)").size() == 7);
  CHECK(catalog("M(xyxy)").size() == 9);
  CHECK(catalog("M(x, y)").size() == 4);
  FiniteMonoid m = catalog("M(xy)");
  CHECK(m.label(0) == "1");
  CHECK(m.label(m.size() - 1) == "0");
  CHECK(zero_element(m) == Element(m.size() - 1));
  CHECK(m.name() == "M(xy)");
}

TEST_CASE("Rees quotient: a word is zero exactly when it is not a factor") {
  Gen g(7);
  auto xy = vars({"x", "y", "z"});
  for (int round = 0; round < 40; ++round) {
    std::vector<Word> ws;
    std::size_t k = 1 + g.below(2);
    for (std::size_t i = 0; i < k; ++i) {
      ws.push_back(g.word(xy, 5));
    }
    FiniteMonoid m = rees_quotient(ws);
    std::set<std::vector<Variable>> factors;
    for (auto const& w : ws) {
      auto f = eqmon::testing::all_factors(w);
      factors.insert(f.begin(), f.end());
    }
    CHECK(m.size() == factors.size() + 1);
    CHECK(associative(m));
    Element zero = *zero_element(m);
    for (int t = 0; t < 30; ++t) {
      Word u = g.word(xy, 6);
      bool letters_known = true;
      for (auto const& v : u) {
        letters_known = letters_known && m.find(v.name()).has_value();
      }
      if (!letters_known) {
        continue;
      }
      bool is_factor = factors.count(std::vector<Variable>(u.begin(), u.end())) != 0;
      Element e = eval_letters(m, u);
      CHECK((e != zero) == is_factor);
      if (is_factor) {
        CHECK(m.label(e) == rees_label(u));
      }
    }
  }
}

TEST_CASE("isomorphisms between named monoids") {
  CHECK(find_isomorphism(catalog("M(x)"), catalog("N2^1")));
  CHECK(find_isomorphism(catalog("M(xyx)"), catalog("N6^1")));
  CHECK_FALSE(find_isomorphism(catalog("M(1)"), catalog("Z2")));
  CHECK_FALSE(find_isomorphism(catalog("L2^1"), catalog("R2^1")));
  auto anti = find_isomorphism(catalog("L2^1"), catalog("R2^1"), true);
  REQUIRE(anti);
  CHECK(anti->anti);
  CHECK(find_isomorphism(catalog("I"), opposite(catalog("J"))));
  CHECK_FALSE(find_isomorphism(catalog("B0"), catalog("A0")));

  FiniteMonoid e = catalog("E");
  auto iso = find_isomorphism(e, e);
  REQUIRE(iso);
  for (Element a = 0; a < e.size(); ++a) {
    for (Element b = 0; b < e.size(); ++b) {
      CHECK(iso->map[e.mul(a, b)] == e.mul(iso->map[a], iso->map[b]));
    }
  }
}

TEST_CASE("B0^1 embeds in B2^1 via matrix units") {
  // In B2, a = E12 and b = E21, so ab = E11, ba = E22.
  FiniteMonoid b2 = catalog("B2^1");
  FiniteMonoid sub = submonoid(b2, {b2.index_of("ab"), b2.index_of("ba"), b2.index_of("a")});
  CHECK(sub.size() == 5);
  CHECK(find_isomorphism(sub, catalog("B0^1")));
}

TEST_CASE("products, opposites and groups") {
  FiniteMonoid p = catalog("S3 x Z9");
  CHECK(p.size() == 54);
  CHECK(is_group(p));
  CHECK(exponent_of_group(p) == 18);
  CHECK(exponent_of_group(catalog("S3")) == 6);
  CHECK(exponent_of_group(catalog("Zn(5)")) == 5);
  CHECK_FALSE(is_group(catalog("O")));
  CHECK(associative(catalog("L2^1 x R2^1")));
  CHECK(catalog("L2^1 x R2^1").size() == 9);
  CHECK(catalog("T").size() == 1);

  for (auto const& name : {"E", "B2^1", "P2", "Q^1"}) {
    FiniteMonoid m = catalog(name);
    CHECK(opposite(opposite(m)) == m);
    CHECK(associative(opposite(m)));
  }
  CHECK(find_isomorphism(opposite(catalog("L2")), catalog("R2")));
  CHECK_THROWS_AS(catalog("nope"), PreconditionError);
  CHECK_THROWS(catalog("Zn(0)"));
}

TEST_CASE("generating sets generate") {
  for (auto const& name : {"E", "E^1", "B2^1", "S3", "M(xyxy)", "Q x L2"}) {
    FiniteMonoid m = catalog(name);
    CAPTURE(name);
    auto gens = generating_set(m);
    CHECK(closure(m, gens).size() == m.size());
    if (m.identity()) {
      CHECK(std::find(gens.begin(), gens.end(), *m.identity()) == gens.end());
    }
  }
  CHECK(generating_set(catalog("B2^1")).size() == 2);
}

TEST_CASE("monoid text and JSON round trips") {
  for (auto const& name : {"E", "O", "B0^1", "M(xy)", "S3"}) {
    FiniteMonoid m = catalog(name);
    CHECK(parse_monoid(format_monoid(m)) == m);
    CHECK(monoid_from_json(monoid_to_json(m)) == m);
  }
  CHECK_THROWS_AS(parse_monoid("monoid X\nelements a\ntable\na\n"), ParseError);
  CHECK_THROWS(parse_monoid("monoid X\nelements a b\nidentity none\ntable\na a\n"));
}
