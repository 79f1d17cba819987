#include <doctest.h>

#include <map>
#include <set>

#include "eqmon/catalog.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"
#include "eqmon/families.hpp"
#include "eqmon/identities.hpp"
#include "support.hpp"

using namespace eqmon;
using eqmon::testing::Gen;
using eqmon::testing::vars;

namespace {

// Plain odometer over all assignments, no pruning; returns the first failing
// assignment in the same order as the library (first variable most
// significant).
std::optional<Assignment> naive_failure(FiniteMonoid const& m, Identity const& id) {
  auto con = content(id);
  std::vector<Variable> vs(con.begin(), con.end());
  std::vector<Element> digits(vs.size(), 0);
  auto value = [&](Word const& w) {
    Element acc = *m.identity();
    for (auto v : w) {
      auto i = std::find(vs.begin(), vs.end(), v) - vs.begin();
      acc = m.table()[acc * m.size() + digits[i]];
    }
    return acc;
  };
  while (true) {
    if (value(id.lhs) != value(id.rhs)) {
      Assignment a;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        a[vs[i]] = digits[i];
      }
      return a;
    }
    std::size_t pos = vs.size();
    while (pos > 0 && ++digits[pos - 1] == m.size()) {
      digits[--pos] = 0;
    }
    if (pos == 0) {
      return std::nullopt;
    }
  }
}

Assignment labels(FiniteMonoid const& m, std::map<std::string, std::string> const& a) {
  Assignment out;
  for (auto const& [v, l] : a) {
    out[Variable(v)] = m.index_of(l);
  }
  return out;
}

bool holds(FiniteMonoid const& m, char const* id) {
  return satisfies(m, parse_identity(id)).holds;
}

}  // namespace

TEST_CASE("evaluate: the E table and its products") {
  FiniteMonoid e1 = catalog("E^1");
  Assignment abc = labels(e1, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
  CHECK(e1.label(evaluate(e1, parse_word("b^2 c^2 a b^2 c^2"), abc)) == "0");
  CHECK(e1.label(evaluate(e1, parse_word("b^2 c^2 a c^2 b^2"), abc)) == "ac");
  CHECK(e1.label(evaluate(e1, parse_word("b c"), abc)) == "b");
  CHECK(e1.label(evaluate(e1, parse_word("c b"), abc)) == "c");
  CHECK(evaluate(e1, Word{}, {}) == *e1.identity());
  CHECK_THROWS_AS(evaluate(e1, parse_word("x"), {}), PreconditionError);
}

TEST_CASE("evaluate is a homomorphism") {
  Gen g(101);
  auto xs = vars({"x", "y", "z"});
  for (auto const& name : {"E^1", "B2^1", "M(xyxy)", "S3", "Q^1"}) {
    FiniteMonoid m = catalog(name);
    for (int t = 0; t < 100; ++t) {
      Assignment a;
      for (auto v : xs) {
        a[v] = static_cast<Element>(g.below(m.size()));
      }
      Word u = g.word(xs, 6);
      Word v = g.word(xs, 6);
      CHECK(evaluate(m, u * v, a) == m.mul(evaluate(m, u, a), evaluate(m, v, a)));
    }
  }
}

TEST_CASE("satisfies: identities of E^1") {
  FiniteMonoid e1 = catalog("E^1");
  for (auto const& id : named_set("E1")) {
    CHECK(satisfies(e1, id).holds);
  }
  CHECK(holds(e1, "x y^2 x = x^2 y^2"));
  SatisfactionResult r = satisfies(e1, sigma_infinity());
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(format_assignment(e1, *r.witness, sigma_infinity()) == "x=b y=c h=a");
  CHECK(e1.label(r.lhs_value) == "0");
  CHECK(e1.label(r.rhs_value) == "ac");
  CHECK(evaluate(e1, sigma_infinity().lhs, *r.witness) == r.lhs_value);
  CHECK(evaluate(e1, sigma_infinity().rhs, *r.witness) == r.rhs_value);
  CHECK_FALSE(satisfies(e1, named_identity("excl.L2")).holds);
}

TEST_CASE("satisfies: named bases") {
  FiniteMonoid m4 = catalog("M(xyxy)");
  Identity remark = named_identity("remark.w2");
  CHECK(remark.lhs == wn_xyxy(2));
  CHECK_FALSE(remark.trivial());
  CHECK(satisfies(m4, remark).holds);
  for (auto const& id : named_set("M4")) {
    CHECK(satisfies(m4, id).holds);
  }
  for (auto const& name : {"L2^1", "M(x)", "R2^1", "Z2"}) {
    FiniteMonoid m = catalog(name);
    for (auto const& id : named_set("LZ2")) {
      CAPTURE(name);
      CHECK(satisfies(m, id).holds);
    }
  }
  CHECK_FALSE(satisfies(catalog("Z3"), luo_zhang(2)[0]).holds);
  CHECK(satisfies(catalog("Z3"), luo_zhang(3)[0]).holds);
  FiniteMonoid q1 = catalog("Q^1");
  for (auto const& id : named_set("Q1")) {
    CHECK(satisfies(q1, id).holds);
  }
  CHECK(satisfies(q1, named_identity("excl.L2")).holds);
  for (auto const& id : named_set("Mxy")) {
    CHECK(satisfies(catalog("M(xy)"), id).holds);
  }
  CHECK(holds(catalog("L2^1"), "x y x = x y"));
  CHECK_FALSE(holds(catalog("L2^1"), "x^2 y^2 = y^2 x^2"));
}

TEST_CASE("satisfies agrees with the naive odometer, witness included") {
  Gen g(202);
  auto xs = vars({"x", "y", "z"});
  std::vector<FiniteMonoid> ms;
  for (auto const& name : {"E^1", "B2^1", "M(xyxy)", "Q^1", "A2^1", "L2^1", "S3", "O", "N6^1"}) {
    ms.push_back(catalog(name));
  }
  int failures = 0;
  for (int t = 0; t < 400; ++t) {
    FiniteMonoid const& m = ms[g.below(ms.size())];
    Word u = g.word(xs, 5);
    // Bias towards identities that often hold: rearrangements and powers.
    Word v = g.coin() ? g.word(xs, 5) : testing::shuffle_blocks(g, u);
    Identity id{u, v};
    auto expect = naive_failure(m, id);
    SatisfactionResult r = satisfies(m, id);
    CAPTURE(m.name());
    CAPTURE(format_identity(id));
    CHECK(r.holds == !expect.has_value());
    if (expect) {
      ++failures;
      CHECK(r.witness == expect);
    }
  }
  CHECK(failures > 50);
}

TEST_CASE("satisfies enforces its budget") {
  Identity big = parse_identity("a b c d e f g h = h g f e d c b a");
  CHECK_THROWS_AS(satisfies(catalog("M(xyxy)"), big), BudgetExceeded);
  CHECK_NOTHROW(satisfies(catalog("M(xyxy)"), big, 100'000'000));
  CHECK_THROWS_AS(satisfies(catalog("E^1"), parse_identity("x y = y x"), 35), BudgetExceeded);
  CHECK_NOTHROW(satisfies(catalog("E^1"), parse_identity("x y = y x"), 36));
}

TEST_CASE("class satisfaction names the failing member") {
  MonoidClass join{catalog("L2^1"), catalog("Q^1")};
  auto r = satisfies(join, named_identity("q1.comm"));
  CHECK_FALSE(r.holds);
  CHECK(r.failing_member == 0);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(satisfies(join, sigma(n)).holds);
  }
}

TEST_CASE("close_under_deletion") {
  auto one = close_under_deletion({parse_identity("xyxy = xxyy")});
  CHECK(one == std::vector<Identity>{parse_identity("xyxy = xxyy")});
  auto comm = close_under_deletion({named_identity("q1.comm")});
  CHECK(comm == std::vector<Identity>{named_identity("q1.comm")});
  auto s1 = close_under_deletion({sigma(1)});
  CHECK(std::find(s1.begin(), s1.end(), parse_identity("x^2 x^2 y^2 = x^2 y^2 x^2")) != s1.end());
  CHECK(std::find(s1.begin(), s1.end(), sigma(1)) != s1.end());
  for (auto const& id : s1) {
    CHECK_FALSE(id.trivial());
  }
  // Every deletion of an identity of a monoid is again an identity of it.
  FiniteMonoid e1 = catalog("E^1");
  for (auto const& id : close_under_deletion(named_set("E1"))) {
    CHECK(satisfies(e1, id).holds);
  }
}

TEST_CASE("rel_free: small cases against direct tuple enumeration") {
  CHECK(rel_free({catalog("M(1)")}, 1).size() == 2);
  CHECK(rel_free({catalog("Z2")}, 1).size() == 2);
  CHECK(rel_free({catalog("Z3")}, 1).size() == 3);
  // Oracle: distinct value tuples of all words up to the longest
  // representative, computed by evaluate.
  for (auto const& name : {"M(1)", "M(x)", "M(xy)", "L2^1", "M(xyxy)", "Q^1"}) {
    FiniteMonoid m = catalog(name);
    RelFree f = rel_free({m}, 2);
    REQUIRE(f.complete());
    std::size_t longest = 0;
    for (std::uint32_t e = 0; e < f.size(); ++e) {
      longest = std::max(longest, f.representative(e).size());
    }
    auto gens = f.generators();
    std::set<std::vector<Element>> tuples;
    std::vector<Word> frontier{Word{}};
    std::vector<Word> all{Word{}};
    for (std::size_t len = 1; len <= longest + 1; ++len) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (auto v : gens) {
          next.push_back(w * Word{v});
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (auto const& w : all) {
      std::vector<Element> t;
      for (Element a = 0; a < m.size(); ++a) {
        for (Element b = 0; b < m.size(); ++b) {
          t.push_back(evaluate(m, w, {{gens[0], a}, {gens[1], b}}));
        }
      }
      tuples.insert(t);
    }
    CAPTURE(name);
    CHECK(tuples.size() == f.size());
    // Representatives are shortlex-minimal and pairwise distinct.
    for (std::uint32_t e = 1; e < f.size(); ++e) {
      CHECK(f.representative(e - 1) < f.representative(e));
      CHECK(f.element_of(f.representative(e)) == e);
    }
  }
}

TEST_CASE("rel_free: size is monotone in the number of generators") {
  for (auto const& name : {"M(xy)", "L2^1", "B0^1", "Z2"}) {
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t n = rel_free({catalog(name)}, k).size();
      CHECK(n >= prev);
      prev = n;
    }
  }
  RelFree f = rel_free({catalog("M(xyxy)")}, 2);
  CHECK(f.complete());
  MESSAGE("rel_free(M(xyxy), 2) has " << f.size() << " elements");
}

TEST_CASE("rel_free: caps") {
  RelFreeCaps caps;
  caps.max_elements = 5;
  RelFree f = rel_free({catalog("M(xyxy)")}, 2, caps);
  CHECK_FALSE(f.complete());
  CHECK(f.size() == 5);
  caps = {};
  caps.max_tuple_dim = 80;
  CHECK_THROWS_AS(rel_free({catalog("M(xyxy)")}, 2, caps), CapExceeded);
}

TEST_CASE("class word counting") {
  RelFree f = rel_free({catalog("M(xyxy)")}, 2);
  auto e = *f.element_of(parse_word("xyxy"));
  CHECK(count_class_words(f, e) == 1);
  CHECK_FALSE(other_class_word(f, e, parse_word("xyxy")));
  // x^3 is zero unless x = 1, so its class is {x^k : k >= 3}.
  auto cube = *f.element_of(parse_word("x^3"));
  CHECK_FALSE(count_class_words(f, cube).has_value());
  CHECK(other_class_word(f, cube, parse_word("x^3")) == parse_word("x^4"));
  CHECK(other_class_word(f, cube, parse_word("x^5")) == parse_word("x^3"));
}

TEST_CASE("isoterm verdicts") {
  FiniteMonoid m4 = catalog("M(xyxy)");
  auto w2 = isoterm(m4, wn_xyxy(2));
  REQUIRE(std::holds_alternative<NotIsoterm>(w2));
  Word wit = std::get<NotIsoterm>(w2).witness;
  CHECK(wit != wn_xyxy(2));
  CHECK(satisfies(m4, Identity{wn_xyxy(2), wit}).holds);

  CHECK(std::holds_alternative<Certified>(isoterm(m4, parse_word("xyxy"))));
  CHECK(std::holds_alternative<Certified>(isoterm(m4, parse_word("xy"))));

  auto x2 = isoterm(catalog("M(x)"), parse_word("xx"));
  REQUIRE(std::holds_alternative<NotIsoterm>(x2));
  CHECK(std::get<NotIsoterm>(x2).witness == parse_word("x^3"));

  auto grp = isoterm(catalog("Z3"), parse_word("xy"));
  REQUIRE(std::holds_alternative<NotIsoterm>(grp));
  CHECK(std::get<NotIsoterm>(grp).witness == parse_word("x y x^3"));

  CHECK(std::holds_alternative<Certified>(isoterm(catalog("M(1)"), Word{})));
  // x^2 is a factor image of xyxy under x -> xy, and x^3 is not.
  CHECK(std::holds_alternative<Certified>(isoterm(m4, parse_word("xx"))));
  auto cube = isoterm(m4, parse_word("x^3"));
  REQUIRE(std::holds_alternative<NotIsoterm>(cube));
  CHECK(std::get<NotIsoterm>(cube).witness == parse_word("x^4"));
}

TEST_CASE("isoterm witnesses re-verify on random words") {
  Gen g(303);
  auto xs = vars({"x", "y"});
  for (auto const& name : {"L2^1", "M(xy)", "B0^1", "Q^1", "E^1"}) {
    FiniteMonoid m = catalog(name);
    for (int t = 0; t < 8; ++t) {
      Word w = g.word(xs, 5);
      auto v = isoterm(m, w);
      CAPTURE(name);
      CAPTURE(format_word(w));
      if (auto const* n = std::get_if<NotIsoterm>(&v)) {
        CHECK(n->witness != w);
        CHECK(satisfies(m, Identity{w, n->witness}).holds);
      } else {
        CHECK(std::holds_alternative<Certified>(v));
      }
    }
  }
}

TEST_CASE("member verdicts") {
  CHECK(std::holds_alternative<Member>(member(catalog("M(x)"), {catalog("M(xy)")})));
  CHECK(std::holds_alternative<Member>(member(catalog("M(1)"), {catalog("M(x)")})));
  CHECK(std::holds_alternative<Member>(member(catalog("E^1"), {catalog("E^1")})));
  CHECK(std::holds_alternative<Member>(member(catalog("T"), {catalog("E^1")})));
  auto v = member(catalog("L2^1"), {catalog("Q^1")});
  REQUIRE(std::holds_alternative<NotMember>(v));
  Identity wit = std::get<NotMember>(v).witness;
  CHECK(wit == named_identity("q1.comm"));
  CHECK(satisfies(catalog("Q^1"), wit).holds);
  CHECK_FALSE(satisfies(catalog("L2^1"), wit).holds);
}

TEST_CASE("member: free-object conflicts give re-verifiable witnesses") {
  std::vector<std::pair<char const*, char const*>> cases = {
      {"L2^1", "Q^1"}, {"E^1", "Q^1"}, {"M(xy)", "M(x)"}, {"Z3", "Z2"}, {"R2^1", "L2^1"}};
  for (auto const& [a, b] : cases) {
    CAPTURE(a);
    CAPTURE(b);
    auto v = member(catalog(a), {catalog(b)}, {}, false);
    REQUIRE(std::holds_alternative<NotMember>(v));
    Identity wit = std::get<NotMember>(v).witness;
    CHECK(satisfies(catalog(b), wit).holds);
    CHECK_FALSE(satisfies(catalog(a), wit).holds);
  }
  CHECK(std::holds_alternative<Member>(member(catalog("L2^1"), {catalog("L2^1"), catalog("Q^1")}, {}, false)));
  CHECK(std::holds_alternative<Member>(member(catalog("B0^1"), {catalog("B2^1")}, {}, false)));
}

TEST_CASE("member implies the stock identities transfer") {
  std::vector<std::pair<char const*, char const*>> cases = {
      {"M(x)", "M(xy)"}, {"B0^1", "B2^1"}, {"L2^1", "E^1"}, {"Q^1", "E^1"}, {"M(xy)", "M(xyxy)"}};
  for (auto const& [a, b] : cases) {
    CAPTURE(a);
    auto v = member(catalog(a), {catalog(b)});
    REQUIRE(std::holds_alternative<Member>(v));
    for (auto const& id : stock_identities()) {
      if (satisfies(catalog(b), id).holds) {
        CHECK(satisfies(catalog(a), id).holds);
      }
    }
  }
}

TEST_CASE("member: caps give Unknown") {
  RelFreeCaps caps;
  caps.max_elements = 3;
  auto v = member(catalog("M(xy)"), {catalog("M(xyxy)")}, caps);
  CHECK(std::holds_alternative<MemberUnknown>(v));
}

TEST_CASE("lq_equiv_syntactic examples") {
  auto s1 = lq_equiv_syntactic(sigma(1).lhs, sigma(1).rhs);
  CHECK(s1.q_holds);
  CHECK(s1.l_holds);
  auto d = lq_equiv_syntactic(parse_word("x^2 h1 y^2"), parse_word("y^2 h1 x^2"));
  CHECK_FALSE(d.q_holds);
  auto same = lq_equiv_syntactic(parse_word("x^2 h y^2"), parse_word("x^2 h y^2"));
  CHECK(same.q_holds);
  CHECK(same.l_holds);
  CHECK_THROWS_AS(lq_equiv_syntactic(parse_word("xyx"), parse_word("xyx")), PreconditionError);
}

TEST_CASE("lq_equiv_syntactic matches satisfaction in Q^1 and L2^1") {
  Gen g(404);
  FiniteMonoid q1 = catalog("Q^1");
  FiniteMonoid l2 = catalog("L2^1");
  auto pool = vars({"x", "y", "z", "h"});
  int q_true = 0;
  int l_true = 0;
  for (int t = 0; t < 500; ++t) {
    Word u = testing::canonical_word(g, pool, 8);
    Word v = g.coin() ? testing::shuffle_blocks(g, u) : testing::canonical_word(g, pool, 8);
    auto lq = lq_equiv_syntactic(u, v);
    CAPTURE(format_word(u));
    CAPTURE(format_word(v));
    CHECK(lq.q_holds == satisfies(q1, Identity{u, v}).holds);
    CHECK(lq.l_holds == satisfies(l2, Identity{u, v}).holds);
    q_true += lq.q_holds;
    l_true += lq.l_holds;
  }
  CHECK(q_true > 100);
  CHECK(l_true > 100);
}
