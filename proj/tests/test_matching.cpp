#include <set>

#include "doctest.h"
#include "eqmon/families.hpp"
#include "eqmon/matching.hpp"
#include "support.hpp"

using namespace eqmon;
using eqmon::testing::Gen;
using eqmon::testing::vars;

namespace {

// Brute force: assign every pattern variable every factor of the text and
// keep the assignments whose image is a factor.
std::set<Substitution> brute_force(Word const& pattern, Word const& text,
                                   bool nonempty) {
  std::vector<Variable> pv;
  for (Variable v : content(pattern)) {
    pv.push_back(v);
  }
  std::vector<Word> factors;
  for (auto const& f : testing::all_factors(text)) {
    if (!nonempty || !f.empty()) {
      factors.emplace_back(f);
    }
  }
  std::set<Substitution> out;
  if (factors.empty()) {
    return out;
  }
  std::vector<std::size_t> idx(pv.size(), 0);
  while (true) {
    Substitution theta;
    for (std::size_t i = 0; i < pv.size(); ++i) {
      theta[pv[i]] = factors[idx[i]];
    }
    if (is_factor(substitute(pattern, theta), text)) {
      out.insert(theta);
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == factors.size()) {
      idx[i++] = 0;
    }
    if (i == idx.size()) {
      break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("match_pattern: xx in abab") {
  auto res = match_pattern(parse_word("xx"), parse_word("abab"));
  std::set<Word> images;
  for (auto const& theta : res) {
    images.insert(theta.at(Variable("x")));
  }
  CHECK(images == std::set<Word>{Word{}, parse_word("ab")});
}

TEST_CASE("match_pattern: pattern equal to text contains identity map") {
  Word w = wn_xyxy(3);
  Substitution id;
  for (Variable v : content(w)) {
    id[v] = Word{v};
  }
  auto res = match_pattern(w, w);
  CHECK(std::find(res.begin(), res.end(), id) != res.end());
}

TEST_CASE("match_pattern: nonempty option") {
  auto res = match_pattern(parse_word("xx"), parse_word("abab"), {true});
  REQUIRE(res.size() == 1);
  CHECK(res[0].at(Variable("x")) == parse_word("ab"));
  CHECK(match_pattern(parse_word("xyx"), parse_word("ab"), {true}).empty());
}

TEST_CASE("property: match_pattern agrees with brute force") {
  Gen gen(11);
  auto pattern_alphabet = vars({"x", "y", "z"});
  auto text_alphabet = vars({"a", "b", "c"});
  for (int i = 0; i < 250; ++i) {
    Word pattern = gen.word(pattern_alphabet, 4);
    if (pattern.empty()) {
      pattern.push_back(pattern_alphabet[0]);
    }
    Word text = gen.word(text_alphabet, 8);
    bool nonempty = gen.below(4) == 0;
    auto got = match_pattern(pattern, text, {nonempty});
    auto want = brute_force(pattern, text, nonempty);
    CHECK(std::set<Substitution>(got.begin(), got.end()) == want);
    CHECK(got.size() == want.size());
    if (got.size() != want.size()) {
      MESSAGE(format_word(pattern) << " in " << format_word(text) << " nonempty=" << nonempty);
      for (auto const& t : got) MESSAGE("got " << format_substitution(t));
      for (auto const& t : want) MESSAGE("want " << format_substitution(t));
    }
  }
}

TEST_CASE("for_each_exact_solution solves simultaneous equations") {
  std::vector<std::pair<Word, Word>> eqs = {
      {parse_word("x y"), parse_word("a b c")},
      {parse_word("y x"), parse_word("c a b")}};
  std::vector<Substitution> sols;
  for_each_exact_solution(eqs, {}, [&](Substitution const& t) {
    sols.push_back(t);
    return true;
  });
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].at(Variable("x")) == parse_word("ab"));
  CHECK(sols[0].at(Variable("y")) == parse_word("c"));

  int count = 0;
  for_each_exact_solution({{parse_word("xy"), parse_word("aaa")}}, {},
                          [&](Substitution const&) {
                            ++count;
                            return true;
                          });
  CHECK(count == 4);
}

TEST_CASE("for_each_occurrence reports positions") {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for_each_occurrence(parse_word("xx"), parse_word("abab"), {true},
                      [&](std::size_t s, std::size_t e, Substitution const&) {
                        spans.emplace_back(s, e);
                        return true;
                      });
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == std::make_pair(std::size_t{0}, std::size_t{4}));
}
