#include <doctest.h>

#include <regex>
#include <set>

#include "eqmon/catalog.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"
#include "eqmon/lattice.hpp"
#include "support.hpp"

using namespace eqmon;
using eqmon::testing::Gen;

namespace {

// Joins and meets by brute force over the closure computed here, independent
// of validate_lattice.
bool is_lattice_oracle(Poset const& p) {
  std::size_t n = p.nodes.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
  }
  for (auto [lo, hi] : p.covers) {
    leq[lo][hi] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n && leq[a][b]; ++c) {
          if (leq[b][c] && !leq[a][c]) {
            leq[a][c] = true;
            changed = true;
          }
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        return false;
      }
      std::size_t joins = 0;
      std::size_t meets = 0;
      for (std::size_t c = 0; c < n; ++c) {
        bool upper = leq[a][c] && leq[b][c];
        bool lower = leq[c][a] && leq[c][b];
        bool least = upper;
        bool greatest = lower;
        for (std::size_t d = 0; d < n; ++d) {
          if (upper && leq[a][d] && leq[b][d] && !leq[c][d]) {
            least = false;
          }
          if (lower && leq[d][a] && leq[d][b] && !leq[d][c]) {
            greatest = false;
          }
        }
        joins += least;
        meets += greatest;
      }
      if (joins != 1 || meets != 1) {
        return false;
      }
    }
  }
  return true;
}

std::set<std::pair<std::string, std::string>> cover_ids(Poset const& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [lo, hi] : p.covers) {
    out.insert({p.nodes[lo].id, p.nodes[hi].id});
  }
  return out;
}

std::size_t count_matches(std::string const& text, std::regex const& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("figure node counts") {
  CHECK(load_figure("Fig1").nodes.size() == 15);
  CHECK(load_figure("Fig2").nodes.size() == 8);
  CHECK(load_figure("Fig3").nodes.size() == 12);
  CHECK(figure_names().size() == 4);
  CHECK_THROWS_AS(load_figure("Fig9"), PreconditionError);
  CHECK_THROWS_AS(load_figure("Fig4", 0), PreconditionError);
}

TEST_CASE("every figure is a lattice") {
  for (auto const& name : figure_names()) {
    CAPTURE(name);
    auto p = load_figure(name);
    auto r = validate_lattice(p);
    CHECK_MESSAGE(r.ok, r.message);
    CHECK(is_lattice_oracle(p));
  }
  for (std::size_t depth = 1; depth <= 8; ++depth) {
    CAPTURE(depth);
    auto p = load_figure("Fig4", depth);
    CHECK(validate_lattice(p).ok);
    CHECK(is_lattice_oracle(p));
    // Fig3's twelve nodes, sigmaInf, E and sigma_2 .. sigma_depth.
    CHECK(p.nodes.size() == 14 + (depth >= 2 ? depth - 1 : 0));
  }
}

TEST_CASE("validate_lattice rejects non-lattices with a witness pair") {
  // Two maximal elements: no join for a and b.
  auto p = parse_poset("poset V\nnodes\n bot | 0\n a | a\n b | b\ncovers\n bot < a\n bot < b\n");
  auto r = validate_lattice(p);
  CHECK_FALSE(r.ok);
  REQUIRE(r.pair);
  CHECK(r.pair->first == "a");
  CHECK(r.pair->second == "b");
  CHECK_FALSE(is_lattice_oracle(p));

  // Two incomparable upper bounds for a and b.
  auto bowtie = parse_poset(
      "poset X\nnodes\n bot | 0\n a | a\n b | b\n c | c\n d | d\n top | 1\ncovers\n"
      " bot < a\n bot < b\n a < c\n a < d\n b < c\n b < d\n c < top\n d < top\n");
  CHECK_FALSE(validate_lattice(bowtie).ok);

  auto cyc = parse_poset("poset C\nnodes\n a | a\n b | b\ncovers\n a < b\n b < a\n");
  CHECK_FALSE(validate_lattice(cyc).ok);

  auto redundant =
      parse_poset("poset R\nnodes\n a | a\n b | b\n c | c\ncovers\n a < b\n b < c\n a < c\n");
  CHECK_FALSE(validate_lattice(redundant).ok);
}

TEST_CASE("parse_poset errors") {
  CHECK_THROWS_AS(parse_poset("nodes\n a | a\ncovers\n a < z\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("nodes\n a | a\n a | b\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("nodes\n a | a | colour red\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("nodes\n a\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("covers\n a b\n"), ParseError);
  CHECK(parse_poset("").nodes.empty());
}

TEST_CASE("random chains and products of chains are lattices") {
  Gen g(71);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t a = 1 + g.below(4);
    std::size_t b = 1 + g.below(4);
    std::string text = "poset G\nnodes\n";
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        text += " n" + std::to_string(i) + "_" + std::to_string(j) + " | x\n";
      }
    }
    text += "covers\n";
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        auto id = "n" + std::to_string(i) + "_" + std::to_string(j);
        if (i + 1 < a) {
          text += " " + id + " < n" + std::to_string(i + 1) + "_" + std::to_string(j) + "\n";
        }
        if (j + 1 < b) {
          text += " " + id + " < n" + std::to_string(i) + "_" + std::to_string(j + 1) + "\n";
        }
      }
    }
    auto p = parse_poset(text);
    CHECK(validate_lattice(p).ok == is_lattice_oracle(p));
    CHECK(validate_lattice(p).ok);
    // Dropping one cover from a product with a square breaks it or keeps it
    // a lattice; both checkers must agree either way.
    if (!p.covers.empty()) {
      p.covers.erase(p.covers.begin() + static_cast<std::ptrdiff_t>(g.below(p.covers.size())));
      CHECK(validate_lattice(p).ok == is_lattice_oracle(p));
    }
  }
}

TEST_CASE("Fig3 is the part of Fig4 below E^1{sigma1}") {
  auto f3 = load_figure("Fig3");
  for (std::size_t depth = 1; depth <= 5; ++depth) {
    auto f4 = load_figure("Fig4", depth);
    auto top = f4.index_of("L2vQ");
    CHECK(f4.nodes[top].label.find("sigma1") != std::string::npos);
    auto leq = order_relation(f4);
    std::set<std::string> below;
    for (std::size_t i = 0; i < f4.nodes.size(); ++i) {
      if (leq[i][top]) {
        below.insert(f4.nodes[i].id);
      }
    }
    std::set<std::string> f3_ids;
    for (auto const& n : f3.nodes) {
      f3_ids.insert(n.id);
    }
    CHECK(below == f3_ids);
    std::set<std::pair<std::string, std::string>> restricted;
    for (auto const& c : cover_ids(f4)) {
      if (below.count(c.first) && below.count(c.second)) {
        restricted.insert(c);
      }
    }
    CHECK(restricted == cover_ids(f3));
  }
}

TEST_CASE("Fig4 chain between E^1{sigma1} and E^1{sigmaInf}") {
  auto f4 = load_figure("Fig4", 3);
  auto covers = cover_ids(f4);
  CHECK(covers.count({"L2vQ", "sigma2"}));
  CHECK(covers.count({"sigma2", "sigma3"}));
  CHECK(covers.count({"sigma3", "sigmaInf"}));
  CHECK(covers.count({"sigmaInf", "E"}));
  auto s3 = f4.nodes[f4.index_of("sigma3")];
  CHECK(s3.label == "E^1{sigma3}");
  auto f1 = load_figure("Fig4", 1);
  CHECK(cover_ids(f1).count({"L2vQ", "sigmaInf"}));

  auto dot = dot_export(f4);
  for (auto const* edge : {"\"L2vQ\" -> \"sigma2\"", "\"sigma2\" -> \"sigma3\"",
                           "\"sigma3\" -> \"sigmaInf\"", "\"sigmaInf\" -> \"E\""}) {
    CHECK(dot.find(edge) != std::string::npos);
  }
}

TEST_CASE("dot_export") {
  auto dot = dot_export(load_figure("Fig1"));
  CHECK(count_matches(dot, std::regex(R"(\n  "[^"]+" \[label=)")) == 15);
  CHECK(count_matches(dot, std::regex(" -> ")) == 22);
  CHECK(dot == dot_export(load_figure("Fig1")));
  CHECK(dot.rfind("digraph \"Fig1\" {", 0) == 0);

  auto empty = dot_export(Poset{});
  CHECK(empty == "digraph \"\" {\n}\n");
}

TEST_CASE("poset_to_json") {
  auto j = poset_to_json(load_figure("Fig2"));
  CHECK(j["nodes"].size() == 8);
  CHECK(j["covers"].size() == 8);
  CHECK(j["name"] == "Fig2");
}

TEST_CASE("semantic edge checks") {
  auto f2 = load_figure("Fig2");
  auto r = semantic_check_edge(f2, {f2.index_of("Mx"), f2.index_of("Mxy")});
  CHECK(r.verdict != EdgeVerdict::contradicted);
  CHECK((r.verdict == EdgeVerdict::confirmed_inclusion ||
         r.verdict == EdgeVerdict::confirmed_strict));

  auto f3 = load_figure("Fig3");
  auto q = semantic_check_edge(f3, {f3.index_of("Q"), f3.index_of("L2vQ")});
  CHECK(q.verdict == EdgeVerdict::confirmed_strict);
  REQUIRE(q.separating);
  CHECK(satisfies(catalog("Q^1"), *q.separating).holds);
  CHECK_FALSE(satisfies(catalog("L2^1"), *q.separating).holds);
  CHECK(satisfies(catalog("Q^1"), parse_identity("x^2 y^2 = y^2 x^2")).holds);
  CHECK_FALSE(satisfies(catalog("L2^1"), parse_identity("x^2 y^2 = y^2 x^2")).holds);

  // Every drawn edge of Fig2 and Fig3 is at least an inclusion.
  for (auto const* name : {"Fig2", "Fig3"}) {
    auto p = load_figure(name);
    for (auto e : p.covers) {
      CAPTURE(name);
      CAPTURE(p.nodes[e.first].id);
      CAPTURE(p.nodes[e.second].id);
      auto v = semantic_check_edge(p, e);
      CHECK(v.verdict == EdgeVerdict::confirmed_strict);
    }
  }

  // A reversed edge is contradicted.
  auto bad = semantic_check_edge(f2, {f2.index_of("Q"), f2.index_of("Mx")});
  CHECK(bad.verdict == EdgeVerdict::contradicted);
  CHECK(bad.violation);
}

TEST_CASE("M3 subvariety count") { CHECK(m3_subvariety_count(load_figure("Fig1")) == 60); }
