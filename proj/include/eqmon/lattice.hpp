#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eqmon/equations.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

// A variety in a figure, given by generating monoids (catalog names), by
// defining identities, or both.
struct VarietyNode {
  std::string id;
  std::string label;
  std::vector<std::string> generators;
  std::vector<Identity> identities;
};

struct Poset {
  std::string name;
  std::string title;
  std::vector<VarietyNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)

  std::size_t index_of(std::string const& id) const;  // PreconditionError if absent
};

// Text format:
//   poset <name>
//   title <text>
//   nodes
//     <id> | <label> [| gen <monoid>, ...] [| ids <identity or @name>; ...]
//   covers
//     <lower> < <upper>
//   chain <prefix> <first> | <below> < <above> | <label with %n> [| ids ...]
// A chain line adds nodes <prefix><first> .. <prefix><depth> between below
// and above, substituting n for %n.
Poset parse_poset(std::string_view text, std::size_t depth = 3);

// Fig1 .. Fig4 from the shipped data; anything else is read as a file path.
// depth truncates parametric chains (Fig4: sigma_2 .. sigma_depth).
Poset load_figure(std::string const& name, std::size_t depth = 3);
std::vector<std::string> figure_names();

struct LatticeReport {
  bool ok = true;
  std::string message;
  std::optional<std::pair<std::string, std::string>> pair;  // offending node ids
};

// Covers must be irredundant and acyclic; every pair needs a unique join and
// meet within the diagram.
LatticeReport validate_lattice(Poset const& p);

// Reflexive-transitive closure: leq[a][b] iff a <= b.
std::vector<std::vector<bool>> order_relation(Poset const& p);

enum class EdgeVerdict { confirmed_strict, confirmed_inclusion, contradicted, unknown };
std::string to_string(EdgeVerdict v);

struct EdgeCheck {
  EdgeVerdict verdict = EdgeVerdict::unknown;
  std::optional<Identity> separating;  // holds in the lower node, fails in the upper
  std::optional<Identity> violation;   // holds in the upper node, fails in the lower
  std::string detail;
};

// Inclusion through member() or through the upper node's identities;
// strictness through an identity that holds in the lower node's generators
// and fails in one of the upper node's generators.
EdgeCheck semantic_check_edge(Poset const& p, std::pair<std::size_t, std::size_t> edge,
                              RelFreeCaps const& caps = {});

// Nodes ranked by height from the bottom; deterministic.
std::string dot_export(Poset const& p);
nlohmann::json poset_to_json(Poset const& p);

// Number of subvarieties of the variety generated by all monoids of order
// three: the lattice of Fig1 together with three intervals isomorphic to it.
std::size_t m3_subvariety_count(Poset const& fig1);

}  // namespace eqmon
