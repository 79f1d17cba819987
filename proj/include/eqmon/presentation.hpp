#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqmon/monoid.hpp"

namespace eqmon {

// A relation side is a word over the generators ("1" is the empty word) or
// the distinguished zero token, represented by nullopt.
using RelationSide = std::optional<Word>;

struct Presentation {
  std::string name;
  std::vector<Variable> generators;
  std::vector<std::pair<RelationSide, RelationSide>> relations;

  bool mentions_zero() const;
  bool mentions_one() const;
};

// Text form: "a,b | a^2=b^2=0, aba=a, bab=b". Chains u=v=w expand to u=v,
// v=w. A side "1" makes the result a monoid presentation.
Presentation parse_presentation(std::string_view text, std::string name = "");

struct ClosureResult {
  FiniteMonoid monoid;
  std::vector<Word> representatives;  // shortlex-minimal word per element
  bool collapsed = false;             // fewer elements than generators, or
                                      // two generators identified
  std::size_t length_bound = 0;       // word length explored
};

// Bounded two-sided closure. Elements are ordered: 0, then 1, then the
// remaining representatives by label. Throws CapExceeded when more than cap
// elements appear or the closure does not stabilise within the word budget.
ClosureResult from_presentation(Presentation const& p, std::size_t cap = 256);

}  // namespace eqmon
