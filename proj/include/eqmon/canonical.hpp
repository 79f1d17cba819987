#pragma once

#include <optional>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

// u_0 h_1 u_1 ... h_n u_n where the h_i are simple and every block u_i is a
// product of distinct squares. blocks[i] lists the squared variables of u_i.
struct CanonicalWord {
  std::vector<std::vector<Variable>> blocks;  // n + 1 entries
  std::vector<Variable> separators;           // n entries

  Word word() const;
  friend bool operator==(CanonicalWord const& a, CanonicalWord const& b) {
    return a.blocks == b.blocks && a.separators == b.separators;
  }
};

std::optional<CanonicalWord> is_canonical(Word const& w);

}  // namespace eqmon
