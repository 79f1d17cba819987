#pragma once

// Pattern matching with variables: find substitutions theta such that
// pattern.theta occurs in (or equals) a text word.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

struct MatchOptions {
  bool nonempty_images = false;
};

// All theta over con(pattern) with pattern.theta a factor of text.
// Results are sorted and duplicate-free.
std::vector<Substitution> match_pattern(Word const& pattern, Word const& text,
                                        MatchOptions opts = {});

// Calls visit(start, end, theta) for every occurrence text[start, end) =
// pattern.theta. Returning false from visit stops the enumeration.
void for_each_occurrence(
    Word const& pattern, Word const& text, MatchOptions opts,
    std::function<bool(std::size_t, std::size_t, Substitution const&)> const&
        visit);

// Simultaneous exact matching: theta with p_i.theta == t_i for every pair.
// Visits solutions in a deterministic order (shorter images first, in order
// of first appearance); returning false stops the search.
void for_each_exact_solution(
    std::vector<std::pair<Word, Word>> const& equations, MatchOptions opts,
    std::function<bool(Substitution const&)> const& visit);

}  // namespace eqmon
