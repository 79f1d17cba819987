#pragma once

#include <functional>

#include "eqmon/equations.hpp"

namespace eqmon {

// Called for every computed product e * g = f; is_new marks a freshly added
// element. Returning false stops the search, leaving it incomplete.
using RelFreeEdgeHook =
    std::function<bool(std::uint32_t e, std::size_t g, std::uint32_t f, bool is_new)>;

class RelFreeBuilder {
 public:
  static RelFree build(MonoidClass const& ms, std::vector<Variable> const& gens,
                       RelFreeCaps const& caps, RelFreeEdgeHook const& hook);
};

}  // namespace eqmon
