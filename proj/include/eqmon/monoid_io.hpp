#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "eqmon/monoid.hpp"

namespace eqmon {

// Text format ('#' starts a comment; whitespace-tolerant):
//   monoid <name>
//   elements <e1> ... <en>
//   identity <ei>          (or "identity none" for a semigroup table)
//   table
//   <n rows of n labels>
FiniteMonoid parse_monoid(std::string_view text);
std::string format_monoid(FiniteMonoid const& m);
nlohmann::json monoid_to_json(FiniteMonoid const& m);
FiniteMonoid monoid_from_json(nlohmann::json const& j);

}  // namespace eqmon
