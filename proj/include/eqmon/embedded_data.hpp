#pragma once

#include <map>
#include <string>
#include <string_view>

namespace eqmon {

// Shipped data files keyed by their path under data/, e.g. "monoids/E.monoid".
std::map<std::string, std::string_view> const& embedded_files();

}  // namespace eqmon
