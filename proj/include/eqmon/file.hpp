#pragma once

#include <string>

namespace eqmon {

// Whole file contents; IoError if it cannot be read.
std::string read_file(std::string const& path);

}  // namespace eqmon
