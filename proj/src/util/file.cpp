#include "eqmon/file.hpp"

#include <fstream>
#include <sstream>

#include "eqmon/error.hpp"

namespace eqmon {

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace eqmon
