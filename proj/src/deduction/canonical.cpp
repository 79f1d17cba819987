#include "eqmon/canonical.hpp"

#include <algorithm>

namespace eqmon {

Word CanonicalWord::word() const {
  Word out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) {
      out.push_back(separators[i - 1]);
    }
    for (Variable v : blocks[i]) {
      out.push_back(v);
      out.push_back(v);
    }
  }
  return out;
}

std::optional<CanonicalWord> is_canonical(Word const& w) {
  auto co = content_occ(w);
  CanonicalWord out;
  out.blocks.emplace_back();
  std::size_t i = 0;
  while (i < w.size()) {
    Variable v = w[i];
    if (co.occ.at(v) == 1) {
      out.separators.push_back(v);
      out.blocks.emplace_back();
      ++i;
      continue;
    }
    if (i + 1 >= w.size() || w[i + 1] != v) {
      return std::nullopt;
    }
    if (i + 2 < w.size() && w[i + 2] == v) {
      return std::nullopt;
    }
    auto& block = out.blocks.back();
    if (std::find(block.begin(), block.end(), v) != block.end()) {
      return std::nullopt;
    }
    block.push_back(v);
    i += 2;
  }
  return out;
}

}  // namespace eqmon
