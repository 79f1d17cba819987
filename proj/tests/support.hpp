#pragma once

// Shared helpers for the test suites: seeded generators and small oracles
// that deliberately avoid the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon::testing {

// Seed for randomized tests; override with EQMON_TEST_SEED.
inline std::uint64_t test_seed() {
  if (char const* s = std::getenv("EQMON_TEST_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return 20240611ULL;
}

class Gen {
 public:
  explicit Gen(std::uint64_t salt) : Gen(salt, test_seed()) {}
  Gen(std::uint64_t salt, std::uint64_t seed) : rng_(seed ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin() { return below(2) == 1; }

  Word word(std::vector<Variable> const& alphabet, std::size_t max_len) {
    std::size_t len = below(max_len + 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(alphabet[below(alphabet.size())]);
    }
    return w;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Variable> vars(std::initializer_list<char const*> names) {
  std::vector<Variable> out;
  for (char const* n : names) {
    out.emplace_back(n);
  }
  return out;
}

// All distinct factors of w, including the empty word, by direct slicing.
inline std::set<std::vector<Variable>> all_factors(Word const& w) {
  std::set<std::vector<Variable>> out;
  out.insert(std::vector<Variable>{});
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      out.insert(std::vector<Variable>(w.begin() + i, w.begin() + j));
    }
  }
  return out;
}

// Random word u_0 h_1 u_1 ... h_s u_s with simple separators h_i and blocks
// that are products of distinct squares, built directly from that shape.
inline Word canonical_word(Gen& g, std::vector<Variable> pool, std::size_t max_len) {
  g.shuffle(pool);
  std::size_t s = g.below(std::min<std::size_t>(3, pool.size()));
  std::vector<Variable> seps(pool.begin(), pool.begin() + s);
  std::vector<Variable> squares(pool.begin() + s, pool.end());
  Word w;
  for (std::size_t b = 0; b <= s; ++b) {
    if (b > 0) {
      w.push_back(seps[b - 1]);
    }
    auto order = squares;
    g.shuffle(order);
    for (auto v : order) {
      // Leave room for the remaining separators.
      if (g.coin() && w.size() + 2 + (s - b) <= max_len) {
        w.push_back(v);
        w.push_back(v);
      }
    }
  }
  return w;
}

// The same separators with every block's squares reordered.
inline Word shuffle_blocks(Gen& g, Word const& w) {
  std::vector<Variable> out;
  std::vector<Variable> block;
  auto flush = [&] {
    g.shuffle(block);
    for (auto v : block) {
      out.push_back(v);
      out.push_back(v);
    }
    block.clear();
  };
  for (std::size_t i = 0; i < w.size();) {
    if (i + 1 < w.size() && w[i + 1] == w[i]) {
      block.push_back(w[i]);
      i += 2;
    } else {
      flush();
      out.push_back(w[i]);
      ++i;
    }
  }
  flush();
  return Word(out);
}

}  // namespace eqmon::testing
