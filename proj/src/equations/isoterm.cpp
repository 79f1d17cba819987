#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"

namespace eqmon {

namespace {

// Phase one state: candidates are filtered by content, by 2-variable
// projections (M |= w = w' implies M |= w[x,y] = w'[x,y]), by random
// assignments, and only then checked exhaustively.
class Falsifier {
 public:
  Falsifier(FiniteMonoid const& m, Word const& w, IsotermBudget const& budget)
      : m_(m), w_(w), budget_(budget), rng_(0x5eedULL) {
    auto con = content(w);
    vars_.assign(con.begin(), con.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = i; j < vars_.size(); ++j) {
        if (i != j || vars_.size() == 1) {
          pairs_.push_back({vars_[i], vars_[j]});
        }
      }
    }
    for (auto const& [a, b] : pairs_) {
      pair_words_.push_back(project(w, {a, b}));
    }
  }

  std::optional<Word> run(std::size_t& exhausted) {
    exhausted = 0;
    if (auto r = neighbours()) {
      return r;
    }
    if (auto r = permutations()) {
      return r;
    }
    return small_words(exhausted);
  }

 private:
  bool pair_ok(std::size_t p, Word const& projected) {
    auto& cache = pair_cache_[p];
    auto it = cache.find(projected);
    if (it != cache.end()) {
      return it->second;
    }
    bool ok = satisfies(m_, Identity{pair_words_[p], projected}, budget_.satisfaction).holds;
    cache.emplace(projected, ok);
    return ok;
  }

  bool random_ok(Word const& c) {
    Identity id{w_, c};
    Assignment a;
    for (int round = 0; round < 64; ++round) {
      for (auto v : vars_) {
        a[v] = static_cast<Element>(rng_() % m_.size());
      }
      if (evaluate(m_, id.lhs, a) != evaluate(m_, id.rhs, a)) {
        return false;
      }
    }
    return true;
  }

  // True when c is a witness.
  bool test(Word const& c) {
    ++examined_;
    if (c == w_ || !tested_.insert(c).second) {
      return false;
    }
    if (content(c) != std::set<Variable>(vars_.begin(), vars_.end())) {
      return false;
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (!pair_ok(p, project(c, {pairs_[p].first, pairs_[p].second}))) {
        return false;
      }
    }
    if (!random_ok(c)) {
      return false;
    }
    return satisfies(m_, Identity{w_, c}, budget_.satisfaction).holds;
  }

  std::optional<Word> neighbours() {
    std::vector<Variable> letters(w_.begin(), w_.end());
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] != letters[i + 1]) {
        auto c = letters;
        std::swap(c[i], c[i + 1]);
        if (test(Word(c))) {
          return Word(c);
        }
      }
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto c = letters;
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
      if (test(Word(c))) {
        return Word(c);
      }
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto c = letters;
      c.insert(c.begin() + static_cast<std::ptrdiff_t>(i), letters[i]);
      if (test(Word(c))) {
        return Word(c);
      }
    }
    return std::nullopt;
  }

  // Rearrangements of w whose every 2-variable projection is a rearrangement
  // of the corresponding projection of w that M identifies with it.
  std::optional<Word> permutations() {
    std::size_t const limit_per_pair = 5000;
    std::vector<std::unordered_set<std::string>> prefixes(pairs_.size());
    std::vector<bool> active(pairs_.size(), false);
    std::map<Variable, std::size_t> index;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      index[vars_[i]] = i;
    }
    auto code = [&](Variable v) { return static_cast<char>('a' + index[v]); };
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      std::vector<Variable> letters(pair_words_[p].begin(), pair_words_[p].end());
      std::sort(letters.begin(), letters.end());
      std::size_t count = 0;
      bool small = true;
      std::vector<std::string> allowed;
      do {
        if (++count > limit_per_pair) {
          small = false;
          break;
        }
        if (pair_ok(p, Word(letters))) {
          std::string s;
          for (auto v : letters) {
            s.push_back(code(v));
          }
          allowed.push_back(s);
        }
      } while (std::next_permutation(letters.begin(), letters.end()));
      if (!small) {
        continue;
      }
      active[p] = true;
      for (auto const& s : allowed) {
        for (std::size_t len = 0; len <= s.size(); ++len) {
          prefixes[p].insert(s.substr(0, len));
        }
      }
    }
    // Pairs touching each variable.
    std::vector<std::vector<std::size_t>> touching(vars_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (!active[p]) {
        continue;
      }
      touching[index[pairs_[p].first]].push_back(p);
      if (pairs_[p].second != pairs_[p].first) {
        touching[index[pairs_[p].second]].push_back(p);
      }
    }
    std::vector<std::size_t> remaining(vars_.size(), 0);
    for (auto v : w_) {
      ++remaining[index[v]];
    }
    std::vector<std::string> proj(pairs_.size());
    std::vector<Variable> current;
    std::optional<Word> found;
    std::uint64_t nodes = 0;
    std::function<bool()> dfs = [&]() -> bool {
      if (++nodes > budget_.candidates) {
        return true;
      }
      if (current.size() == w_.size()) {
        Word c(current);
        if (test(c)) {
          found = c;
          return true;
        }
        return false;
      }
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (remaining[i] == 0) {
          continue;
        }
        bool ok = true;
        for (auto p : touching[i]) {
          proj[p].push_back(code(vars_[i]));
          ok = ok && prefixes[p].count(proj[p]) != 0;
        }
        if (ok) {
          --remaining[i];
          current.push_back(vars_[i]);
          bool stop = dfs();
          current.pop_back();
          ++remaining[i];
          if (stop) {
            for (auto p : touching[i]) {
              proj[p].pop_back();
            }
            return true;
          }
        }
        for (auto p : touching[i]) {
          proj[p].pop_back();
        }
      }
      return false;
    };
    dfs();
    return found;
  }

  // All words over con(w) of length up to min(|w| + 1, small), if the total
  // count is within budget.
  std::optional<Word> small_words(std::size_t& exhausted) {
    std::size_t max_len = std::min(w_.size() + 1, budget_.small);
    std::size_t k = vars_.size();
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < len && count <= budget_.candidates; ++i) {
        count *= k;
      }
      if (count > budget_.candidates) {
        break;
      }
      if (len >= k) {
        std::vector<std::size_t> digits(len, 0);
        while (true) {
          Word c;
          for (auto d : digits) {
            c.push_back(vars_[d]);
          }
          if (test(c)) {
            return c;
          }
          std::size_t pos = len;
          while (pos > 0 && ++digits[pos - 1] == k) {
            digits[--pos] = 0;
          }
          if (pos == 0) {
            break;
          }
        }
      }
      exhausted = len;
    }
    return std::nullopt;
  }

  FiniteMonoid const& m_;
  Word w_;
  IsotermBudget budget_;
  std::mt19937_64 rng_;
  std::vector<Variable> vars_;
  std::vector<std::pair<Variable, Variable>> pairs_;
  std::vector<Word> pair_words_;
  std::map<std::size_t, std::unordered_map<Word, bool>> pair_cache_;
  std::unordered_set<Word> tested_;
  std::uint64_t examined_ = 0;
};

std::optional<Word> group_witness(FiniteMonoid const& m, Word const& w) {
  if (!is_group(m)) {
    return std::nullopt;
  }
  Variable x = w.size() > 0 ? w[0] : Variable("x");
  return w * Word{x}.power(exponent_of_group(m));
}

}  // namespace

std::optional<Word> isoterm_falsify(FiniteMonoid const& m, Word const& w,
                                    IsotermBudget const& budget) {
  if (auto g = group_witness(m, w)) {
    return g;
  }
  std::size_t exhausted = 0;
  return Falsifier(m, w, budget).run(exhausted);
}

IsotermVerdict isoterm(FiniteMonoid const& m, Word const& w, IsotermBudget const& budget) {
  if (auto g = group_witness(m, w)) {
    return NotIsoterm{*g};
  }
  // Identities of a monoid that is not a group preserve content, so the
  // empty word is an isoterm.
  if (w.size() == 0) {
    return Certified{};
  }
  std::size_t exhausted = 0;
  if (auto r = Falsifier(m, w, budget).run(exhausted)) {
    return NotIsoterm{*r};
  }
  if (!budget.certify) {
    return BoundedOnly{exhausted, "certification skipped"};
  }
  auto con = content(w);
  std::vector<Variable> gens(con.begin(), con.end());
  RelFree f;
  try {
    f = rel_free({m}, gens, budget.caps);
  } catch (CapExceeded const& e) {
    return BoundedOnly{exhausted, e.what()};
  }
  if (!f.complete()) {
    return BoundedOnly{exhausted, "relatively free monoid incomplete: " + f.stop_reason()};
  }
  std::uint32_t e = *f.element_of(w);
  auto count = count_class_words(f, e, 2);
  if (count && *count == 1) {
    return Certified{};
  }
  if (auto other = other_class_word(f, e, w)) {
    return NotIsoterm{*other};
  }
  throw Error("isoterm: class count and witness search disagree");
}

}  // namespace eqmon
