#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "eqmon/catalog.hpp"
#include "eqmon/deduction.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"
#include "eqmon/identities.hpp"

namespace eqmon {

namespace {

struct Rules {
  Identity cube = named_identity("e1.cube");    // x^3 = x^2
  Identity left = named_identity("e1.left");    // x^2 y x = x y x
  Identity right = named_identity("e1.right");  // x y x^2 = x y x
  Identity sq = named_identity("e1.sq");        // x y^2 x = x^2 y^2
};

Rules const& rules() {
  static Rules const r;
  return r;
}

Variable const vx("x");
Variable const vy("y");

// Run of equal letters containing position i, as [begin, end).
std::pair<std::size_t, std::size_t> run_at(Word const& w, std::size_t i) {
  std::size_t b = i;
  std::size_t e = i + 1;
  while (b > 0 && w[b - 1] == w[i]) {
    --b;
  }
  while (e < w.size() && w[e] == w[i]) {
    ++e;
  }
  return {b, e};
}

// Applies basis rules at given positions, recording the steps.
class Chain {
 public:
  explicit Chain(Word w) : cur_(std::move(w)) {}

  Word const& word() const { return cur_; }
  std::vector<DerivationStep>& steps() { return steps_; }

  void push(DerivationStep st) {
    if (!reconstructs(st) || st.from != cur_) {
      throw Error("to_canonical: internal step does not reconstruct");
    }
    cur_ = st.to;
    steps_.push_back(std::move(st));
  }

  // Rewrites the instance of the rule's source side starting at begin.
  void apply(Identity const& rule, Direction d, Substitution theta, std::size_t begin) {
    Word const& s = d == Direction::forward ? rule.lhs : rule.rhs;
    Word const& t = d == Direction::forward ? rule.rhs : rule.lhs;
    Word image = substitute(s, theta);
    std::size_t end = begin + image.size();
    if (end > cur_.size() || image != cur_.subword(begin, image.size())) {
      throw Error("to_canonical: rule does not match at the chosen position");
    }
    Word left = cur_.subword(0, begin);
    Word right = cur_.subword(end, cur_.size() - end);
    Word to = left * substitute(t, theta) * right;
    push(DerivationStep{cur_, std::move(to), rule, "", d, std::move(theta), std::move(left),
                        std::move(right)});
  }

 private:
  Word cur_;
  std::vector<DerivationStep> steps_;
};

Variable lemma_y(std::size_t i) { return Variable("y" + std::to_string(i)); }

// x^2 y_1^2 ... y_k^2 x^2 = x^2 y_1^2 ... y_k^2 over the basis. The trailing
// x is spread between the squares as x y_1^2 x ... x y_k^2 x and then folded
// back from the right.
std::vector<DerivationStep> const& drop_repeat_lemma(std::size_t k) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<DerivationStep>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(k); it != cache.end()) {
    return it->second;
  }
  auto const& r = rules();
  Word squares;
  for (std::size_t i = 1; i <= k; ++i) {
    squares += Word{lemma_y(i), lemma_y(i)};
  }
  Word xw{vx};
  Chain c(Word{vx, vx} * squares * Word{vx, vx});
  c.apply(r.right, Direction::forward, {{vx, xw}, {vy, xw * squares}}, 0);
  if (k == 1) {
    c.apply(r.left, Direction::forward, {{vx, xw}, {vy, squares}}, 0);
    c.apply(r.sq, Direction::forward, {{vx, xw}, {vy, Word{lemma_y(1)}}}, 0);
  } else {
    c.apply(r.sq, Direction::backward, {{vx, xw}, {vy, Word{lemma_y(1)}}}, 0);
    for (std::size_t i = 2; i < k; ++i) {
      Word rest;
      for (std::size_t t = i; t <= k; ++t) {
        rest += Word{lemma_y(t), lemma_y(t)};
      }
      c.apply(r.left, Direction::backward, {{vx, xw}, {vy, rest}}, 3 * (i - 1));
      c.apply(r.sq, Direction::backward, {{vx, xw}, {vy, Word{lemma_y(i)}}}, 3 * (i - 1));
    }
    for (std::size_t j = k; j >= 2; --j) {
      c.apply(r.sq, Direction::forward, {{vx, xw}, {vy, Word{lemma_y(j)}}}, 3 * (j - 1));
      Word mid = c.word().subword(1, 3 * (j - 1) - 1);
      c.apply(r.right, Direction::forward, {{vx, xw}, {vy, mid}}, 0);
    }
    c.apply(r.sq, Direction::forward, {{vx, xw}, {vy, Word{lemma_y(1)}}}, 0);
  }
  return cache.emplace(k, std::move(c.steps())).first->second;
}

// Cuts out every loop so the words of the chain are pairwise distinct.
std::vector<DerivationStep> without_loops(std::vector<DerivationStep> const& steps) {
  std::vector<DerivationStep> out;
  std::unordered_map<Word, std::size_t> start_of;  // word -> number of steps before it
  for (auto const& st : steps) {
    if (out.empty()) {
      start_of[st.from] = 0;
    }
    if (auto it = start_of.find(st.to); it != start_of.end()) {
      while (out.size() > it->second) {
        start_of.erase(out.back().to);
        out.pop_back();
      }
      continue;
    }
    out.push_back(st);
    start_of[st.to] = out.size();
  }
  return out;
}

class Normalizer {
 public:
  Normalizer(Word const& w, DeriveCaps const& caps)
      : chain_(w), caps_(caps), simple_(content_occ(w).simple) {}

  std::vector<DerivationStep> run() {
    square_every_occurrence();
    while (true) {
      collapse_cubes();
      if (!drop_one_repeat()) {
        break;
      }
    }
    return without_loops(chain_.steps());
  }

 private:
  Word const& cur() const { return chain_.word(); }

  void apply(Identity const& rule, Direction d, Substitution theta, std::size_t begin) {
    chain_.apply(rule, d, std::move(theta), begin);
    check_length();
  }

  void check_length() const {
    if (cur().size() > caps_.max_length) {
      throw CapExceeded("to_canonical: intermediate word longer than " +
                        std::to_string(caps_.max_length));
    }
  }

  // Every occurrence of a non-simple variable joins a run of length >= 2:
  // x A x becomes x A x^2 when an earlier x exists, else x^2 A x.
  void square_every_occurrence() {
    while (true) {
      std::optional<std::size_t> lone;
      for (std::size_t i = 0; i < cur().size() && !lone; ++i) {
        auto [b, e] = run_at(cur(), i);
        if (e - b == 1 && !simple_.count(cur()[i])) {
          lone = i;
        }
      }
      if (!lone) {
        return;
      }
      std::size_t i = *lone;
      Variable v = cur()[i];
      std::optional<std::size_t> prev;
      for (std::size_t p = i; p-- > 0;) {
        if (cur()[p] == v) {
          prev = p;
          break;
        }
      }
      if (prev) {
        Word a = cur().subword(*prev + 1, i - *prev - 1);
        apply(rules().right, Direction::backward, {{vx, Word{v}}, {vy, a}}, *prev);
      } else {
        std::size_t q = i + 1;
        while (cur()[q] != v) {
          ++q;
        }
        Word a = cur().subword(i + 1, q - i - 1);
        apply(rules().left, Direction::backward, {{vx, Word{v}}, {vy, a}}, i);
      }
    }
  }

  void collapse_cubes() {
    for (std::size_t i = 0; i + 2 < cur().size();) {
      if (cur()[i] == cur()[i + 1] && cur()[i] == cur()[i + 2]) {
        apply(rules().cube, Direction::forward, {{vx, Word{cur()[i]}}}, i);
      } else {
        ++i;
      }
    }
  }

  // Removes the first square that repeats within its segment.
  bool drop_one_repeat() {
    std::vector<std::pair<Variable, std::size_t>> seen;  // squares of the segment
    for (std::size_t i = 0; i < cur().size();) {
      Variable v = cur()[i];
      if (simple_.count(v)) {
        seen.clear();
        ++i;
        continue;
      }
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](auto const& p) { return p.first == v; });
      if (it != seen.end()) {
        std::size_t k = static_cast<std::size_t>(seen.end() - it) - 1;
        Substitution theta{{vx, Word{v}}};
        for (std::size_t t = 1; t <= k; ++t) {
          theta[lemma_y(t)] = Word{(it + static_cast<std::ptrdiff_t>(t))->first};
        }
        std::size_t begin = it->second;
        Word left = cur().subword(0, begin);
        Word right = cur().subword(i + 2, cur().size() - i - 2);
        for (auto& st : lift(drop_repeat_lemma(k), theta, left, right)) {
          chain_.push(std::move(st));
          check_length();
        }
        return true;
      }
      seen.push_back({v, i});
      i += 2;
    }
    return false;
  }

  Chain chain_;
  DeriveCaps caps_;
  std::set<Variable> simple_;
};

}  // namespace

CanonicalWord canonical_target(Word const& w) {
  auto simple = content_occ(w).simple;
  CanonicalWord out;
  out.blocks.emplace_back();
  for (Variable v : w) {
    if (simple.count(v)) {
      out.separators.push_back(v);
      out.blocks.emplace_back();
    } else if (std::find(out.blocks.back().begin(), out.blocks.back().end(), v) ==
               out.blocks.back().end()) {
      out.blocks.back().push_back(v);
    }
  }
  return out;
}

CanonicalResult to_canonical(Word const& w, DeriveCaps const& caps) {
  CanonicalResult out;
  if (auto c = is_canonical(w)) {
    out.form = *c;
    return out;
  }
  out.script = Normalizer(w, caps).run();
  Word result = out.script.empty() ? w : out.script.back().to;
  auto c = is_canonical(result);
  if (!c) {
    throw Error("to_canonical: normalization ended at non-canonical " + format_word(result));
  }
  out.form = *c;
  if (content(w).size() <= 6) {
    static FiniteMonoid const e1 = catalog("E^1");
    if (!satisfies(e1, Identity{w, result}).holds) {
      throw Error("to_canonical: " + format_word(result) + " is not E^1-equivalent to " +
                  format_word(w));
    }
  }
  return out;
}

}  // namespace eqmon
