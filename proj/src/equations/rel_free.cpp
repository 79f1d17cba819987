#include <algorithm>
#include <deque>
#include <string_view>

#include "eqmon/error.hpp"
#include "rel_free_builder.hpp"

namespace eqmon {

namespace {

// Open-addressing set of tuple indices keyed by tuple bytes.
class TupleTable {
 public:
  TupleTable(std::vector<std::uint8_t> const& data, std::size_t dim)
      : data_(data), dim_(dim), slots_(1024, RelFree::unknown) {}

  std::string_view view(std::uint32_t i) const {
    return {reinterpret_cast<char const*>(data_.data()) + std::size_t{i} * dim_, dim_};
  }

  // Index of an equal tuple, or the free slot where it belongs.
  std::pair<std::uint32_t, std::size_t> find(std::string_view t) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = std::hash<std::string_view>{}(t) & mask;
    while (slots_[s] != RelFree::unknown) {
      if (view(slots_[s]) == t) {
        return {slots_[s], s};
      }
      s = (s + 1) & mask;
    }
    return {RelFree::unknown, s};
  }

  void insert(std::uint32_t i, std::size_t slot) {
    slots_[slot] = i;
    if (++count_ * 2 > slots_.size()) {
      grow();
    }
  }

 private:
  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, RelFree::unknown);
    old.swap(slots_);
    std::size_t mask = slots_.size() - 1;
    for (auto i : old) {
      if (i == RelFree::unknown) {
        continue;
      }
      std::size_t s = std::hash<std::string_view>{}(view(i)) & mask;
      while (slots_[s] != RelFree::unknown) {
        s = (s + 1) & mask;
      }
      slots_[s] = i;
    }
  }

  std::vector<std::uint8_t> const& data_;
  std::size_t dim_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

}  // namespace

std::vector<Variable> default_generators(std::size_t k) {
  static char const* const small[] = {"x", "y", "z", "t"};
  std::vector<Variable> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(k <= 4 ? Variable(small[i]) : Variable("x" + std::to_string(i + 1)));
  }
  return out;
}

RelFree RelFreeBuilder::build(MonoidClass const& ms, std::vector<Variable> const& gens,
                              RelFreeCaps const& caps, RelFreeEdgeHook const& hook) {
  if (ms.empty()) {
    throw PreconditionError("rel_free: empty class");
  }
  std::size_t k = gens.size();
  std::size_t dim = 0;
  for (auto const& m : ms) {
    if (!m.identity()) {
      throw PreconditionError("rel_free: '" + m.name() + "' has no identity");
    }
    if (m.size() > 256) {
      throw PreconditionError("rel_free: '" + m.name() + "' has more than 256 elements");
    }
    std::size_t p = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (p > caps.max_tuple_dim / m.size()) {
        throw CapExceeded("rel_free: tuple dimension exceeds " +
                          std::to_string(caps.max_tuple_dim));
      }
      p *= m.size();
    }
    dim += p;
    if (dim > caps.max_tuple_dim) {
      throw CapExceeded("rel_free: tuple dimension exceeds " +
                        std::to_string(caps.max_tuple_dim));
    }
  }

  // Generator tuples and per-position tables.
  std::vector<std::vector<std::uint8_t>> gen_tuple(k, std::vector<std::uint8_t>(dim));
  std::vector<std::uint8_t> identity(dim);
  struct Segment {
    std::size_t offset, length, n;
    std::vector<std::uint8_t> table;
  };
  std::vector<Segment> segments;
  std::size_t offset = 0;
  for (auto const& m : ms) {
    std::size_t n = m.size();
    std::size_t len = 1;
    for (std::size_t i = 0; i < k; ++i) {
      len *= n;
    }
    Segment seg{offset, len, n, std::vector<std::uint8_t>(n * n)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        seg.table[a * n + b] =
            static_cast<std::uint8_t>(m.mul(static_cast<Element>(a), static_cast<Element>(b)));
      }
    }
    for (std::size_t s = 0; s < len; ++s) {
      identity[offset + s] = static_cast<std::uint8_t>(*m.identity());
      std::size_t rest = s;
      for (std::size_t g = k; g-- > 0;) {
        gen_tuple[g][offset + s] = static_cast<std::uint8_t>(rest % n);
        rest /= n;
      }
    }
    segments.push_back(std::move(seg));
    offset += len;
  }

  RelFree out;
  out.gens_ = gens;
  out.dim_ = dim;
  std::uint64_t per_element = std::max<std::uint64_t>(1, std::uint64_t{dim} * std::max<std::size_t>(k, 1));
  std::size_t limit = std::min<std::uint64_t>(
      {caps.max_elements, caps.max_bytes / dim, caps.max_work / per_element});
  limit = std::max<std::size_t>(limit, 1);

  std::vector<std::uint8_t> data(identity);
  TupleTable table(data, dim);
  table.insert(0, table.find(table.view(0)).second);
  out.reps_.push_back(Word{});
  out.trans_.assign(k, RelFree::unknown);

  std::vector<std::uint8_t> product(dim);
  for (std::uint32_t e = 0; e < out.reps_.size(); ++e) {
    for (std::size_t g = 0; g < k; ++g) {
      std::uint8_t const* t = data.data() + std::size_t{e} * dim;
      std::uint8_t const* gt = gen_tuple[g].data();
      for (auto const& seg : segments) {
        for (std::size_t s = seg.offset; s < seg.offset + seg.length; ++s) {
          product[s] = seg.table[std::size_t{t[s]} * seg.n + gt[s]];
        }
      }
      std::string_view pv(reinterpret_cast<char const*>(product.data()), dim);
      auto [found, slot] = table.find(pv);
      bool is_new = found == RelFree::unknown;
      if (is_new) {
        if (out.reps_.size() >= limit) {
          out.stop_reason_ = "element cap of " + std::to_string(limit) + " reached";
          return out;
        }
        found = static_cast<std::uint32_t>(out.reps_.size());
        data.insert(data.end(), product.begin(), product.end());
        table.insert(found, slot);
        Word rep = out.reps_[e];
        rep.push_back(gens[g]);
        out.reps_.push_back(std::move(rep));
        out.trans_.resize(out.trans_.size() + k, RelFree::unknown);
      }
      out.trans_[std::size_t{e} * k + g] = found;
      if (hook && !hook(e, g, found, is_new)) {
        out.stop_reason_ = "stopped by caller";
        return out;
      }
    }
  }
  out.complete_ = true;
  return out;
}

RelFree rel_free(MonoidClass const& ms, std::vector<Variable> const& gens,
                 RelFreeCaps const& caps) {
  return RelFreeBuilder::build(ms, gens, caps, nullptr);
}

RelFree rel_free(MonoidClass const& ms, std::size_t k, RelFreeCaps const& caps) {
  return rel_free(ms, default_generators(k), caps);
}

std::optional<std::uint32_t> RelFree::element_of(Word const& w) const {
  std::uint32_t e = 0;
  for (auto v : w) {
    auto it = std::find(gens_.begin(), gens_.end(), v);
    if (it == gens_.end()) {
      throw PreconditionError("rel_free: '" + v.name() + "' is not a generator");
    }
    e = times(e, static_cast<std::size_t>(it - gens_.begin()));
    if (e == unknown) {
      return std::nullopt;
    }
  }
  return e;
}

namespace {

// States that can reach target through transitions.
std::vector<bool> co_reachable(RelFree const& f, std::uint32_t target) {
  std::size_t n = f.size();
  std::size_t k = f.generators().size();
  std::vector<std::vector<std::uint32_t>> pred(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    for (std::size_t g = 0; g < k; ++g) {
      pred[f.times(e, g)].push_back(e);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{target};
  seen[target] = true;
  while (!stack.empty()) {
    auto e = stack.back();
    stack.pop_back();
    for (auto p : pred[e]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

void require_complete(RelFree const& f, std::uint32_t e) {
  if (!f.complete()) {
    throw PreconditionError("relatively free structure is incomplete");
  }
  if (e >= f.size()) {
    throw PreconditionError("element out of range");
  }
}

}  // namespace

std::optional<std::uint64_t> count_class_words(RelFree const& f, std::uint32_t e,
                                               std::uint64_t limit) {
  require_complete(f, e);
  std::size_t n = f.size();
  std::size_t k = f.generators().size();
  auto live = co_reachable(f, e);
  // Iterative DFS over live states from the identity; a back edge means a
  // cycle on a path to e, hence infinitely many words.
  std::vector<std::uint8_t> colour(n, 0);  // 0 new, 1 open, 2 done
  std::vector<std::uint64_t> paths(n, 0);  // words from state to e, saturated
  if (!live[0]) {
    return 0;
  }
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
  colour[0] = 1;
  while (!stack.empty()) {
    auto& [s, g] = stack.back();
    if (g < k) {
      std::uint32_t t = f.times(s, g++);
      if (!live[t]) {
        continue;
      }
      if (colour[t] == 1) {
        return std::nullopt;
      }
      if (colour[t] == 0) {
        colour[t] = 1;
        stack.emplace_back(t, 0);
      }
      continue;
    }
    std::uint64_t total = s == e ? 1 : 0;
    for (std::size_t h = 0; h < k; ++h) {
      std::uint32_t t = f.times(s, h);
      if (live[t]) {
        total = std::min(limit, total + paths[t]);
      }
    }
    paths[s] = std::min(limit, total);
    colour[s] = 2;
    stack.pop_back();
  }
  return paths[0];
}

std::optional<Word> other_class_word(RelFree const& f, std::uint32_t e, Word const& avoid) {
  require_complete(f, e);
  std::size_t n = f.size();
  std::size_t k = f.generators().size();
  auto live = co_reachable(f, e);
  // Breadth-first over states, keeping the prefix of avoid apart: a node is
  // either "still equal to avoid's prefix of this length" or a live state
  // reached by a word that has left it. Generator order makes the first hit
  // shortlex-least.
  struct Node {
    std::uint32_t state;
    std::int64_t parent;
    std::size_t gen;
  };
  std::vector<Node> nodes;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  std::vector<std::int64_t> on_avoid(avoid.size() + 1, -1);
  auto word_of = [&](std::size_t i) {
    std::vector<Variable> letters;
    for (std::int64_t j = static_cast<std::int64_t>(i); nodes[j].parent >= 0; j = nodes[j].parent) {
      letters.push_back(f.generators()[nodes[j].gen]);
    }
    Word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      w.push_back(*it);
    }
    return w;
  };
  nodes.push_back({0, -1, 0});
  on_avoid[0] = 0;
  queue.push_back(0);
  std::vector<std::size_t> depth{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    bool on_path = depth[i] < on_avoid.size() && on_avoid[depth[i]] == static_cast<std::int64_t>(i);
    if (nodes[i].state == e && !(on_path && depth[i] == avoid.size())) {
      return word_of(i);
    }
    for (std::size_t g = 0; g < k; ++g) {
      std::uint32_t t = f.times(nodes[i].state, g);
      if (!live[t]) {
        continue;
      }
      bool stays = on_path && depth[i] < avoid.size() && avoid[depth[i]] == f.generators()[g];
      if (!stays) {
        if (seen[t]) {
          continue;
        }
        seen[t] = true;
      }
      nodes.push_back({t, static_cast<std::int64_t>(i), g});
      depth.push_back(depth[i] + 1);
      if (stays) {
        on_avoid[depth[i] + 1] = static_cast<std::int64_t>(nodes.size() - 1);
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

}  // namespace eqmon
