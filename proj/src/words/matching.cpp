#include "eqmon/matching.hpp"

#include <algorithm>
#include <set>

namespace eqmon {

namespace {

// Backtracking over (pattern position -> text interval). Images of bound
// variables are intervals of whichever text they were first matched in.
class Engine {
 public:
  struct Equation {
    std::vector<int> pattern;  // local variable indices
    Word const* text;
    bool exact;  // false: pattern may stop anywhere (prefix match)
  };

  using Visit = std::function<bool(std::size_t end)>;

  Engine(std::vector<std::pair<Word const*, Word const*>> const& eqs,
         bool exact, MatchOptions opts)
      : opts_(opts) {
    for (auto const& [pat, text] : eqs) {
      Equation eq{{}, text, exact};
      for (Variable v : *pat) {
        eq.pattern.push_back(local(v));
      }
      eqs_.push_back(std::move(eq));
    }
    ptr_.assign(vars_.size(), nullptr);
    len_.assign(vars_.size(), 0);
    bound_.assign(vars_.size(), 0);
  }

  std::vector<Variable> const& variables() const { return vars_; }

  Substitution current() const {
    Substitution theta;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      theta.emplace(vars_[i], Word(ptr_[i], ptr_[i] + len_[i]));
    }
    return theta;
  }

  // Runs from the given start offset of the first equation's text.
  bool run(std::size_t start, Visit const& visit) {
    visit_ = &visit;
    return step(0, 0, start);
  }

 private:
  MatchOptions opts_;
  std::vector<Equation> eqs_;
  std::vector<Variable> vars_;
  std::vector<Variable const*> ptr_;
  std::vector<std::size_t> len_;
  std::vector<char> bound_;
  Visit const* visit_ = nullptr;

  int local(Variable v) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it != vars_.end()) {
      return static_cast<int>(it - vars_.begin());
    }
    vars_.push_back(v);
    return static_cast<int>(vars_.size() - 1);
  }

  // Minimum text length consumed by pattern[pi..] under current bindings,
  // counting an unbound variable v as min_len(v) per occurrence, except the
  // variable `skip` which is ignored.
  std::size_t min_rest(Equation const& eq, std::size_t pi, int skip) const {
    std::size_t need = 0;
    for (std::size_t i = pi; i < eq.pattern.size(); ++i) {
      int v = eq.pattern[i];
      if (v == skip) {
        continue;
      }
      need += bound_[v] ? len_[v] : (opts_.nonempty_images ? 1 : 0);
    }
    return need;
  }

  bool step(std::size_t e, std::size_t pi, std::size_t ti) {
    Equation const& eq = eqs_[e];
    Word const& text = *eq.text;
    if (pi == eq.pattern.size()) {
      if (!eq.exact) {
        return (*visit_)(ti);
      }
      if (ti != text.size()) {
        return true;
      }
      if (e + 1 == eqs_.size()) {
        return (*visit_)(ti);
      }
      return step(e + 1, 0, 0);
    }
    std::size_t remaining = text.size() - ti;
    int v = eq.pattern[pi];
    if (bound_[v]) {
      std::size_t n = len_[v];
      if (n > remaining ||
          !std::equal(ptr_[v], ptr_[v] + n, text.data() + ti)) {
        return true;
      }
      return step(e, pi + 1, ti + n);
    }
    std::size_t copies = static_cast<std::size_t>(
        std::count(eq.pattern.begin() + pi, eq.pattern.end(), v));
    std::size_t others = min_rest(eq, pi, v);
    if (others > remaining) {
      return true;
    }
    std::size_t max_len = (remaining - others) / copies;
    std::size_t min_len = opts_.nonempty_images ? 1 : 0;
    if (eq.exact && pi + copies == eq.pattern.size() - 0 &&
        std::all_of(eq.pattern.begin() + pi, eq.pattern.end(),
                    [&](int u) { return u == v; })) {
      // Only copies of v remain: the length is forced.
      if (remaining % copies != 0) {
        return true;
      }
      min_len = std::max(min_len, remaining / copies);
      max_len = std::min(max_len, remaining / copies);
    }
    bound_[v] = 1;
    ptr_[v] = text.data() + ti;
    for (std::size_t n = min_len; n <= max_len; ++n) {
      len_[v] = n;
      if (!step(e, pi + 1, ti + n)) {
        bound_[v] = 0;
        return false;
      }
    }
    bound_[v] = 0;
    return true;
  }
};

}  // namespace

void for_each_occurrence(
    Word const& pattern, Word const& text, MatchOptions opts,
    std::function<bool(std::size_t, std::size_t, Substitution const&)> const&
        visit) {
  Engine engine({{&pattern, &text}}, false, opts);
  for (std::size_t start = 0; start <= text.size(); ++start) {
    bool go = engine.run(start, [&](std::size_t end) {
      return visit(start, end, engine.current());
    });
    if (!go) {
      return;
    }
  }
}

std::vector<Substitution> match_pattern(Word const& pattern, Word const& text,
                                        MatchOptions opts) {
  std::set<Substitution> found;
  for_each_occurrence(pattern, text, opts,
                      [&](std::size_t, std::size_t, Substitution const& theta) {
                        found.insert(theta);
                        return true;
                      });
  return {found.begin(), found.end()};
}

void for_each_exact_solution(
    std::vector<std::pair<Word, Word>> const& equations, MatchOptions opts,
    std::function<bool(Substitution const&)> const& visit) {
  if (equations.empty()) {
    visit({});
    return;
  }
  std::vector<std::pair<Word const*, Word const*>> refs;
  for (auto const& [p, t] : equations) {
    refs.emplace_back(&p, &t);
  }
  Engine engine(refs, true, opts);
  engine.run(0, [&](std::size_t) { return visit(engine.current()); });
}

}  // namespace eqmon
