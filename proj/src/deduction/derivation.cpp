#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "eqmon/deduction.hpp"
#include "eqmon/error.hpp"
#include "eqmon/matching.hpp"

namespace eqmon {

namespace {

Word const& source_side(Identity const& rule, Direction d) {
  return d == Direction::forward ? rule.lhs : rule.rhs;
}

Word const& target_side(Identity const& rule, Direction d) {
  return d == Direction::forward ? rule.rhs : rule.lhs;
}

bool has_prefix(Word const& w, Word const& p) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool has_suffix(Word const& w, Word const& s) {
  return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

// Occurrences of s in w as (start, end, theta), including the empty pattern,
// which occurs at every position.
void occurrences_of(Word const& s, Word const& w,
                    std::function<bool(std::size_t, std::size_t, Substitution const&)> const& visit) {
  if (s.empty()) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (!visit(i, i, Substitution{})) {
        return;
      }
    }
    return;
  }
  for_each_occurrence(s, w, MatchOptions{}, visit);
}

// theta restricted to the rule's variables, with the unbound ones sent to 1.
Substitution complete_theta(Substitution theta, Identity const& rule) {
  auto con = content(rule);
  for (auto v : con) {
    theta.try_emplace(v, Word{});
  }
  for (auto it = theta.begin(); it != theta.end();) {
    it = con.count(it->first) ? std::next(it) : theta.erase(it);
  }
  return theta;
}

// Steps taking `from` to exactly `to` with the rule applied in direction d.
std::optional<DerivationStep> step_between(Word const& from, Word const& to,
                                           Identity const& rule, Direction d) {
  Word const& s = source_side(rule, d);
  Word const& t = target_side(rule, d);
  std::optional<DerivationStep> best;
  occurrences_of(s, from, [&](std::size_t start, std::size_t end, Substitution const& theta) {
    Word left = from.subword(0, start);
    Word right = from.subword(end, from.size() - end);
    if (left.size() + right.size() > to.size() || !has_prefix(to, left) ||
        !has_suffix(to, right)) {
      return true;
    }
    if (best && best->left.size() + best->right.size() <= left.size() + right.size()) {
      return true;
    }
    Word middle = to.subword(left.size(), to.size() - left.size() - right.size());
    std::vector<std::pair<Word, Word>> eqs{{t, middle}};
    for (auto const& [v, image] : theta) {
      if (content(t).count(v)) {
        eqs.push_back({Word{v}, image});
      }
    }
    for_each_exact_solution(eqs, MatchOptions{}, [&](Substitution const& sol) {
      Substitution full = theta;
      for (auto const& [v, image] : sol) {
        full[v] = image;
      }
      DerivationStep step{from, to, rule, "", d, complete_theta(full, rule), left, right};
      if (reconstructs(step)) {
        best = std::move(step);
        return false;
      }
      return true;
    });
    return true;
  });
  return best;
}

}  // namespace

bool reconstructs(DerivationStep const& step) {
  Word const& s = source_side(step.rule, step.direction);
  Word const& t = target_side(step.rule, step.direction);
  return step.from == step.left * substitute(s, step.theta) * step.right &&
         step.to == step.left * substitute(t, step.theta) * step.right;
}

std::optional<DerivationStep> directly_deducible(Identity const& target, Identity const& rule) {
  if (target.trivial()) {
    return std::nullopt;
  }
  std::optional<DerivationStep> best;
  for (Direction d : {Direction::forward, Direction::backward}) {
    for (bool flip : {false, true}) {
      Word const& from = flip ? target.rhs : target.lhs;
      Word const& to = flip ? target.lhs : target.rhs;
      auto step = step_between(from, to, rule, d);
      if (step && (!best || step->left.size() + step->right.size() <
                                best->left.size() + best->right.size())) {
        best = std::move(step);
      }
    }
  }
  return best;
}

DerivationReport check_derivation(std::vector<DerivationStep> const& script,
                                  std::vector<Identity> const& sigma,
                                  std::optional<Identity> const& target) {
  auto fail = [](std::size_t i, std::string msg) {
    return DerivationReport{false, i, "step " + std::to_string(i + 1) + ": " + std::move(msg)};
  };
  std::unordered_set<Word> seen;
  for (std::size_t i = 0; i < script.size(); ++i) {
    auto const& st = script[i];
    bool known = std::any_of(sigma.begin(), sigma.end(), [&](Identity const& r) {
      return r == st.rule || r == st.rule.reversed();
    });
    if (!known) {
      return fail(i, "rule " + format_identity(st.rule) + " is not in the rule set");
    }
    if (!reconstructs(st)) {
      return fail(i, "does not reconstruct " + format_word(st.from) + " -> " +
                         format_word(st.to));
    }
    if (i > 0 && script[i - 1].to != st.from) {
      return fail(i, "starts at " + format_word(st.from) + " but the previous step ended at " +
                         format_word(script[i - 1].to));
    }
    if (i == 0) {
      seen.insert(st.from);
    }
    if (!seen.insert(st.to).second) {
      return fail(i, "word " + format_word(st.to) + " repeats");
    }
  }
  if (target) {
    if (script.empty()) {
      if (!target->trivial()) {
        return {false, 0, "empty script for a nontrivial identity"};
      }
    } else {
      Identity ends{script.front().from, script.back().to};
      if (ends != *target && ends != target->reversed()) {
        return {false, script.size() - 1,
                "derives " + format_identity(ends) + ", not " + format_identity(*target)};
      }
    }
  }
  return {};
}

DerivationStep reversed(DerivationStep const& step) {
  DerivationStep out = step;
  std::swap(out.from, out.to);
  out.direction = step.direction == Direction::forward ? Direction::backward : Direction::forward;
  return out;
}

std::vector<DerivationStep> reversed(std::vector<DerivationStep> const& script) {
  std::vector<DerivationStep> out;
  for (auto it = script.rbegin(); it != script.rend(); ++it) {
    out.push_back(reversed(*it));
  }
  return out;
}

std::vector<DerivationStep> lift(std::vector<DerivationStep> const& script,
                                 Substitution const& theta, Word const& left,
                                 Word const& right) {
  std::vector<DerivationStep> out;
  for (auto const& st : script) {
    DerivationStep s = st;
    s.from = left * substitute(st.from, theta) * right;
    s.to = left * substitute(st.to, theta) * right;
    for (auto& [v, image] : s.theta) {
      image = substitute(image, theta);
    }
    s.left = left * substitute(st.left, theta);
    s.right = substitute(st.right, theta) * right;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<DerivationStep> neighbours(Word const& w, std::vector<Identity> const& sigma,
                                       DeriveCaps const& caps) {
  std::vector<DerivationStep> out;
  std::unordered_set<Word> seen{w};
  for (auto const& rule : sigma) {
    for (Direction d : {Direction::forward, Direction::backward}) {
      Word const& s = source_side(rule, d);
      Word const& t = target_side(rule, d);
      occurrences_of(s, w, [&](std::size_t start, std::size_t end, Substitution const& theta) {
        Substitution full = complete_theta(theta, rule);
        Word image = substitute(t, full);
        if (w.size() - (end - start) + image.size() > caps.max_length) {
          return true;
        }
        Word left = w.subword(0, start);
        Word right = w.subword(end, w.size() - end);
        Word next = left * image * right;
        if (!seen.insert(next).second) {
          return true;
        }
        if (content(next).size() > caps.max_variables) {
          return true;
        }
        out.push_back(DerivationStep{w, std::move(next), rule, "", d, std::move(full),
                                     std::move(left), std::move(right)});
        return true;
      });
    }
  }
  return out;
}

DeriveResult derive_bounded(std::vector<Identity> const& sigma, Identity const& target,
                            DeriveCaps const& caps) {
  if (caps.max_length == 0 || caps.max_nodes == 0) {
    throw PreconditionError("derive_bounded: caps must be positive");
  }
  DeriveResult out;
  if (target.trivial()) {
    out.status = DeriveStatus::found;
    return out;
  }
  for (auto const& side : {target.lhs, target.rhs}) {
    if (side.size() > caps.max_length || content(side).size() > caps.max_variables) {
      out.status = DeriveStatus::cap_reached;
      return out;
    }
  }
  // Each tree maps a word to the step that first reached it from its parent.
  using Tree = std::unordered_map<Word, std::optional<DerivationStep>>;
  Tree trees[2];
  std::vector<Word> frontier[2];
  trees[0].emplace(target.lhs, std::nullopt);
  trees[1].emplace(target.rhs, std::nullopt);
  frontier[0] = {target.lhs};
  frontier[1] = {target.rhs};

  auto path_to_root = [&](int side, Word w) {
    std::vector<DerivationStep> steps;
    while (auto const& st = trees[side].at(w)) {
      steps.push_back(*st);
      w = st->from;
    }
    return steps;  // ordered from w back towards the root, each parent -> child
  };
  auto assemble = [&](Word const& meet) {
    auto forward = path_to_root(0, meet);
    std::reverse(forward.begin(), forward.end());
    for (auto const& st : path_to_root(1, meet)) {
      forward.push_back(reversed(st));
    }
    return forward;
  };

  while (!frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<Word> next;
    for (auto const& w : frontier[side]) {
      for (auto& st : neighbours(w, sigma, caps)) {
        if (trees[side].count(st.to)) {
          continue;
        }
        if (trees[0].size() + trees[1].size() >= caps.max_nodes) {
          out.status = DeriveStatus::cap_reached;
          out.nodes = trees[0].size() + trees[1].size();
          return out;
        }
        Word to = st.to;
        trees[side].emplace(to, std::move(st));
        if (trees[1 - side].count(to)) {
          out.status = DeriveStatus::found;
          out.nodes = trees[0].size() + trees[1].size();
          out.script = assemble(to);
          return out;
        }
        next.push_back(std::move(to));
      }
    }
    // Shortlex-first expansion keeps the search deterministic.
    std::sort(next.begin(), next.end());
    frontier[side] = std::move(next);
  }
  out.status = DeriveStatus::exhausted;
  out.nodes = trees[0].size() + trees[1].size();
  return out;
}

}  // namespace eqmon
