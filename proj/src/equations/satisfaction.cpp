#include <algorithm>
#include <set>
#include <sstream>

#include "eqmon/canonical.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"

namespace eqmon {

Element evaluate(FiniteMonoid const& m, Word const& w, Assignment const& theta) {
  if (w.size() == 0) {
    return m.one();
  }
  Element acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = theta.find(w[i]);
    if (it == theta.end()) {
      throw PreconditionError("evaluate: variable '" + w[i].name() + "' is unassigned");
    }
    if (it->second >= m.size()) {
      throw PreconditionError("evaluate: element out of range");
    }
    acc = i == 0 ? it->second : m.mul(acc, it->second);
  }
  return acc;
}

namespace {

// Exhaustive search over assignments in mixed-radix order. A subtree is
// skipped when a fully assigned run of letters on each side already
// multiplies to the zero element, since both sides are then zero throughout.
class Checker {
 public:
  Checker(FiniteMonoid const& m, Identity const& id) : m_(m) {
    auto con = content(id);
    vars_.assign(con.begin(), con.end());
    auto index = [&](Word const& w) {
      std::vector<std::size_t> out;
      for (auto v : w) {
        out.push_back(static_cast<std::size_t>(
            std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin()));
      }
      return out;
    };
    lhs_ = index(id.lhs);
    rhs_ = index(id.rhs);
    zero_ = zero_element(m);
    values_.assign(vars_.size(), 0);
    if ((lhs_.empty() || rhs_.empty()) && !m.identity()) {
      throw PreconditionError("satisfies: empty side needs a monoid");
    }
  }

  std::vector<Variable> const& vars() const { return vars_; }

  SatisfactionResult run() {
    SatisfactionResult out;
    if (vars_.empty()) {
      out.lhs_value = value(lhs_);
      out.rhs_value = value(rhs_);
      out.holds = out.lhs_value == out.rhs_value;
      if (!out.holds) {
        out.witness = Assignment{};
      }
      return out;
    }
    if (search(0, out)) {
      return out;
    }
    out.holds = true;
    return out;
  }

 private:
  Element value(std::vector<std::size_t> const& side) const {
    if (side.empty()) {
      return *m_.identity();
    }
    Element acc = values_[side[0]];
    for (std::size_t i = 1; i < side.size(); ++i) {
      acc = m_.mul(acc, values_[side[i]]);
    }
    return acc;
  }

  bool side_is_zero(std::vector<std::size_t> const& side, std::size_t assigned) const {
    bool in_run = false;
    Element acc = 0;
    for (auto idx : side) {
      if (idx >= assigned) {
        in_run = false;
        continue;
      }
      acc = in_run ? m_.mul(acc, values_[idx]) : values_[idx];
      in_run = true;
      if (acc == *zero_) {
        return true;
      }
    }
    return false;
  }

  // Returns true when a failing assignment was found and recorded.
  bool search(std::size_t depth, SatisfactionResult& out) {
    std::size_t n = m_.size();
    bool last = depth + 1 == vars_.size();
    for (Element e = 0; e < n; ++e) {
      values_[depth] = e;
      if (last) {
        Element l = value(lhs_);
        Element r = value(rhs_);
        if (l != r) {
          out.holds = false;
          out.lhs_value = l;
          out.rhs_value = r;
          Assignment a;
          for (std::size_t i = 0; i < vars_.size(); ++i) {
            a[vars_[i]] = values_[i];
          }
          out.witness = std::move(a);
          return true;
        }
        continue;
      }
      if (zero_ && side_is_zero(lhs_, depth + 1) && side_is_zero(rhs_, depth + 1)) {
        continue;
      }
      if (search(depth + 1, out)) {
        return true;
      }
    }
    return false;
  }

  FiniteMonoid const& m_;
  std::vector<Variable> vars_;
  std::vector<std::size_t> lhs_, rhs_;
  std::optional<Element> zero_;
  std::vector<Element> values_;
};

void check_budget(std::size_t n, std::size_t k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / std::max<std::size_t>(n, 1)) {
      throw BudgetExceeded("satisfies: " + std::to_string(n) + "^" + std::to_string(k) +
                           " assignments exceed the budget of " + std::to_string(budget));
    }
    total *= n;
  }
}

}  // namespace

SatisfactionResult satisfies(FiniteMonoid const& m, Identity const& id,
                             std::uint64_t budget) {
  check_budget(m.size(), content(id).size(), budget);
  return Checker(m, id).run();
}

ClassSatisfaction satisfies(MonoidClass const& ms, Identity const& id,
                            std::uint64_t budget) {
  ClassSatisfaction out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    SatisfactionResult r = satisfies(ms[i], id, budget);
    if (!r.holds) {
      out.holds = false;
      out.failing_member = i;
      out.result = std::move(r);
      return out;
    }
  }
  return out;
}

std::vector<SatisfactionResult> satisfies_all(FiniteMonoid const& m,
                                              std::vector<Identity> const& ids,
                                              std::uint64_t budget) {
  std::vector<SatisfactionResult> out;
  for (auto const& id : ids) {
    out.push_back(satisfies(m, id, budget));
  }
  return out;
}

std::string format_assignment(FiniteMonoid const& m, Assignment const& theta) {
  std::ostringstream out;
  bool first = true;
  for (auto const& [v, e] : theta) {
    out << (first ? "" : " ") << v.name() << '=' << m.label(e);
    first = false;
  }
  return out.str();
}

std::string format_assignment(FiniteMonoid const& m, Assignment const& theta,
                              Identity const& id) {
  std::ostringstream out;
  bool first = true;
  for (auto v : ini(id.lhs * id.rhs)) {
    auto it = theta.find(v);
    if (it == theta.end()) {
      continue;
    }
    out << (first ? "" : " ") << v.name() << '=' << m.label(it->second);
    first = false;
  }
  return out.str();
}

std::vector<Identity> close_under_deletion(std::vector<Identity> const& ids) {
  std::set<Identity> out;
  for (auto const& id : ids) {
    auto con = content(id);
    std::vector<Variable> vars(con.begin(), con.end());
    if (vars.size() > 20) {
      throw PreconditionError("close_under_deletion: too many variables");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
      std::set<Variable> keep;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (mask >> i & 1) {
          keep.insert(vars[i]);
        }
      }
      Identity p = project(id, keep);
      if (!p.trivial()) {
        out.insert(p);
      }
    }
  }
  return {out.begin(), out.end()};
}

LqVerdict lq_equiv_syntactic(Word const& u, Word const& v) {
  auto cu = is_canonical(u);
  auto cv = is_canonical(v);
  if (!cu || !cv) {
    throw PreconditionError("lq_equiv_syntactic: both words must be in canonical form");
  }
  LqVerdict out;
  out.l_holds = ini(u) == ini(v);
  out.q_holds = cu->separators == cv->separators;
  for (std::size_t i = 0; out.q_holds && i < cu->blocks.size(); ++i) {
    std::set<Variable> a(cu->blocks[i].begin(), cu->blocks[i].end());
    std::set<Variable> b(cv->blocks[i].begin(), cv->blocks[i].end());
    out.q_holds = a == b;
  }
  return out;
}

}  // namespace eqmon
