#include <algorithm>

#include "eqmon/error.hpp"
#include "eqmon/identities.hpp"
#include "rel_free_builder.hpp"

namespace eqmon {

std::vector<Identity> const& stock_identities() {
  static std::vector<Identity> const ids = [] {
    std::vector<Identity> out;
    for (char const* text : {
             "x y = y x",
             "x^2 = x",
             "x^3 = x",
             "x^3 = x^2",
             "x^4 = x^2",
             "x^2 y^2 = y^2 x^2",
             "x y = x y x",
             "x y = y x y",
             "x y x = x^2 y",
             "x y x = y x^2",
             "x^2 y = y x^2",
             "x^2 y x = x y x",
             "x y x^2 = x y x",
             "x y^2 x = x^2 y^2",
             "x y x y = y x y x",
             "x y x y = x^2 y^2",
             "x y x z x = x y z x",
             "x^2 (y^2 x^2)^2 = (y^2 x^2)^2",
             "x^2 y x^2 z x^2 = x^2 y z x^2",
             "(x^2 y x^2)^2 = x^2 y x^2",
             "x^2 y^2 h x^2 y^2 = x^2 y^2 h y^2 x^2",
             "x^2 h x^2 y^2 = x^2 h y^2 x^2",
         }) {
      out.push_back(parse_identity(text));
    }
    return out;
  }();
  return ids;
}

MemberVerdict member(FiniteMonoid const& a, MonoidClass const& b, RelFreeCaps const& caps,
                     bool use_stock) {
  if (!a.identity()) {
    throw PreconditionError("member: '" + a.name() + "' has no identity");
  }
  for (auto const& id : use_stock ? stock_identities() : std::vector<Identity>{}) {
    try {
      if (satisfies(b, id).holds && !satisfies(a, id).holds) {
        return NotMember{id};
      }
    } catch (BudgetExceeded const&) {
      continue;
    }
  }
  std::vector<Element> gens = generating_set(a);
  if (gens.empty()) {
    return Member{};  // trivial monoid
  }
  std::vector<Variable> vars = default_generators(gens.size());
  // A-value of every free element; a free element with two A-values gives an
  // identity of the class that fails in A.
  std::vector<Element> value{*a.identity()};
  std::optional<std::pair<std::uint32_t, std::size_t>> conflict;
  std::uint32_t conflict_target = 0;
  auto hook = [&](std::uint32_t e, std::size_t g, std::uint32_t t, bool is_new) {
    Element v = a.mul(value[e], gens[g]);
    if (is_new) {
      value.push_back(v);
      return true;
    }
    if (value[t] != v) {
      conflict = {e, g};
      conflict_target = t;
      return false;
    }
    return true;
  };
  RelFree f;
  try {
    f = RelFreeBuilder::build(b, vars, caps, hook);
  } catch (CapExceeded const& e) {
    return MemberUnknown{e.what()};
  }
  if (conflict) {
    Word lhs = f.representative(conflict->first);
    lhs.push_back(vars[conflict->second]);
    return NotMember{Identity{lhs, f.representative(conflict_target)}};
  }
  if (f.complete()) {
    return Member{};
  }
  return MemberUnknown{"relatively free monoid on " + std::to_string(vars.size()) +
                       " generators incomplete after " + std::to_string(f.size()) +
                       " elements: " + f.stop_reason()};
}

}  // namespace eqmon
