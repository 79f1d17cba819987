#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqmon/monoid.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

// A class of monoids, standing for the variety it generates (a join when it
// has more than one member).
using MonoidClass = std::vector<FiniteMonoid>;

using Assignment = std::map<Variable, Element>;

// Left-to-right product; the empty word evaluates to the identity.
// PreconditionError if a variable of w is unassigned.
Element evaluate(FiniteMonoid const& m, Word const& w, Assignment const& theta);

inline constexpr std::uint64_t default_satisfaction_budget = 10'000'000;

struct SatisfactionResult {
  bool holds = true;
  // First failing assignment in enumeration order: variables sorted by name,
  // the first one most significant, elements in table order.
  std::optional<Assignment> witness;
  Element lhs_value = 0;
  Element rhs_value = 0;
};

// Exhaustive over all assignments of con(id). BudgetExceeded when
// |M|^|con(id)| exceeds budget.
SatisfactionResult satisfies(FiniteMonoid const& m, Identity const& id,
                             std::uint64_t budget = default_satisfaction_budget);
// Holds in every member of the class; the witness names the first failing
// member through failing_member.
struct ClassSatisfaction {
  bool holds = true;
  std::size_t failing_member = 0;
  SatisfactionResult result;
};
ClassSatisfaction satisfies(MonoidClass const& ms, Identity const& id,
                            std::uint64_t budget = default_satisfaction_budget);

std::vector<SatisfactionResult> satisfies_all(
    FiniteMonoid const& m, std::vector<Identity> const& ids,
    std::uint64_t budget = default_satisfaction_budget);

// "x=b y=c h=a"; with an identity, variables follow first occurrence in it.
std::string format_assignment(FiniteMonoid const& m, Assignment const& theta);
std::string format_assignment(FiniteMonoid const& m, Assignment const& theta,
                              Identity const& id);

// Adds every nontrivial projection of each identity onto a subset of its
// variables; sorted and deduplicated.
std::vector<Identity> close_under_deletion(std::vector<Identity> const& ids);

struct RelFreeCaps {
  std::size_t max_elements = 200'000;
  std::size_t max_tuple_dim = 1'000'000;
  std::size_t max_bytes = std::size_t{1} << 30;
  // Bound on tuple entries computed, elements x generators x dimension.
  std::uint64_t max_work = 2'000'000'000;
};

// Relatively free monoid on k generators of the variety generated by a class.
// An element is the tuple of values of a word under every assignment of the
// generators into every member. Elements are numbered in discovery order; 0
// is the identity and representatives are shortlex-minimal.
class RelFree {
 public:
  static constexpr std::uint32_t unknown = 0xffffffffu;

  std::vector<Variable> const& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return reps_.size(); }
  bool complete() const noexcept { return complete_; }
  std::size_t tuple_dim() const noexcept { return dim_; }
  Word const& representative(std::uint32_t e) const { return reps_.at(e); }
  // Right multiplication by generator g; unknown when the structure is
  // incomplete and the product was never computed.
  std::uint32_t times(std::uint32_t e, std::size_t g) const {
    return trans_.at(static_cast<std::size_t>(e) * gens_.size() + g);
  }
  // Element of a word over the generators, or nullopt if it was not reached.
  std::optional<std::uint32_t> element_of(Word const& w) const;
  std::string const& stop_reason() const noexcept { return stop_reason_; }

 private:
  friend class RelFreeBuilder;
  std::vector<Variable> gens_;
  std::size_t dim_ = 0;
  bool complete_ = false;
  std::vector<Word> reps_;
  std::vector<std::uint32_t> trans_;
  std::string stop_reason_;
};

// Generators are x1..xk (or x, y, z, t for k <= 4) unless given explicitly.
// CapExceeded when the tuple dimension exceeds the cap; element and byte caps
// leave a partial structure with complete() false.
RelFree rel_free(MonoidClass const& ms, std::size_t k, RelFreeCaps const& caps = {});
RelFree rel_free(MonoidClass const& ms, std::vector<Variable> const& gens,
                 RelFreeCaps const& caps = {});
std::vector<Variable> default_generators(std::size_t k);

// Number of words over the generators whose element is e, saturating at
// limit; nullopt when infinitely many. PreconditionError unless complete.
std::optional<std::uint64_t> count_class_words(RelFree const& f, std::uint32_t e,
                                               std::uint64_t limit = 2);
// Shortlex-least word of the class of e other than avoid, if any.
std::optional<Word> other_class_word(RelFree const& f, std::uint32_t e,
                                     Word const& avoid);

// Isoterm verdicts.
struct NotIsoterm {
  Word witness;
};
struct Certified {};
struct BoundedOnly {
  std::size_t length;  // every word up to this length was ruled out
  std::string reason;
};
using IsotermVerdict = std::variant<NotIsoterm, Certified, BoundedOnly>;

struct IsotermBudget {
  std::uint64_t satisfaction = default_satisfaction_budget;
  std::size_t small = 6;  // exhaustive candidate length for phase one
  std::uint64_t candidates = 2'000'000;  // words examined in phase one
  bool certify = true;                   // run phase two
  RelFreeCaps caps{};
};

// Phase one searches for w' != w with M |= w = w'; phase two counts the
// words in the class of w in the relatively free monoid on con(w).
IsotermVerdict isoterm(FiniteMonoid const& m, Word const& w,
                       IsotermBudget const& budget = {});
// Phase one only: returns a witness if one is found.
std::optional<Word> isoterm_falsify(FiniteMonoid const& m, Word const& w,
                                    IsotermBudget const& budget = {});

// Membership verdicts for A in the variety generated by a class.
struct Member {};
struct NotMember {
  Identity witness;  // holds in the class, fails in A
};
struct MemberUnknown {
  std::string report;
};
using MemberVerdict = std::variant<Member, NotMember, MemberUnknown>;

// Short identities tried as cheap falsifiers before the free-object search.
std::vector<Identity> const& stock_identities();

// Tries the stock identities first (unless use_stock is false), then builds
// the relatively free monoid of the class on a generating set of A while
// tracking values in A.
MemberVerdict member(FiniteMonoid const& a, MonoidClass const& b,
                     RelFreeCaps const& caps = {}, bool use_stock = true);

struct LqVerdict {
  bool q_holds = false;
  bool l_holds = false;
};

// Syntactic criteria for Q^1 (same separators, blockwise equal contents)
// and L2^1 (ini(u) = ini(v)). PreconditionError unless both words are
// canonical.
LqVerdict lq_equiv_syntactic(Word const& u, Word const& v);

}  // namespace eqmon
