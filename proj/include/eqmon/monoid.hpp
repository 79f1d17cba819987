#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqmon/error.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

using Element = std::uint32_t;

// A finite multiplication table with labelled elements. When identity() is
// empty the table is a plain semigroup (for example a presentation closure
// before 1 is adjoined); everything that evaluates the empty word needs it.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;
  // table is row-major: table[a * n + b] = a.b. Throws on dimension mismatch,
  // out-of-range entries, or duplicate labels.
  FiniteMonoid(std::string name, std::vector<std::string> labels,
               std::vector<Element> table, std::optional<Element> identity);

  std::string const& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t size() const noexcept { return labels_.size(); }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::string const& label(Element e) const { return labels_.at(e); }
  std::optional<Element> find(std::string const& label) const;
  Element index_of(std::string const& label) const;
  std::optional<Element> identity() const noexcept { return identity_; }
  // The identity, or PreconditionError for a semigroup table.
  Element one() const;

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * labels_.size() + b];
  }
  std::vector<Element> const& table() const noexcept { return table_; }

  friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_ &&
           a.identity_ == b.identity_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Element> table_;
  std::optional<Element> identity_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  // First (a, b, c) with (ab)c != a(bc), or (e, x, x) for an identity-law
  // failure of the declared identity e at x.
  std::optional<std::array<Element, 3>> witness;
};

ValidationReport validate(FiniteMonoid const& m);

// Always adds a fresh identity, appended as the last element.
FiniteMonoid adjoin_identity(FiniteMonoid const& s);
FiniteMonoid direct_product(FiniteMonoid const& a, FiniteMonoid const& b);
// Closure of gens together with the identity.
FiniteMonoid submonoid(FiniteMonoid const& m, std::vector<Element> const& gens);
FiniteMonoid opposite(FiniteMonoid const& m);
FiniteMonoid trivial_monoid();

// Rees quotient of the free monoid by the ideal of non-factors of W.
// Elements: 1, then the other factors in shortlex order, then 0.
FiniteMonoid rees_quotient(std::vector<Word> const& words);
std::string rees_label(Word const& w);

std::optional<Element> zero_element(FiniteMonoid const& m);
bool is_group(FiniteMonoid const& m);
// Least e >= 1 with x^e = 1 for every x. Requires is_group(m).
std::size_t exponent_of_group(FiniteMonoid const& m);

// A small generating set (excluding the identity): elements that are not
// products of two non-identity elements first, then greedy additions.
std::vector<Element> generating_set(FiniteMonoid const& m);
// Closure of gens (plus identity if present) under multiplication.
std::vector<Element> closure(FiniteMonoid const& m,
                             std::vector<Element> const& gens);

// Bijection f: A -> B with f(xy) = f(x)f(y); with allow_anti, falls back to
// f(xy) = f(y)f(x) when no isomorphism exists.
struct Isomorphism {
  std::vector<Element> map;
  bool anti = false;
};
std::optional<Isomorphism> find_isomorphism(FiniteMonoid const& a,
                                            FiniteMonoid const& b,
                                            bool allow_anti = false);

}  // namespace eqmon
