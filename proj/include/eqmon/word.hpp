#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eqmon/error.hpp"

namespace eqmon {

// An interned variable name: a lowercase letter optionally followed by
// digits. Two variables are equal iff their names are; ordering is
// lexicographic by name.
class Variable {
 public:
  Variable() = default;
  explicit Variable(std::string_view name);

  static bool valid_name(std::string_view name);

  std::string const& name() const;
  bool is_null() const noexcept { return name_ == nullptr; }

  friend bool operator==(Variable a, Variable b) noexcept {
    return a.name_ == b.name_;
  }
  friend bool operator!=(Variable a, Variable b) noexcept {
    return a.name_ != b.name_;
  }
  friend bool operator<(Variable a, Variable b) {
    return a.name_ != b.name_ && a.name() < b.name();
  }

  std::size_t hash() const noexcept {
    return std::hash<void const*>{}(name_);
  }

 private:
  std::string const* name_ = nullptr;
};

Variable operator""_v(char const* s, std::size_t n);

class Word {
 public:
  using value_type = Variable;
  using const_iterator = std::vector<Variable>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Variable> vs) : letters_(vs) {}
  explicit Word(std::vector<Variable> vs) : letters_(std::move(vs)) {}
  template <typename It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Variable operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  Variable const* data() const noexcept { return letters_.data(); }
  std::vector<Variable> const& letters() const noexcept { return letters_; }

  void push_back(Variable v) { letters_.push_back(v); }
  Word& operator+=(Word const& other);
  Word subword(std::size_t pos, std::size_t len) const;
  Word power(std::size_t k) const;

  friend Word operator*(Word a, Word const& b) {
    a += b;
    return a;
  }
  friend bool operator==(Word const& a, Word const& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(Word const& a, Word const& b) { return !(a == b); }
  // Shortlex: shorter first, then lexicographic by variable name.
  friend bool operator<(Word const& a, Word const& b);

  std::size_t hash() const noexcept;

 private:
  std::vector<Variable> letters_;
};

struct Identity {
  Word lhs;
  Word rhs;

  bool trivial() const { return lhs == rhs; }
  Identity reversed() const { return {rhs, lhs}; }
  friend bool operator==(Identity const& a, Identity const& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  friend bool operator!=(Identity const& a, Identity const& b) {
    return !(a == b);
  }
  friend bool operator<(Identity const& a, Identity const& b) {
    return a.lhs < b.lhs || (a.lhs == b.lhs && a.rhs < b.rhs);
  }
};

// Unmapped variables act as the identity map.
using Substitution = std::map<Variable, Word>;

// Parsing and formatting.
Word parse_word(std::string_view text);
Identity parse_identity(std::string_view text);
std::string format_word(Word const& w);
std::string format_identity(Identity const& id);
std::string format_substitution(Substitution const& theta);

struct ContentOcc {
  std::set<Variable> content;
  std::map<Variable, std::size_t> occ;
  std::set<Variable> simple;
};

ContentOcc content_occ(Word const& w);
std::set<Variable> content(Word const& w);
std::set<Variable> content(Identity const& id);
std::size_t occurrences(Variable x, Word const& w);
Word ini(Word const& w);
Word project(Word const& w, std::set<Variable> const& keep);
Identity project(Identity const& id, std::set<Variable> const& keep);
Word substitute(Word const& w, Substitution const& theta);
Identity substitute(Identity const& id, Substitution const& theta);
bool is_factor(Word const& u, Word const& v);
// Exchange two variables throughout a word.
Word swap_variables(Word const& w, Variable a, Variable b);

}  // namespace eqmon

template <>
struct std::hash<eqmon::Variable> {
  std::size_t operator()(eqmon::Variable v) const noexcept { return v.hash(); }
};

template <>
struct std::hash<eqmon::Word> {
  std::size_t operator()(eqmon::Word const& w) const noexcept {
    return w.hash();
  }
};
