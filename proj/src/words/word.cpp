#include "eqmon/word.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_set>

namespace eqmon {

namespace {

struct Interner {
  std::mutex mtx;
  std::unordered_set<std::string> names;  // node-based: addresses are stable

  std::string const* intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mtx);
    return &*names.emplace(name).first;
  }
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

bool Variable::valid_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Variable::Variable(std::string_view name) {
  if (!valid_name(name)) {
    throw ParseError("invalid variable name '" + std::string(name) + "'");
  }
  name_ = interner().intern(name);
}

std::string const& Variable::name() const {
  static std::string const null_name = "<null>";
  return name_ == nullptr ? null_name : *name_;
}

Variable operator""_v(char const* s, std::size_t n) {
  return Variable(std::string_view(s, n));
}

Word& Word::operator+=(Word const& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(letters_.begin() + pos, letters_.begin() + pos + len);
}

Word Word::power(std::size_t k) const {
  Word out;
  for (std::size_t i = 0; i < k; ++i) {
    out += *this;
  }
  return out;
}

bool operator<(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t Word::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Variable v : letters_) {
    h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    if (pos_ != text_.size()) {
      fail("unexpected ')'");
    }
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  // Number of bytes of a separator starting at i, or 0.
  std::size_t separator_at(std::size_t i) const {
    if (i >= text_.size()) {
      return 0;
    }
    char c = text_[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '*') {
      return 1;
    }
    if (text_.substr(i, 2) == "\xC2\xB7") {  // middle dot
      return 2;
    }
    return 0;
  }

  bool boundary_before(std::size_t i) const {
    if (i == 0) {
      return true;
    }
    char c = text_[i - 1];
    return std::isspace(static_cast<unsigned char>(c)) || c == '.' ||
           c == '*' || c == '(' || c == '\xB7';
  }

  bool boundary_at(std::size_t i) const {
    return i >= text_.size() || separator_at(i) > 0 || text_[i] == ')' ||
           text_[i] == '(';
  }

  void skip_separators() {
    while (std::size_t n = separator_at(pos_)) {
      pos_ += n;
    }
  }

  std::size_t exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      return 1;
    }
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("missing exponent after '^'");
    }
    if (pos_ - start > 6) {
      fail("exponent too large");
    }
    std::size_t k = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (k == 0) {
      fail("zero exponent");
    }
    return k;
  }

  Word sequence() {
    Word out;
    while (true) {
      skip_separators();
      if (pos_ >= text_.size() || text_[pos_] == ')') {
        return out;
      }
      char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        Word inner = sequence();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
          fail("unbalanced '('");
        }
        ++pos_;
        out += inner.power(exponent());
      } else if (c == '1') {
        if (!boundary_before(pos_)) {
          fail("malformed token");
        }
        ++pos_;
        exponent();
        if (!boundary_at(pos_)) {
          fail("malformed token");
        }
      } else if (c >= 'a' && c <= 'z') {
        std::size_t start = pos_++;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        bool multi = pos_ - start > 1;
        if (multi && !boundary_before(start)) {
          fail("multi-character variable juxtaposed without separator");
        }
        Variable v(text_.substr(start, pos_ - start));
        std::size_t k = exponent();
        if (multi && !boundary_at(pos_)) {
          fail("multi-character variable juxtaposed without separator");
        }
        for (std::size_t i = 0; i < k; ++i) {
          out.push_back(v);
        }
      } else {
        fail(std::string("malformed token '") + c + "'");
      }
    }
  }
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Identity parse_identity(std::string_view text) {
  std::size_t pos = text.find("\xE2\x89\x88");  // approximately-equal sign
  std::size_t len = 3;
  if (pos == std::string_view::npos) {
    pos = text.find('=');
    len = 1;
  }
  if (pos == std::string_view::npos) {
    pos = text.find('~');
    len = 1;
  }
  if (pos == std::string_view::npos) {
    throw ParseError("identity needs '=' between its sides: '" +
                     std::string(text) + "'");
  }
  std::string_view rest = text.substr(pos + len);
  if (rest.find('=') != std::string_view::npos) {
    throw ParseError("identity has more than one '=': '" + std::string(text) +
                     "'");
  }
  return {parse_word(text.substr(0, pos)), parse_word(rest)};
}

std::string format_word(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += w[i].name();
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

std::string format_identity(Identity const& id) {
  return format_word(id.lhs) + " = " + format_word(id.rhs);
}

std::string format_substitution(Substitution const& theta) {
  std::string out;
  for (auto const& [v, img] : theta) {
    if (!out.empty()) {
      out += ", ";
    }
    out += v.name() + " -> " + format_word(img);
  }
  return "{" + out + "}";
}

// ---------------------------------------------------------------------------
// Word statistics and maps
// ---------------------------------------------------------------------------

ContentOcc content_occ(Word const& w) {
  ContentOcc r;
  for (Variable v : w) {
    r.content.insert(v);
    ++r.occ[v];
  }
  for (auto const& [v, n] : r.occ) {
    if (n == 1) {
      r.simple.insert(v);
    }
  }
  return r;
}

std::set<Variable> content(Word const& w) {
  return std::set<Variable>(w.begin(), w.end());
}

std::set<Variable> content(Identity const& id) {
  std::set<Variable> c = content(id.lhs);
  c.insert(id.rhs.begin(), id.rhs.end());
  return c;
}

std::size_t occurrences(Variable x, Word const& w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

Word ini(Word const& w) {
  Word out;
  std::set<Variable> seen;
  for (Variable v : w) {
    if (seen.insert(v).second) {
      out.push_back(v);
    }
  }
  return out;
}

Word project(Word const& w, std::set<Variable> const& keep) {
  Word out;
  for (Variable v : w) {
    if (keep.count(v) != 0) {
      out.push_back(v);
    }
  }
  return out;
}

Identity project(Identity const& id, std::set<Variable> const& keep) {
  return {project(id.lhs, keep), project(id.rhs, keep)};
}

Word substitute(Word const& w, Substitution const& theta) {
  Word out;
  for (Variable v : w) {
    auto it = theta.find(v);
    if (it == theta.end()) {
      out.push_back(v);
    } else {
      out += it->second;
    }
  }
  return out;
}

Identity substitute(Identity const& id, Substitution const& theta) {
  return {substitute(id.lhs, theta), substitute(id.rhs, theta)};
}

bool is_factor(Word const& u, Word const& v) {
  if (u.empty()) {
    return true;
  }
  return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end();
}

Word swap_variables(Word const& w, Variable a, Variable b) {
  Word out;
  for (Variable v : w) {
    out.push_back(v == a ? b : (v == b ? a : v));
  }
  return out;
}

}  // namespace eqmon
