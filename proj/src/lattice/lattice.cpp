#include "eqmon/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "eqmon/catalog.hpp"
#include "eqmon/embedded_data.hpp"
#include "eqmon/error.hpp"
#include "eqmon/file.hpp"
#include "eqmon/identities.hpp"

namespace eqmon {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

std::string replace_all(std::string s, std::string const& from, std::string const& to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

// "gen A, B" and "ids @E1; u = v" attributes.
void parse_attributes(VarietyNode& node, std::vector<std::string> const& parts,
                      std::size_t first, std::size_t line_no) {
  for (std::size_t i = first; i < parts.size(); ++i) {
    auto const& part = parts[i];
    if (part.rfind("gen ", 0) == 0) {
      for (auto const& g : split(part.substr(4), ',')) {
        node.generators.push_back(g);
      }
    } else if (part.rfind("ids ", 0) == 0) {
      for (auto const& text : split(part.substr(4), ';')) {
        for (auto const& id : resolve_identities(text)) {
          node.identities.push_back(id);
        }
      }
    } else {
      throw ParseError("poset line " + std::to_string(line_no) + ": unknown attribute '" +
                       part + "'");
    }
  }
}

std::pair<std::string, std::string> parse_cover(std::string const& text, std::size_t line_no) {
  auto parts = split(text, '<');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
    throw ParseError("poset line " + std::to_string(line_no) + ": expected '<lower> < <upper>'");
  }
  return {parts[0], parts[1]};
}

// Longest chain from a minimal element.
std::vector<std::size_t> heights(Poset const& p) {
  std::size_t n = p.nodes.size();
  std::vector<std::size_t> h(n, 0);
  // Covers are acyclic after validation; relax n times for safety otherwise.
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (auto [lo, hi] : p.covers) {
      if (h[hi] < h[lo] + 1) {
        h[hi] = h[lo] + 1;
        changed = true;
      }
    }
    if (!changed) {
      break;
    }
  }
  return h;
}

std::string quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::size_t Poset::index_of(std::string const& id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) {
      return i;
    }
  }
  throw PreconditionError("poset " + name + ": no node '" + id + "'");
}

Poset parse_poset(std::string_view text, std::size_t depth) {
  Poset p;
  enum class Section { header, nodes, covers } section = Section::header;
  std::vector<std::pair<std::string, std::string>> covers;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      continue;
    }
    auto word_end = line.find(' ');
    std::string head = line.substr(0, word_end);
    std::string rest = word_end == std::string::npos ? "" : trim(line.substr(word_end));
    if (head == "poset") {
      p.name = rest;
    } else if (head == "title") {
      p.title = rest;
    } else if (head == "nodes") {
      section = Section::nodes;
    } else if (head == "covers") {
      section = Section::covers;
    } else if (head == "chain") {
      // chain <prefix> <first> | <below> < <above> | <label> [| ids ...]
      auto parts = split(rest, '|');
      auto lead = split(parts[0], ' ');
      if (parts.size() < 3 || lead.size() != 2) {
        throw ParseError("poset line " + std::to_string(line_no) + ": malformed chain");
      }
      std::size_t first = std::stoul(lead[1]);
      auto [below, above] = parse_cover(parts[1], line_no);
      std::string prev = below;
      for (std::size_t n = first; n <= depth; ++n) {
        std::string ns = std::to_string(n);
        VarietyNode node;
        node.id = lead[0] + ns;
        node.label = replace_all(parts[2], "%n", ns);
        std::vector<std::string> attrs;
        for (std::size_t i = 3; i < parts.size(); ++i) {
          attrs.push_back(replace_all(parts[i], "%n", ns));
        }
        parse_attributes(node, attrs, 0, line_no);
        covers.push_back({prev, node.id});
        prev = node.id;
        p.nodes.push_back(std::move(node));
      }
      covers.push_back({prev, above});
    } else if (section == Section::nodes) {
      auto parts = split(line, '|');
      if (parts.size() < 2) {
        throw ParseError("poset line " + std::to_string(line_no) + ": expected '<id> | <label>'");
      }
      VarietyNode node;
      node.id = parts[0];
      node.label = parts[1];
      parse_attributes(node, parts, 2, line_no);
      p.nodes.push_back(std::move(node));
    } else if (section == Section::covers) {
      covers.push_back(parse_cover(line, line_no));
    } else {
      throw ParseError("poset line " + std::to_string(line_no) + ": unexpected '" + line + "'");
    }
  }
  std::set<std::string> ids;
  for (auto const& n : p.nodes) {
    if (!ids.insert(n.id).second) {
      throw ParseError("poset " + p.name + ": duplicate node '" + n.id + "'");
    }
  }
  for (auto const& [lo, hi] : covers) {
    if (!ids.count(lo) || !ids.count(hi)) {
      throw ParseError("poset " + p.name + ": cover " + lo + " < " + hi +
                       " names an unknown node");
    }
    p.covers.push_back({p.index_of(lo), p.index_of(hi)});
  }
  return p;
}

std::vector<std::string> figure_names() { return {"Fig1", "Fig2", "Fig3", "Fig4"}; }

Poset load_figure(std::string const& name, std::size_t depth) {
  if (depth == 0) {
    throw PreconditionError("load_figure: depth must be at least 1");
  }
  static std::map<std::string, std::string> const files{{"Fig1", "figures/fig1.poset"},
                                                        {"Fig2", "figures/fig2.poset"},
                                                        {"Fig3", "figures/fig3.poset"},
                                                        {"Fig4", "figures/fig4.poset"}};
  if (auto it = files.find(name); it != files.end()) {
    return parse_poset(embedded_files().at(it->second), depth);
  }
  if (name.rfind("Fig", 0) == 0 && name.find('.') == std::string::npos) {
    throw PreconditionError("unknown figure '" + name + "'");
  }
  return parse_poset(read_file(name), depth);
}

std::vector<std::vector<bool>> order_relation(Poset const& p) {
  std::size_t n = p.nodes.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
  }
  for (auto [lo, hi] : p.covers) {
    leq[lo][hi] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) {
          leq[i][j] = true;
        }
      }
    }
  }
  return leq;
}

LatticeReport validate_lattice(Poset const& p) {
  std::size_t n = p.nodes.size();
  auto fail = [&](std::string msg, std::size_t a, std::size_t b) {
    return LatticeReport{false, std::move(msg),
                         std::make_pair(p.nodes[a].id, p.nodes[b].id)};
  };
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [lo, hi] : p.covers) {
    if (lo == hi) {
      return fail("cover from a node to itself", lo, hi);
    }
    if (!seen.insert({lo, hi}).second) {
      return fail("duplicate cover", lo, hi);
    }
  }
  auto leq = order_relation(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq[a][b] && leq[b][a]) {
        return fail("covers contain a cycle", a, b);
      }
    }
  }
  // A cover must not be implied by a longer path.
  for (auto [lo, hi] : p.covers) {
    for (std::size_t m = 0; m < n; ++m) {
      if (m != lo && m != hi && leq[lo][m] && leq[m][hi]) {
        return fail("cover is implied through " + p.nodes[m].id, lo, hi);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (bool join : {true, false}) {
        std::vector<std::size_t> bounds;
        for (std::size_t c = 0; c < n; ++c) {
          if (join ? (leq[a][c] && leq[b][c]) : (leq[c][a] && leq[c][b])) {
            bounds.push_back(c);
          }
        }
        std::vector<std::size_t> best;
        for (auto c : bounds) {
          if (std::all_of(bounds.begin(), bounds.end(),
                          [&](std::size_t d) { return join ? leq[c][d] : leq[d][c]; })) {
            best.push_back(c);
          }
        }
        if (best.size() != 1) {
          return fail(std::string(join ? "no least upper bound" : "no greatest lower bound"), a,
                      b);
        }
      }
    }
  }
  return {};
}

std::string to_string(EdgeVerdict v) {
  switch (v) {
    case EdgeVerdict::confirmed_strict:
      return "confirmed-strict";
    case EdgeVerdict::confirmed_inclusion:
      return "confirmed-inclusion";
    case EdgeVerdict::contradicted:
      return "contradicted";
    case EdgeVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

EdgeCheck semantic_check_edge(Poset const& p, std::pair<std::size_t, std::size_t> edge,
                              RelFreeCaps const& caps) {
  auto const& lower = p.nodes.at(edge.first);
  auto const& upper = p.nodes.at(edge.second);
  EdgeCheck out;
  MonoidClass lo_gens;
  MonoidClass up_gens;
  for (auto const& g : lower.generators) {
    lo_gens.push_back(catalog(g));
  }
  for (auto const& g : upper.generators) {
    up_gens.push_back(catalog(g));
  }

  // Inclusion.
  bool included = false;
  if (!lo_gens.empty() && !up_gens.empty()) {
    included = true;
    for (auto const& a : lo_gens) {
      auto v = member(a, up_gens, caps);
      if (auto const* nm = std::get_if<NotMember>(&v)) {
        out.verdict = EdgeVerdict::contradicted;
        out.violation = nm->witness;
        out.detail = a.name() + " is not in the variety generated by " + upper.label;
        return out;
      }
      if (auto const* u = std::get_if<MemberUnknown>(&v)) {
        included = false;
        out.detail = u->report;
        break;
      }
    }
  }
  if (!included && !lo_gens.empty() && !upper.identities.empty()) {
    included = true;
    for (auto const& id : upper.identities) {
      auto r = satisfies(lo_gens, id);
      if (!r.holds) {
        out.verdict = EdgeVerdict::contradicted;
        out.violation = id;
        out.detail = lo_gens[r.failing_member].name() + " fails an identity of " + upper.label;
        return out;
      }
    }
  }
  if (!included) {
    if (out.detail.empty()) {
      out.detail = "no generators for the lower node";
    }
    return out;
  }
  out.verdict = EdgeVerdict::confirmed_inclusion;

  // Strictness: an identity of the lower node failing in the upper one.
  if (up_gens.empty()) {
    out.detail = "upper node has no generators to separate";
    return out;
  }
  std::vector<Identity> candidates = lower.identities;
  candidates.push_back(parse_identity("x = 1"));  // separates the trivial variety
  auto const& stock = stock_identities();
  candidates.insert(candidates.end(), stock.begin(), stock.end());
  for (auto const& name : named_identity_names()) {
    candidates.push_back(named_identity(name));
  }
  for (auto const& id : candidates) {
    try {
      if (satisfies(lo_gens, id).holds && !satisfies(up_gens, id).holds) {
        out.verdict = EdgeVerdict::confirmed_strict;
        out.separating = id;
        out.detail.clear();
        return out;
      }
    } catch (BudgetExceeded const&) {
      continue;
    }
  }
  out.detail = "no separating identity among the candidates";
  return out;
}

std::string dot_export(Poset const& p) {
  std::ostringstream out;
  out << "digraph " << quote(p.name) << " {\n";
  if (!p.nodes.empty()) {
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (auto const& n : p.nodes) {
      out << "  " << quote(n.id) << " [label=" << quote(n.label) << "];\n";
    }
    auto h = heights(p);
    std::map<std::size_t, std::vector<std::string>> ranks;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
      ranks[h[i]].push_back(p.nodes[i].id);
    }
    for (auto const& [rank, ids] : ranks) {
      out << "  { rank=same;";
      for (auto const& id : ids) {
        out << ' ' << quote(id) << ';';
      }
      out << " }\n";
    }
    for (auto [lo, hi] : p.covers) {
      out << "  " << quote(p.nodes[lo].id) << " -> " << quote(p.nodes[hi].id) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json poset_to_json(Poset const& p) {
  nlohmann::json nodes = nlohmann::json::array();
  for (auto const& n : p.nodes) {
    nlohmann::json ids = nlohmann::json::array();
    for (auto const& id : n.identities) {
      ids.push_back(format_identity(id));
    }
    nodes.push_back({{"id", n.id}, {"label", n.label}, {"generators", n.generators},
                     {"identities", ids}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.covers) {
    covers.push_back({p.nodes[lo].id, p.nodes[hi].id});
  }
  return {{"name", p.name}, {"title", p.title}, {"nodes", nodes}, {"covers", covers}};
}

std::size_t m3_subvariety_count(Poset const& fig1) {
  // Fig1 itself plus the intervals above Z2, Z3 and Z2 v Z3.
  return fig1.nodes.size() * 4;
}

}  // namespace eqmon
