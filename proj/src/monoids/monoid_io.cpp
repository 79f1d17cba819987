#include "eqmon/monoid_io.hpp"

#include <sstream>

namespace eqmon {

namespace {

std::vector<std::string> tokens(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) {
    out.push_back(t);
  }
  return out;
}

}  // namespace

FiniteMonoid parse_monoid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name;
  std::vector<std::string> labels;
  std::optional<std::string> identity;
  bool identity_seen = false;
  std::vector<std::vector<std::string>> rows;
  bool in_table = false;
  std::size_t lineno = 0;
  auto fail = [&](std::string const& what) {
    throw ParseError("monoid file line " + std::to_string(lineno) + ": " + what);
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto tok = tokens(line);
    if (tok.empty()) {
      continue;
    }
    if (in_table) {
      rows.push_back(std::move(tok));
      continue;
    }
    if (tok[0] == "monoid") {
      if (tok.size() != 2) {
        fail("expected 'monoid <name>'");
      }
      name = tok[1];
    } else if (tok[0] == "elements") {
      labels.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "identity") {
      if (tok.size() != 2) {
        fail("expected 'identity <label>'");
      }
      identity_seen = true;
      if (tok[1] != "none") {
        identity = tok[1];
      }
    } else if (tok[0] == "table") {
      in_table = true;
    } else {
      fail("unknown directive '" + tok[0] + "'");
    }
  }
  if (name.empty() || labels.empty() || !identity_seen || !in_table) {
    throw ParseError("monoid file needs monoid, elements, identity and table");
  }
  std::size_t n = labels.size();
  if (rows.size() != n) {
    throw Error("monoid '" + name + "': table has " + std::to_string(rows.size()) +
                " rows, expected " + std::to_string(n));
  }
  FiniteMonoid index_only(name, labels, std::vector<Element>(n * n, 0),
                          std::nullopt);
  std::vector<Element> table;
  for (auto const& row : rows) {
    if (row.size() != n) {
      throw Error("monoid '" + name + "': row with " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(n));
    }
    for (auto const& l : row) {
      table.push_back(index_only.index_of(l));
    }
  }
  std::optional<Element> id;
  if (identity) {
    id = index_only.index_of(*identity);
  }
  return FiniteMonoid(name, labels, std::move(table), id);
}

std::string format_monoid(FiniteMonoid const& m) {
  std::ostringstream out;
  out << "monoid " << m.name() << "\nelements";
  std::size_t width = 1;
  for (auto const& l : m.labels()) {
    out << ' ' << l;
    width = std::max(width, l.size());
  }
  out << "\nidentity " << (m.identity() ? m.label(*m.identity()) : "none")
      << "\ntable\n";
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < m.size(); ++b) {
      std::string const& l = m.label(m.mul(a, b));
      out << l;
      if (b + 1 < m.size()) {
        out << std::string(width + 1 - l.size(), ' ');
      }
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json monoid_to_json(FiniteMonoid const& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Element a = 0; a < m.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Element b = 0; b < m.size(); ++b) {
      row.push_back(m.label(m.mul(a, b)));
    }
    rows.push_back(row);
  }
  return {{"name", m.name()},
          {"elements", m.labels()},
          {"identity", m.identity() ? nlohmann::json(m.label(*m.identity()))
                                    : nlohmann::json(nullptr)},
          {"table", rows}};
}

FiniteMonoid monoid_from_json(nlohmann::json const& j) {
  std::ostringstream text;
  text << "monoid " << j.at("name").get<std::string>() << "\nelements";
  for (auto const& l : j.at("elements")) {
    text << ' ' << l.get<std::string>();
  }
  text << "\nidentity "
       << (j.at("identity").is_null() ? std::string("none")
                                      : j.at("identity").get<std::string>())
       << "\ntable\n";
  for (auto const& row : j.at("table")) {
    for (auto const& l : row) {
      text << l.get<std::string>() << ' ';
    }
    text << '\n';
  }
  return parse_monoid(text.str());
}

}  // namespace eqmon
