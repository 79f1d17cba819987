#include "eqmon/deduction.hpp"
#include "eqmon/embedded_data.hpp"
#include "eqmon/error.hpp"
#include "eqmon/file.hpp"
#include "eqmon/identities.hpp"

namespace eqmon {

namespace {

using nlohmann::json;

std::string const& require_string(json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string("script: missing string field '") + key + "'");
  }
  return j.at(key).get_ref<std::string const&>();
}

Identity resolve_rule(std::string const& text) {
  auto ids = resolve_identities(text);
  if (ids.size() != 1) {
    throw ParseError("script: rule '" + text + "' names a set, not one identity");
  }
  return ids.front();
}

}  // namespace

json step_to_json(DerivationStep const& st) {
  json theta = json::object();
  for (auto const& [v, image] : st.theta) {
    theta[v.name()] = format_word(image);
  }
  json out{{"from", format_word(st.from)},
           {"to", format_word(st.to)},
           {"direction", st.direction == Direction::forward ? "forward" : "backward"},
           {"theta", theta},
           {"left", format_word(st.left)},
           {"right", format_word(st.right)}};
  if (st.rule_name.empty()) {
    out["rule"] = format_identity(st.rule);
  } else {
    out["rule"] = st.rule_name;
  }
  return out;
}

json script_to_json(Script const& s) {
  json rules = json::object();
  for (auto const& [name, id] : s.rules) {
    rules[name] = format_identity(id);
  }
  json steps = json::array();
  for (auto st : s.steps) {
    // Unnamed steps cite the table entry with the same rule, possibly reversed.
    for (auto const& [name, id] : s.rules) {
      if (!st.rule_name.empty()) {
        break;
      }
      if (id == st.rule.reversed() && id != st.rule) {
        st.rule = id;
        st.direction = st.direction == Direction::forward ? Direction::backward
                                                          : Direction::forward;
      }
      if (id == st.rule) {
        st.rule_name = name;
      }
    }
    steps.push_back(step_to_json(st));
  }
  json out{{"name", s.name}, {"rules", rules}, {"target", format_identity(s.target)},
           {"steps", steps}};
  if (!s.note.empty()) {
    out["note"] = s.note;
  }
  if (s.reconstruction) {
    out["reconstruction"] = true;
  }
  return out;
}

Script script_from_json(json const& j) {
  if (!j.is_object()) {
    throw ParseError("script: expected a JSON object");
  }
  Script s;
  s.name = j.value("name", "");
  s.note = j.value("note", "");
  s.reconstruction = j.value("reconstruction", false);
  if (j.contains("rules")) {
    for (auto const& [name, value] : j.at("rules").items()) {
      if (!value.is_string()) {
        throw ParseError("script: rule '" + name + "' must be a string");
      }
      s.rules[name] = resolve_rule(value.get<std::string>());
    }
  }
  s.target = resolve_rule(require_string(j, "target"));
  json const steps = j.value("steps", json::array());
  for (auto const& js : steps) {
    DerivationStep st;
    st.from = parse_word(require_string(js, "from"));
    st.to = parse_word(require_string(js, "to"));
    std::string const& rule = require_string(js, "rule");
    auto it = s.rules.find(rule);
    if (it == s.rules.end()) {
      throw ParseError("script: step cites '" + rule + "', which is not in the rule table");
    }
    st.rule = it->second;
    st.rule_name = rule;
    std::string dir = js.value("direction", "forward");
    if (dir != "forward" && dir != "backward") {
      throw ParseError("script: direction must be forward or backward, got '" + dir + "'");
    }
    st.direction = dir == "forward" ? Direction::forward : Direction::backward;
    json const theta = js.value("theta", json::object());
    for (auto const& [v, image] : theta.items()) {
      st.theta[Variable(v)] = parse_word(image.get<std::string>());
    }
    st.left = parse_word(js.value("left", ""));
    st.right = parse_word(js.value("right", ""));
    s.steps.push_back(std::move(st));
  }
  return s;
}

Script load_script(std::string const& name_or_path) {
  auto const& files = embedded_files();
  std::string text;
  if (auto it = files.find("scripts/" + name_or_path); it != files.end()) {
    text = std::string(it->second);
  } else {
    text = read_file(name_or_path);
  }
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError("script '" + name_or_path + "': " + e.what());
  }
  return script_from_json(j);
}

std::vector<std::string> shipped_script_names() {
  std::vector<std::string> out;
  for (auto const& [key, text] : embedded_files()) {
    if (key.rfind("scripts/", 0) == 0) {
      out.push_back(key.substr(8));
    }
  }
  return out;
}

DerivationReport check_script(Script const& s) {
  std::vector<Identity> sigma;
  for (auto const& [name, id] : s.rules) {
    sigma.push_back(id);
  }
  return check_derivation(s.steps, sigma, s.target);
}

}  // namespace eqmon
