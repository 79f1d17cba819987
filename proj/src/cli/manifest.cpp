#include "eqmon/manifest.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include "eqmon/catalog.hpp"
#include "eqmon/deduction.hpp"
#include "eqmon/embedded_data.hpp"
#include "eqmon/error.hpp"
#include "eqmon/file.hpp"
#include "eqmon/identities.hpp"
#include "eqmon/monoid_io.hpp"

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

// Blank-separated tokens; double quotes group and are stripped.
std::vector<std::string> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      in_token = true;
    } else if (!quoted && (c == ' ' || c == '\t')) {
      if (in_token) {
        out.push_back(std::move(cur));
        cur.clear();
        in_token = false;
      }
    } else {
      cur.push_back(c);
      in_token = true;
    }
  }
  if (quoted) {
    throw ParseError("manifest line " + std::to_string(line_no) + ": unterminated quote");
  }
  if (in_token) {
    out.push_back(std::move(cur));
  }
  return out;
}

struct KindSpec {
  std::size_t arity;
  std::vector<std::string> options;
};

std::map<std::string, KindSpec> const& kinds() {
  static std::map<std::string, KindSpec> const k{
      {"expect-holds", {2, {}}},
      {"expect-fails", {2, {"witness"}}},
      {"expect-isoterm-verdict", {3, {"witness"}}},
      {"expect-member-verdict", {3, {"witness"}}},
      {"expect-derivation-valid", {1, {}}},
      {"expect-order", {2, {}}},
      {"expect-iso", {2, {}}},
  };
  return k;
}

Identity single_identity(std::string const& text) {
  auto ids = resolve_identities(text);
  if (ids.size() != 1) {
    throw PreconditionError("'" + text + "' names " + std::to_string(ids.size()) +
                            " identities; expected one");
  }
  return ids[0];
}

std::string verdict_name(IsotermVerdict const& v) {
  if (std::holds_alternative<NotIsoterm>(v)) {
    return "not-isoterm";
  }
  if (std::holds_alternative<Certified>(v)) {
    return "certified";
  }
  return "bounded";
}

std::string verdict_name(MemberVerdict const& v) {
  if (std::holds_alternative<Member>(v)) {
    return "member";
  }
  if (std::holds_alternative<NotMember>(v)) {
    return "not-member";
  }
  return "unknown";
}

void run_holds(ManifestEntry const& e, EntryResult& r) {
  auto m = resolve_monoid(e.args[0]);
  r.passed = true;
  nlohmann::json checked = nlohmann::json::array();
  for (auto const& id : resolve_identities(e.args[1])) {
    auto s = satisfies(m, id);
    nlohmann::json item{{"identity", format_identity(id)}, {"holds", s.holds}};
    if (!s.holds) {
      item["witness"] = format_assignment(m, *s.witness, id);
      r.passed = false;
      r.detail = format_identity(id) + " fails at " + format_assignment(m, *s.witness, id);
    }
    checked.push_back(std::move(item));
  }
  r.evidence["identities"] = std::move(checked);
}

void run_fails(ManifestEntry const& e, EntryResult& r) {
  auto m = resolve_monoid(e.args[0]);
  auto id = single_identity(e.args[1]);
  auto s = satisfies(m, id);
  r.evidence["identity"] = format_identity(id);
  if (s.holds) {
    r.detail = "identity holds";
    return;
  }
  auto witness = format_assignment(m, *s.witness, id);
  r.evidence["witness"] = witness;
  r.evidence["values"] = {m.label(s.lhs_value), m.label(s.rhs_value)};
  r.passed = true;
  if (auto it = e.options.find("witness"); it != e.options.end() && it->second != witness) {
    r.passed = false;
    r.detail = "first witness is " + witness + ", expected " + it->second;
  }
}

void run_isoterm(ManifestEntry const& e, EntryResult& r) {
  auto m = resolve_monoid(e.args[0]);
  auto w = parse_word(e.args[1]);
  auto const& expected = e.args[2];
  if (expected == "no-witness") {
    auto wit = isoterm_falsify(m, w);
    r.passed = !wit;
    if (wit) {
      r.evidence["witness"] = format_word(*wit);
      r.detail = "falsifier found " + format_word(*wit);
    }
    return;
  }
  auto v = isoterm(m, w);
  auto got = verdict_name(v);
  r.evidence["verdict"] = got;
  if (auto const* ni = std::get_if<NotIsoterm>(&v)) {
    r.evidence["witness"] = format_word(ni->witness);
    // Re-verify: a different word equal to w in m.
    bool ok = ni->witness != w && satisfies(m, Identity{w, ni->witness}).holds;
    r.evidence["witness_reverified"] = ok;
    if (!ok) {
      r.detail = "witness does not re-verify";
      return;
    }
  } else if (auto const* b = std::get_if<BoundedOnly>(&v)) {
    r.evidence["bounded_length"] = b->length;
    r.evidence["reason"] = b->reason;
  }
  r.passed = got == expected;
  if (!r.passed) {
    r.detail = "verdict " + got + ", expected " + expected;
    return;
  }
  if (auto it = e.options.find("witness"); it != e.options.end()) {
    auto want = parse_word(it->second);
    auto const& ni = std::get<NotIsoterm>(v);
    if (ni.witness != want) {
      r.passed = false;
      r.detail = "witness " + format_word(ni.witness) + ", expected " + format_word(want);
    }
  }
}

void run_member(ManifestEntry const& e, EntryResult& r) {
  auto a = resolve_monoid(e.args[0]);
  auto b = resolve_monoid_class(e.args[1]);
  auto v = member(a, b);
  auto got = verdict_name(v);
  r.evidence["verdict"] = got;
  if (auto const* nm = std::get_if<NotMember>(&v)) {
    r.evidence["witness"] = format_identity(nm->witness);
    bool ok = satisfies(b, nm->witness).holds && !satisfies(a, nm->witness).holds;
    r.evidence["witness_reverified"] = ok;
    if (!ok) {
      r.detail = "witness does not re-verify";
      return;
    }
  } else if (auto const* u = std::get_if<MemberUnknown>(&v)) {
    r.evidence["report"] = u->report;
  }
  r.passed = got == e.args[2];
  if (!r.passed) {
    r.detail = "verdict " + got + ", expected " + e.args[2];
    return;
  }
  if (auto it = e.options.find("witness"); it != e.options.end()) {
    auto want = single_identity(it->second);
    auto const& got_id = std::get<NotMember>(v).witness;
    if (!(got_id == want) && !(got_id == want.reversed())) {
      r.passed = false;
      r.detail = "witness " + format_identity(got_id) + ", expected " + format_identity(want);
    }
  }
}

void run_derivation(ManifestEntry const& e, EntryResult& r) {
  auto s = load_script(e.args[0]);
  auto rep = check_script(s);
  r.evidence["script"] = s.name;
  r.evidence["steps"] = s.steps.size();
  r.passed = rep.ok;
  if (!rep.ok) {
    r.evidence["failing_step"] = rep.failing_step;
    r.detail = rep.message;
  }
}

void run_order(ManifestEntry const& e, EntryResult& r) {
  auto m = resolve_monoid(e.args[0]);
  std::size_t want = std::stoul(e.args[1]);
  r.evidence["order"] = m.size();
  r.passed = m.size() == want;
  if (!r.passed) {
    r.detail = "order " + std::to_string(m.size()) + ", expected " + std::to_string(want);
  }
}

void run_iso(ManifestEntry const& e, EntryResult& r) {
  auto a = resolve_monoid(e.args[0]);
  auto b = resolve_monoid(e.args[1]);
  auto iso = find_isomorphism(a, b);
  r.passed = iso.has_value();
  if (iso) {
    nlohmann::json map = nlohmann::json::object();
    for (Element x = 0; x < a.size(); ++x) {
      map[a.label(x)] = b.label(iso->map[x]);
    }
    r.evidence["map"] = std::move(map);
  } else {
    r.detail = "no isomorphism";
  }
}

// Malformed expectations are parse errors, so nothing runs.
void check_values(ManifestEntry const& e, std::string const& where) {
  auto one_of = [&](std::string const& v, std::vector<std::string> const& allowed) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      throw ParseError(where + "unexpected verdict '" + v + "'");
    }
  };
  if (e.kind == "expect-order" &&
      (e.args[1].empty() || e.args[1].find_first_not_of("0123456789") != std::string::npos)) {
    throw ParseError(where + "'" + e.args[1] + "' is not a number");
  }
  if (e.kind == "expect-isoterm-verdict") {
    one_of(e.args[2], {"not-isoterm", "certified", "bounded", "no-witness"});
  }
  if (e.kind == "expect-member-verdict") {
    one_of(e.args[2], {"member", "not-member", "unknown"});
  }
  if (e.options.count("witness") &&
      ((e.kind == "expect-isoterm-verdict" && e.args[2] != "not-isoterm") ||
       (e.kind == "expect-member-verdict" && e.args[2] != "not-member"))) {
    throw ParseError(where + "a witness only goes with a negative verdict");
  }
}

}  // namespace

FiniteMonoid resolve_monoid(std::string const& spec) {
  std::error_code ec;
  if (spec.find('/') != std::string::npos || std::filesystem::is_regular_file(spec, ec)) {
    return parse_monoid(read_file(spec));
  }
  return catalog(spec);
}

MonoidClass resolve_monoid_class(std::string const& spec) {
  MonoidClass out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    auto t = trim(cur);
    if (t.empty()) {
      throw ParseError("empty monoid in class '" + spec + "'");
    }
    out.push_back(resolve_monoid(t));
    cur.clear();
  };
  for (char c : spec) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    }
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    // '#' starts a comment outside quotes.
    bool quoted = false;
    std::size_t cut = raw.size();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '"') {
        quoted = !quoted;
      } else if (raw[i] == '#' && !quoted) {
        cut = i;
        break;
      }
    }
    auto line = trim(std::string_view(raw).substr(0, cut));
    if (line.empty()) {
      continue;
    }
    auto tokens = tokenize(line, line_no);
    auto where = "manifest line " + std::to_string(line_no) + ": ";
    auto it = kinds().find(tokens[0]);
    if (it == kinds().end()) {
      throw ParseError(where + "unknown kind '" + tokens[0] + "'");
    }
    auto const& spec = it->second;
    if (tokens.size() < 1 + spec.arity) {
      throw ParseError(where + tokens[0] + " takes " + std::to_string(spec.arity) + " arguments");
    }
    ManifestEntry e;
    e.line = line_no;
    e.kind = tokens[0];
    e.text = line;
    e.args.assign(tokens.begin() + 1, tokens.begin() + 1 + static_cast<std::ptrdiff_t>(spec.arity));
    for (std::size_t i = 1 + spec.arity; i < tokens.size(); i += 2) {
      if (std::find(spec.options.begin(), spec.options.end(), tokens[i]) == spec.options.end()) {
        throw ParseError(where + "unexpected '" + tokens[i] + "'");
      }
      if (i + 1 >= tokens.size()) {
        throw ParseError(where + "'" + tokens[i] + "' needs a value");
      }
      e.options[tokens[i]] = tokens[i + 1];
    }
    check_values(e, where);
    out.push_back(std::move(e));
  }
  return out;
}

EntryResult run_entry(ManifestEntry const& entry, std::size_t index) {
  EntryResult r;
  r.index = index;
  r.entry = entry;
  try {
    if (entry.kind == "expect-holds") {
      run_holds(entry, r);
    } else if (entry.kind == "expect-fails") {
      run_fails(entry, r);
    } else if (entry.kind == "expect-isoterm-verdict") {
      run_isoterm(entry, r);
    } else if (entry.kind == "expect-member-verdict") {
      run_member(entry, r);
    } else if (entry.kind == "expect-derivation-valid") {
      run_derivation(entry, r);
    } else if (entry.kind == "expect-order") {
      run_order(entry, r);
    } else if (entry.kind == "expect-iso") {
      run_iso(entry, r);
    } else {
      throw PreconditionError("unknown manifest kind '" + entry.kind + "'");
    }
  } catch (std::exception const& ex) {
    r.passed = false;
    r.detail = std::string("error: ") + ex.what();
  }
  return r;
}

ManifestReport run_manifest(std::vector<ManifestEntry> const& entries, std::size_t jobs) {
  ManifestReport report;
  report.results.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      report.results[i] = run_entry(entries[i], i);
    }
  };
  std::size_t n = std::min(std::max<std::size_t>(jobs, 1), entries.size());
  if (n <= 1) {
    worker();
    return report;
  }
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) {
      pool.emplace_back(worker);
    }
  }
  return report;
}

std::size_t ManifestReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](auto const& r) { return r.passed; }));
}

std::size_t ManifestReport::failed() const { return results.size() - passed(); }

nlohmann::json report_to_json(ManifestReport const& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (auto const& e : r.results) {
    nlohmann::json j{{"index", e.index},
                     {"line", e.entry.line},
                     {"kind", e.entry.kind},
                     {"args", e.entry.args},
                     {"passed", e.passed},
                     {"evidence", e.evidence}};
    if (!e.entry.options.empty()) {
      j["options"] = e.entry.options;
    }
    if (!e.detail.empty()) {
      j["detail"] = e.detail;
    }
    entries.push_back(std::move(j));
  }
  return {{"total", r.results.size()},
          {"passed", r.passed()},
          {"failed", r.failed()},
          {"ok", r.ok()},
          {"entries", std::move(entries)}};
}

std::string report_summary(ManifestReport const& r) {
  std::ostringstream out;
  for (auto const& e : r.results) {
    out << (e.passed ? "PASS " : "FAIL ") << "line " << e.entry.line << ": " << e.entry.text;
    if (!e.detail.empty()) {
      out << "  [" << e.detail << "]";
    }
    out << '\n';
  }
  out << r.passed() << " passed, " << r.failed() << " failed\n";
  return out.str();
}

std::string_view shipped_manifest() { return embedded_files().at("paper.manifest"); }

}  // namespace eqmon
