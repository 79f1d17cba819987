// Command-line front end. Exit codes: 0 success, 1 semantic failure (an
// identity fails, a verdict is negative, a manifest entry fails), 2 usage or
// input error.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "eqmon/catalog.hpp"
#include "eqmon/deduction.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"
#include "eqmon/file.hpp"
#include "eqmon/identities.hpp"
#include "eqmon/lattice.hpp"
#include "eqmon/manifest.hpp"
#include "eqmon/monoid_io.hpp"

using namespace eqmon;
using nlohmann::json;

namespace {

constexpr int ok_exit = 0;
constexpr int semantic_failure = 1;
constexpr int usage_error = 2;

bool as_json = false;

void emit(json const& j, std::string const& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

Identity one_identity(std::string const& text) {
  auto ids = resolve_identities(text);
  if (ids.size() != 1) {
    throw PreconditionError("'" + text + "' names " + std::to_string(ids.size()) +
                            " identities; expected one");
  }
  return ids[0];
}

std::string class_name(MonoidClass const& ms) {
  std::string out;
  for (auto const& m : ms) {
    out += (out.empty() ? "" : " v ") + m.name();
  }
  return out;
}

// Rules file: one identity or "@name" per line, '#' comments.
std::vector<Identity> read_rules(std::string const& path) {
  std::vector<Identity> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    for (auto const& id : resolve_identities(line)) {
      out.push_back(id);
    }
  }
  return out;
}

std::string format_steps(std::vector<DerivationStep> const& steps) {
  std::ostringstream out;
  if (!steps.empty()) {
    out << "  " << format_word(steps.front().from) << '\n';
  }
  for (auto const& st : steps) {
    out << "  = " << format_word(st.to) << "    ["
        << (st.rule_name.empty() ? format_identity(st.rule) : st.rule_name)
        << (st.direction == Direction::forward ? "" : ", reversed") << "]\n";
  }
  return out.str();
}

json steps_json(std::vector<DerivationStep> const& steps) {
  json out = json::array();
  for (auto const& st : steps) {
    out.push_back(step_to_json(st));
  }
  return out;
}

int monoid_show(std::string const& spec) {
  auto m = resolve_monoid(spec);
  emit(monoid_to_json(m), format_monoid(m));
  return ok_exit;
}

int monoid_validate(std::string const& spec) {
  auto m = resolve_monoid(spec);
  auto r = validate(m);
  json j{{"monoid", m.name()}, {"ok", r.ok}, {"message", r.message}};
  std::string text = m.name() + ": " + (r.ok ? "valid" : "invalid: " + r.message);
  if (r.witness) {
    auto [a, b, c] = *r.witness;
    j["witness"] = {m.label(a), m.label(b), m.label(c)};
    text += " (" + m.label(a) + ", " + m.label(b) + ", " + m.label(c) + ")";
  }
  emit(j, text + "\n");
  return r.ok ? ok_exit : semantic_failure;
}

int monoid_result(FiniteMonoid const& m) {
  emit(monoid_to_json(m), format_monoid(m));
  return ok_exit;
}

int check(std::string const& monoids, std::string const& identity) {
  auto ms = resolve_monoid_class(monoids);
  json results = json::array();
  std::string text;
  bool all = true;
  for (auto const& id : resolve_identities(identity)) {
    auto r = satisfies(ms, id);
    json item{{"identity", format_identity(id)}, {"holds", r.holds}};
    text += format_identity(id) + ": ";
    if (r.holds) {
      text += "holds in " + class_name(ms) + "\n";
    } else {
      all = false;
      auto const& m = ms[r.failing_member];
      auto wit = format_assignment(m, *r.result.witness, id);
      item["monoid"] = m.name();
      item["witness"] = wit;
      item["values"] = {m.label(r.result.lhs_value), m.label(r.result.rhs_value)};
      text += "fails in " + m.name() + " at " + wit + " (" + m.label(r.result.lhs_value) +
              " != " + m.label(r.result.rhs_value) + ")\n";
    }
    results.push_back(std::move(item));
  }
  emit({{"monoids", class_name(ms)}, {"holds", all}, {"results", results}}, text);
  return all ? ok_exit : semantic_failure;
}

int isoterm_cmd(std::string const& spec, std::string const& word, bool certify) {
  auto m = resolve_monoid(spec);
  auto w = parse_word(word);
  IsotermBudget budget;
  budget.certify = certify;
  auto v = isoterm(m, w, budget);
  json j{{"monoid", m.name()}, {"word", format_word(w)}};
  std::string text;
  int code = semantic_failure;
  if (auto const* ni = std::get_if<NotIsoterm>(&v)) {
    j["verdict"] = "not-isoterm";
    j["witness"] = format_word(ni->witness);
    text = "not an isoterm: " + format_word(w) + " = " + format_word(ni->witness) + " holds in " +
           m.name() + "\n";
  } else if (std::holds_alternative<Certified>(v)) {
    j["verdict"] = "certified";
    text = "isoterm (certified)\n";
    code = ok_exit;
  } else {
    auto const& b = std::get<BoundedOnly>(v);
    j["verdict"] = "bounded";
    j["length"] = b.length;
    j["reason"] = b.reason;
    text = "no witness up to length " + std::to_string(b.length) + "; not certified: " +
           b.reason + "\n";
  }
  emit(j, text);
  return code;
}

int member_cmd(std::string const& a_spec, std::string const& b_spec) {
  auto a = resolve_monoid(a_spec);
  auto b = resolve_monoid_class(b_spec);
  auto v = member(a, b);
  json j{{"monoid", a.name()}, {"class", class_name(b)}};
  std::string text;
  int code = semantic_failure;
  if (std::holds_alternative<Member>(v)) {
    j["verdict"] = "member";
    text = a.name() + " lies in the variety generated by " + class_name(b) + "\n";
    code = ok_exit;
  } else if (auto const* nm = std::get_if<NotMember>(&v)) {
    j["verdict"] = "not-member";
    j["witness"] = format_identity(nm->witness);
    auto s = satisfies(a, nm->witness);
    j["assignment"] = format_assignment(a, *s.witness, nm->witness);
    text = "not a member: " + format_identity(nm->witness) + " holds in " + class_name(b) +
           " and fails in " + a.name() + " at " + format_assignment(a, *s.witness, nm->witness) +
           "\n";
  } else {
    j["verdict"] = "unknown";
    j["report"] = std::get<MemberUnknown>(v).report;
    text = "unknown: " + std::get<MemberUnknown>(v).report + "\n";
  }
  emit(j, text);
  return code;
}

int deduce(std::string const& rules_path, std::string const& script_path,
           std::string const& identity, DeriveCaps const& caps) {
  if (!script_path.empty()) {
    auto s = load_script(script_path);
    std::vector<Identity> sigma;
    if (!rules_path.empty()) {
      sigma = read_rules(rules_path);
    } else {
      for (auto const& [name, id] : s.rules) {
        sigma.push_back(id);
      }
    }
    auto target = identity.empty() ? s.target : one_identity(identity);
    auto r = check_derivation(s.steps, sigma, target);
    json j{{"script", s.name}, {"valid", r.ok}, {"steps", s.steps.size()}};
    std::string text = s.name + ": " + std::to_string(s.steps.size()) + " steps, ";
    if (r.ok) {
      text += "valid\n";
    } else {
      j["failing_step"] = r.failing_step;
      j["message"] = r.message;
      text += "invalid at step " + std::to_string(r.failing_step) + ": " + r.message + "\n";
    }
    emit(j, text);
    return r.ok ? ok_exit : semantic_failure;
  }
  if (rules_path.empty() || identity.empty()) {
    throw PreconditionError("deduce needs --rules and an identity, or --script");
  }
  auto sigma = read_rules(rules_path);
  auto target = one_identity(identity);
  auto r = derive_bounded(sigma, target, caps);
  static char const* const names[] = {"found", "exhausted", "cap-reached"};
  std::string status = names[static_cast<int>(r.status)];
  json j{{"target", format_identity(target)}, {"status", status}, {"nodes", r.nodes}};
  std::string text = status + " after " + std::to_string(r.nodes) + " words\n";
  if (r.status == DeriveStatus::found) {
    j["steps"] = steps_json(r.script);
    text += format_steps(r.script);
  }
  emit(j, text);
  return r.status == DeriveStatus::found ? ok_exit : semantic_failure;
}

int canonical_cmd(std::string const& word) {
  auto w = parse_word(word);
  auto r = to_canonical(w);
  auto form = r.form.word();
  json j{{"word", format_word(w)}, {"canonical", format_word(form)},
         {"steps", steps_json(r.script)}};
  emit(j, format_word(form) + "\n" + format_steps(r.script));
  return ok_exit;
}

int sigma_classify_cmd(std::string const& identity) {
  auto id = one_identity(identity);
  auto u = to_canonical(id.lhs).form.word();
  auto v = to_canonical(id.rhs).form.word();
  json j{{"identity", format_identity(id)}, {"canonical", format_identity(Identity{u, v})}};
  if (u == v) {
    j["lambdas"] = json::array();
    emit(j, "holds in E^1: both sides have the canonical form " + format_word(u) + "\n");
    return ok_exit;
  }
  auto lq = lq_equiv_syntactic(u, v);
  if (!lq.l_holds || !lq.q_holds) {
    j["error"] = "not valid in L2^1 v Q^1";
    j["l_holds"] = lq.l_holds;
    j["q_holds"] = lq.q_holds;
    emit(j, "not valid in L2^1 v Q^1 (L2^1: " + std::string(lq.l_holds ? "holds" : "fails") +
                ", Q^1: " + (lq.q_holds ? "holds" : "fails") + ")\n");
    return semantic_failure;
  }
  json lambdas = json::array();
  std::string text = format_identity(Identity{u, v}) + "\n";
  for (auto const& lam : lambda_reduce(u, v)) {
    auto cls = sigma_classify(lam);
    lambdas.push_back({{"lambda", format_identity(lam.identity())},
                       {"class", cls.name()},
                       {"sigma", format_identity(cls.identity())}});
    text += "  " + format_identity(lam.identity()) + "  ~  " + cls.name() + "\n";
  }
  j["lambdas"] = lambdas;
  emit(j, text);
  return ok_exit;
}

int lattice_validate(std::string const& fig, std::size_t depth, bool edges) {
  auto p = load_figure(fig, depth);
  auto r = validate_lattice(p);
  json j{{"figure", p.name}, {"nodes", p.nodes.size()}, {"covers", p.covers.size()},
         {"lattice", r.ok}};
  std::string text = p.name + ": " + std::to_string(p.nodes.size()) + " nodes, " +
                     std::to_string(p.covers.size()) + " covers, " +
                     (r.ok ? "a lattice" : "not a lattice: " + r.message);
  if (r.pair) {
    j["message"] = r.message;
    j["pair"] = {r.pair->first, r.pair->second};
    text += " (" + r.pair->first + ", " + r.pair->second + ")";
  }
  text += "\n";
  if (p.name == "Fig1") {
    j["m3_subvarieties"] = m3_subvariety_count(p);
    text += "subvarieties of the variety of all monoids of order three: " +
            std::to_string(p.nodes.size()) + " x 4 = " +
            std::to_string(m3_subvariety_count(p)) + "\n";
  }
  bool contradicted = false;
  if (edges) {
    json checks = json::array();
    for (auto e : p.covers) {
      auto c = semantic_check_edge(p, e);
      contradicted = contradicted || c.verdict == EdgeVerdict::contradicted;
      json item{{"lower", p.nodes[e.first].id},
                {"upper", p.nodes[e.second].id},
                {"verdict", to_string(c.verdict)}};
      std::string line = "  " + p.nodes[e.first].id + " < " + p.nodes[e.second].id + ": " +
                         to_string(c.verdict);
      if (c.separating) {
        item["separating"] = format_identity(*c.separating);
        line += " by " + format_identity(*c.separating);
      }
      if (c.violation) {
        item["violation"] = format_identity(*c.violation);
        line += ", violated " + format_identity(*c.violation);
      }
      if (!c.detail.empty()) {
        item["detail"] = c.detail;
        line += " (" + c.detail + ")";
      }
      checks.push_back(std::move(item));
      text += line + "\n";
    }
    j["edges"] = std::move(checks);
  }
  emit(j, text);
  return r.ok && !contradicted ? ok_exit : semantic_failure;
}

int lattice_dot(std::string const& fig, std::size_t depth) {
  auto p = load_figure(fig, depth);
  auto dot = dot_export(p);
  emit({{"figure", p.name}, {"dot", dot}}, dot);
  return ok_exit;
}

int verify_paper(std::string const& path, std::size_t jobs) {
  auto entries = parse_manifest(path.empty() ? std::string(shipped_manifest()) : read_file(path));
  auto report = run_manifest(entries, jobs);
  auto j = report_to_json(report);
  j["manifest"] = path.empty() ? "paper.manifest (shipped)" : path;
  emit(j, report_summary(report));
  return report.ok() ? ok_exit : semantic_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equational reasoning over finite monoids"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "Machine-readable output");

  int code = ok_exit;
  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) {
    sub->add_flag("--json", as_json, "Machine-readable output");
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  // monoid
  auto* monoid = app.add_subcommand("monoid", "Build and inspect monoids");
  monoid->require_subcommand(1);
  std::string m_arg;
  std::string m_arg2;
  std::vector<std::string> m_words;
  auto* show = monoid->add_subcommand("show", "Print a catalog monoid or monoid file");
  show->add_option("monoid", m_arg, "Catalog name or file")->required();
  bind(show, [&] { return monoid_show(m_arg); });
  auto* val = monoid->add_subcommand("validate", "Check associativity and the identity");
  val->add_option("monoid", m_arg, "Catalog name or file")->required();
  bind(val, [&] { return monoid_validate(m_arg); });
  auto* prod = monoid->add_subcommand("product", "Direct product of two monoids");
  prod->add_option("a", m_arg)->required();
  prod->add_option("b", m_arg2)->required();
  bind(prod, [&] {
    return monoid_result(direct_product(resolve_monoid(m_arg), resolve_monoid(m_arg2)));
  });
  auto* rees = monoid->add_subcommand("rees", "Rees quotient M(W) of the free monoid");
  rees->add_option("words", m_words, "Words of W")->required();
  bind(rees, [&] {
    std::vector<Word> ws;
    for (auto const& w : m_words) {
      ws.push_back(parse_word(w));
    }
    return monoid_result(rees_quotient(ws));
  });
  auto* adj = monoid->add_subcommand("adjoin1", "Adjoin a new identity element");
  adj->add_option("monoid", m_arg)->required();
  bind(adj, [&] { return monoid_result(adjoin_identity(resolve_monoid(m_arg))); });
  monoid->add_flag("--json", as_json, "Machine-readable output");

  // check
  std::string c_monoid;
  std::string c_identity;
  auto* chk = app.add_subcommand("check", "Does a monoid (or a join) satisfy an identity?");
  chk->add_option("monoid", c_monoid, "Monoid, or comma-separated monoids for a join")
      ->required();
  chk->add_option("identity", c_identity, "\"u = v\" or @name")->required();
  bind(chk, [&] { return check(c_monoid, c_identity); });

  // isoterm
  std::string i_monoid;
  std::string i_word;
  bool no_certify = false;
  auto* iso = app.add_subcommand("isoterm", "Is a word an isoterm for a monoid?");
  iso->add_option("monoid", i_monoid)->required();
  iso->add_option("word", i_word)->required();
  iso->add_flag("--no-certify", no_certify, "Run only the falsifier");
  bind(iso, [&] { return isoterm_cmd(i_monoid, i_word, !no_certify); });

  // member
  std::string mem_a;
  std::string mem_b;
  auto* mem = app.add_subcommand("member", "Does A lie in the variety generated by B?");
  mem->add_option("A", mem_a)->required();
  mem->add_option("B", mem_b, "Monoid, or comma-separated monoids for a join")->required();
  bind(mem, [&] { return member_cmd(mem_a, mem_b); });

  // deduce
  std::string d_rules;
  std::string d_script;
  std::string d_identity;
  DeriveCaps caps;
  auto* ded = app.add_subcommand("deduce", "Search for, or check, a derivation");
  ded->add_option("--rules", d_rules, "File of identities, one per line");
  ded->add_option("--script", d_script, "Check a derivation script instead of searching");
  ded->add_option("identity", d_identity, "\"u = v\" or @name");
  ded->add_option("--max-nodes", caps.max_nodes, "Search node cap")->capture_default_str();
  ded->add_option("--max-length", caps.max_length, "Longest word visited")
      ->capture_default_str();
  bind(ded, [&] { return deduce(d_rules, d_script, d_identity, caps); });

  // canonical
  std::string k_word;
  auto* can = app.add_subcommand("canonical", "E^1 canonical form with a derivation");
  can->add_option("word", k_word)->required();
  bind(can, [&] { return canonical_cmd(k_word); });

  // sigma classify
  std::string s_identity;
  auto* sig = app.add_subcommand("sigma", "Sigma-chain tools");
  sig->require_subcommand(1);
  sig->add_flag("--json", as_json, "Machine-readable output");
  auto* cls = sig->add_subcommand(
      "classify", "Reduce an identity of L2^1 v Q^1 to lambda identities and sigma classes");
  cls->add_option("identity", s_identity)->required();
  bind(cls, [&] { return sigma_classify_cmd(s_identity); });

  // lattice
  std::string l_fig;
  std::size_t l_depth = 3;
  bool l_edges = false;
  auto* lat = app.add_subcommand("lattice", "Figure posets");
  lat->require_subcommand(1);
  lat->add_flag("--json", as_json, "Machine-readable output");
  auto* lval = lat->add_subcommand("validate", "Check the lattice axioms");
  lval->add_option("figure", l_fig, "Fig1 .. Fig4 or a poset file")->required();
  lval->add_option("--depth", l_depth, "Truncation of parametric chains")->capture_default_str();
  lval->add_flag("--edges", l_edges, "Also check every edge semantically");
  bind(lval, [&] { return lattice_validate(l_fig, l_depth, l_edges); });
  auto* ldot = lat->add_subcommand("dot", "Graphviz export");
  ldot->add_option("figure", l_fig)->required();
  ldot->add_option("--depth", l_depth)->capture_default_str();
  bind(ldot, [&] { return lattice_dot(l_fig, l_depth); });

  // verify-paper
  std::string v_manifest;
  std::size_t v_jobs = 1;
  auto* ver = app.add_subcommand("verify-paper", "Run a manifest of expectations");
  ver->add_option("--manifest", v_manifest, "Manifest file (default: the shipped one)");
  ver->add_option("--jobs", v_jobs, "Worker threads")->capture_default_str();
  bind(ver, [&] { return verify_paper(v_manifest, v_jobs); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return usage_error;
  }

  try {
    code = action ? action() : usage_error;
  } catch (ParseError const& e) {
    std::cerr << "eqmon: " << e.what() << '\n';
    return usage_error;
  } catch (PreconditionError const& e) {
    std::cerr << "eqmon: " << e.what() << '\n';
    return usage_error;
  } catch (IoError const& e) {
    std::cerr << "eqmon: " << e.what() << '\n';
    return usage_error;
  } catch (std::exception const& e) {
    std::cerr << "eqmon: " << e.what() << '\n';
    return semantic_failure;
  }
  return code;
}
