#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eqmon/canonical.hpp"
#include "eqmon/word.hpp"

namespace eqmon {

enum class Direction { forward, backward };

// One direct deduction: forward rewrites left (lhs theta) right into
// left (rhs theta) right; backward rewrites an rhs instance into an lhs one.
struct DerivationStep {
  Word from;
  Word to;
  Identity rule;
  std::string rule_name;  // reference into a rule table, may be empty
  Direction direction = Direction::forward;
  Substitution theta;
  Word left;
  Word right;

  friend bool operator==(DerivationStep const&, DerivationStep const&) = default;
};

// True when from and to are exactly the two instances the step describes.
bool reconstructs(DerivationStep const& step);

// A single step turning target.lhs into target.rhs (or the reverse) using
// rule, preferring the smallest context.
std::optional<DerivationStep> directly_deducible(Identity const& target, Identity const& rule);

struct DerivationReport {
  bool ok = true;
  std::size_t failing_step = 0;
  std::string message;
};

// Steps must reconstruct, use a rule of sigma (in either orientation), chain
// from one to the next, and visit pairwise distinct words. With a target,
// the endpoints must be its two sides, in either order.
DerivationReport check_derivation(std::vector<DerivationStep> const& script,
                                   std::vector<Identity> const& sigma,
                                   std::optional<Identity> const& target = std::nullopt);

// The step with from and to exchanged.
DerivationStep reversed(DerivationStep const& step);
// The script read backwards.
std::vector<DerivationStep> reversed(std::vector<DerivationStep> const& script);
// Applies theta and then wraps every word in left ... right.
std::vector<DerivationStep> lift(std::vector<DerivationStep> const& script,
                                 Substitution const& theta, Word const& left,
                                 Word const& right);

struct DeriveCaps {
  std::size_t max_length = 64;
  std::size_t max_variables = 12;
  std::size_t max_nodes = 400'000;
};

enum class DeriveStatus { found, exhausted, cap_reached };

struct DeriveResult {
  DeriveStatus status = DeriveStatus::exhausted;
  std::vector<DerivationStep> script;
  std::size_t nodes = 0;
};

// Bidirectional breadth-first search over words connected by direct
// deduction. exhausted means no derivation exists among words within the
// length and variable caps; cap_reached means the node cap stopped the
// search first. Neither is a refutation in general.
DeriveResult derive_bounded(std::vector<Identity> const& sigma, Identity const& target,
                            DeriveCaps const& caps = {});

// Every word reachable from w in one step, with the step.
std::vector<DerivationStep> neighbours(Word const& w, std::vector<Identity> const& sigma,
                                       DeriveCaps const& caps = {});

// Derivation scripts with named rules.
struct Script {
  std::string name;
  std::string note;
  bool reconstruction = false;  // chain authored here rather than displayed
  std::map<std::string, Identity> rules;
  Identity target;
  std::vector<DerivationStep> steps;
};

// Rule values are identity text or "@name" references to named identities.
Script script_from_json(nlohmann::json const& j);
nlohmann::json script_to_json(Script const& s);
nlohmann::json step_to_json(DerivationStep const& step);
// A shipped script by file name ("sigma1_to_sigma2.json"), else a file path.
Script load_script(std::string const& name_or_path);
std::vector<std::string> shipped_script_names();
// Checks the script against its own rule table and target.
DerivationReport check_script(Script const& s);

struct CanonicalResult {
  CanonicalWord form;
  std::vector<DerivationStep> script;  // uses the four E^1 basis identities
};

// A canonical word equal to w modulo the E^1 basis, with a derivation.
// Simple variables become the separators and each segment between them keeps
// its non-simple variables squared in first-occurrence order. CapExceeded if
// a lemma derivation does not fit the caps.
CanonicalResult to_canonical(Word const& w, DeriveCaps const& caps = {});
// The canonical word to_canonical aims for.
CanonicalWord canonical_target(Word const& w);

// Identities (p_1 h_1 ... p_m h_m) x^2 y^2 = (p_1 h_1 ... p_m h_m) y^2 x^2
// with p_i one of 1, x^2, y^2, x^2 y^2, y^2 x^2.
enum class Block { one, x2, y2, x2y2, y2x2 };

struct LambdaIdentity {
  Variable x;
  Variable y;
  std::vector<std::pair<Block, Variable>> prefix;
  bool xy_first = true;  // left side ends in x^2 y^2

  Identity identity() const;
};

// Follows the constructive reduction: least differing block, longest common
// suffix, one identity per square moved past. Requires u, v canonical,
// distinct, and equal under both syntactic criteria.
std::vector<LambdaIdentity> lambda_reduce(Word const& u, Word const& v);

struct SigmaClass {
  bool infinite = false;
  std::size_t n = 0;  // index when finite
  Identity identity() const;
  std::string name() const;
};

SigmaClass sigma_classify(LambdaIdentity const& lambda);

std::string format_block(Block b, Variable x, Variable y);

}  // namespace eqmon
