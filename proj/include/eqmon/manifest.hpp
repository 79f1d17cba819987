#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/monoid.hpp"

namespace eqmon {

// A catalog name, or a path to a monoid file when one exists at that path.
FiniteMonoid resolve_monoid(std::string const& spec);
// Comma-separated monoids standing for their join; commas inside
// parentheses (as in "M(xy, yx)") do not split.
MonoidClass resolve_monoid_class(std::string const& spec);

// One line of a manifest:
//   expect-holds <monoid> <identity>
//   expect-fails <monoid> <identity> [witness <assignment>]
//   expect-isoterm-verdict <monoid> <word> <verdict> [witness <word>]
//       verdict: not-isoterm | certified | bounded | no-witness
//       (no-witness runs only the falsifier and passes when it finds nothing)
//   expect-member-verdict <A> <class> <member | not-member | unknown>
//       [witness <identity>]
//   expect-derivation-valid <script name or path>
//   expect-order <monoid> <n>
//   expect-iso <A> <B>
// Arguments are separated by blanks; double quotes group. Identities may be
// "@name" references.
struct ManifestEntry {
  std::size_t line = 0;
  std::string kind;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;
  std::string text;  // the source line
};

// ParseError (with the line number) on unknown kinds or wrong arity.
std::vector<ManifestEntry> parse_manifest(std::string_view text);

struct EntryResult {
  std::size_t index = 0;
  ManifestEntry entry;
  bool passed = false;
  std::string detail;
  nlohmann::json evidence = nlohmann::json::object();
};

struct ManifestReport {
  std::vector<EntryResult> results;  // in entry order
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

EntryResult run_entry(ManifestEntry const& entry, std::size_t index = 0);
// Entries run on up to jobs threads; the report keeps entry order.
ManifestReport run_manifest(std::vector<ManifestEntry> const& entries, std::size_t jobs = 1);

nlohmann::json report_to_json(ManifestReport const& r);
// One PASS/FAIL line per entry and a closing count.
std::string report_summary(ManifestReport const& r);

// The manifest shipped with the library.
std::string_view shipped_manifest();

}  // namespace eqmon
