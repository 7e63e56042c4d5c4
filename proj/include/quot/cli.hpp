#pragma once

// Command-line front end.  Everything the `quot` binary does goes through
// run_cli so that tests can drive it with string streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "quot/ladder.hpp"

namespace quot {

/// args excludes the program name.  Returns the process exit code: 0, or 2/3/4
/// for input, bound and internal errors.  Reports go to `out`, a one-line
/// JSON error object to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

Json molien_report(const Subgroup& g, int degree);
/// Generators of k[V]^G: fundamental invariants when G is a reflection group,
/// otherwise a degree sweep.
Json invariants_report(const Subgroup& g, const AnalysisConfig& cfg);
Json relations_report(const Subgroup& g, const AnalysisConfig& cfg);
Json reflections_report(const Subgroup& g);

struct FixtureOutcome {
  std::string name;
  bool golden_match = false;
  bool golden_missing = false;
  /// First differing JSON pointer when the golden does not match.
  std::string golden_diff;
  std::vector<std::string> semantic_failures;
  std::vector<std::string> failed_checks;
  bool passed() const { return golden_match && semantic_failures.empty() && failed_checks.empty(); }
};

/// Runs every fixture listed in dir/manifest.json.  With write_goldens the
/// expected reports are (re)written first.
std::vector<FixtureOutcome> verify_fixtures(const std::string& dir, bool write_goldens = false);
Json fixtures_to_json(const std::vector<FixtureOutcome>& outcomes);

/// Directory of the in-repo fixture suite, fixed at build time.
std::string default_fixture_dir();

}  // namespace quot
