#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oortlab/manifest.hpp"

namespace oortlab {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNotOGroup = 1;
inline constexpr int kDisagreement = 1;  // validate
inline constexpr int kInputError = 2;    // parse, range or I/O error
inline constexpr int kRouteDisagreement = 3;
inline constexpr int kCapExceeded = 4;
inline constexpr int kTheoremViolation = 5;
}  // namespace exit_code

/// Text for standard output and standard error plus the process exit code.
struct CommandOutput {
  int exit_code = exit_code::kOk;
  std::string out;
  std::string err;
};

enum class RouteChoice { Definition, Criterion, Both };

/// "def", "crit" or "both". Throws ParseError.
RouteChoice parse_route(const std::string& text);

/// `table` switches JSON output to a human-readable summary.
CommandOutput cmd_construct(const std::string& spec, bool table = false);
CommandOutput cmd_check(const std::string& spec, std::uint64_t p, RouteChoice route,
                        bool table = false);
CommandOutput cmd_audit(const std::string& spec, std::uint64_t p, bool table = false);

/// Outcome for one (manifest entry, prime) pair.
struct EntryResult {
  std::string spec;
  std::size_t line = 0;
  std::uint64_t p = 0;
  std::uint64_t order = 0;
  std::optional<bool> definition;
  std::optional<bool> criterion;
  std::optional<bool> expected;
  bool witnesses_verified = true;
  std::vector<std::string> violations;  // structural report and claim failures
  std::string error;                    // set when a route could not run
  double timing_ms = 0;
  std::string json_line;

  bool agree() const { return definition && criterion && *definition == *criterion; }
  bool expect_ok() const { return !expected || (definition && *definition == *expected); }
  bool ok() const {
    return error.empty() && agree() && expect_ok() && witnesses_verified && violations.empty();
  }
};

struct ValidationSummary {
  std::size_t entries = 0;
  std::vector<EntryResult> results;  // manifest order
  double elapsed_ms = 0;

  bool ok() const;
};

/// Runs both routes, witness checks and the structural audits for every (entry, prime).
/// Entries run on `jobs` threads (0 = hardware concurrency); results keep manifest order.
ValidationSummary validate_manifest(const CatalogueManifest& manifest, unsigned jobs = 1);

struct ValidateOptions {
  unsigned jobs = 1;
  std::optional<std::string> out;  // per-entry JSON lines
  bool table = false;
};

CommandOutput cmd_validate(const std::string& manifest_path, const ValidateOptions& options);

}  // namespace oortlab
